#pragma once

// Representation indices, b-ratios and Casimir operators of the even ideals
// acting on the odd part, plus the trace identities that tie them to K.

#include "superein/families.hpp"
#include "superein/supercore.hpp"

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace superein {

using IdealHandle = IdealBlock;

struct RatioFit
{
  double value = 0.0;
  /// max |lhs - value * rhs| / max |rhs| over all basis pairs
  double residual = 0.0;
};

/// K_i(X,Y) = tr(ad X ad Y) computed inside the ideal, on its own coordinates.
CMatrix ideal_killing_form(const LieSuperAlgebra& alg, const IdealHandle& ideal);

/// tr(rho(X) rho(Y)) for the action of the ideal on the given odd coordinates.
CMatrix odd_trace_form(const LieSuperAlgebra& alg, const IdealHandle& ideal, const std::vector<std::size_t>& odd_coords);

/// Index of the action of a simple ideal on the whole odd part. Throws
/// InputError for an abelian ideal and DegeneracyError if K_i vanishes.
RatioFit representation_index(const LieSuperAlgebra& alg, const IdealHandle& ideal);

/// Index of the action on an invariant coordinate subspace of the odd part
/// (e.g. one copy of a standard representation). Throws InputError if the
/// subspace is not invariant under the ideal.
RatioFit representation_index_on(const LieSuperAlgebra& alg, const IdealHandle& ideal,
                                 const std::vector<std::size_t>& odd_coords);

struct CasimirResult
{
  /// dim_odd x dim_odd matrix in the odd coordinates.
  LinearOperator op;
  Complex scalar;
  double off_scalar_residual = 0.0;
  /// max entry of [C, rho(X)] over the ideal's basis.
  double commutator_residual = 0.0;
};

/// C = sum_j ad e_j o ad e_j^* on the odd part, e_j^* dual for form|ideal.
CasimirResult casimir_on_odd(const LieSuperAlgebra& alg, const BilinearFormMatrix& form, const IdealHandle& ideal);

/// tr(C)/dim_odd in exact arithmetic from an exact Gram matrix.
Rational casimir_scalar_exact(const LieSuperAlgebra& alg, const RationalMatrix& gram, const IdealHandle& ideal);

/// B|k_i = b_i K_i by least squares.
RatioFit b_ratio(const LieSuperAlgebra& alg, const BilinearFormMatrix& form, const IdealHandle& ideal);

/// max over odd basis pairs of |K(X,Y) - 2 sum_i B(X, C_i Y)|.
double verify_killing_casimir(const LieSuperAlgebra& alg, const BilinearFormMatrix& form);

struct TraceIdentityResiduals
{
  double commutator_trace = 0.0; // tr(ad([X,Y]|k_i)|odd) = 0
  double ad_ad_trace = 0.0;      // tr(ad X ad Y|k_i) = B(X, C_i Y)
  double nested_trace = 0.0;     // tr(Z -> [X,[Y,Z]|k_i]) = -B(X, C_i Y)

  double max() const { return std::max({commutator_trace, ad_ad_trace, nested_trace}); }
};

TraceIdentityResiduals verify_trace_identities(const LieSuperAlgebra& alg, const BilinearFormMatrix& form,
                                               const IdealHandle& ideal);

/// Recomputes dims, indices, b-ratios and Casimir scalars from the realized
/// algebra and compares them with the tabulated FamilyData.
struct DataComparison
{
  struct Row
  {
    std::string quantity;
    std::string ideal;
    double tabulated = 0.0;
    double computed = 0.0;
  };
  std::vector<Row> rows;
  double max_deviation = 0.0;
};

DataComparison compare_with_table(const Realization& real);

/// {"check","family","residual","pass"}
nlohmann::json verification_entry(const std::string& check, const std::string& family, double residual, double tol);

} // namespace superein
