#pragma once

// Basic classical Lie superalgebras: parameter specs, tabulated scalar data and
// explicit supermatrix realizations of the classical series.

#include "superein/supercore.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace superein {

enum class FamilyKind {
  A,        // A(m,n) = sl(m+1|n+1), m != n
  Ann,      // A(n,n) = psl(n+1|n+1)
  B,        // B(m,n) = osp(2m+1|2n)
  C,        // C(n) = osp(2|2n-2)
  D,        // D(m,n) = osp(2m|2n), m - n != 1
  Dn1n,     // D(n+1,n), n >= 2
  D21alpha, // D(2,1;alpha)
  F4,
  G3
};

/// Canonical bi-invariant form used to write the Einstein system.
enum class FormKind {
  Killing, // B = K (non-degenerate Killing form)
  Case2,   // A(n,n): B = 2(n+1) str(XY)
  Case6,   // D(n+1,n): B = 2n str(XY)
  Case7    // D(2,1;alpha): B = 2 str(XY)
};

std::string to_string(FamilyKind kind);
std::string to_string(FormKind kind);
FormKind form_kind_from_string(const std::string& s);

struct FamilySpec
{
  FamilyKind kind = FamilyKind::A;
  int m = 0;
  int n = 0;
  double alpha = 1.0;

  /// Routes by letter ("A", "B", "C", "D", "D21a", "F4", "G3") and validates
  /// ranges. A(n,n) and D(n+1,n) get their own kinds; D(2,1) becomes D(2,1;1).
  static FamilySpec make(const std::string& letter, int m, int n, double alpha = 1.0);

  static FamilySpec a(int m, int n) { return make("A", m, n); }
  static FamilySpec b(int m, int n) { return make("B", m, n); }
  static FamilySpec c(int n) { return make("C", 0, n); }
  static FamilySpec d(int m, int n) { return make("D", m, n); }
  static FamilySpec d21(double alpha) { return make("D21a", 0, 0, alpha); }
  static FamilySpec f4() { return make("F4", 0, 0); }
  static FamilySpec g3() { return make("G3", 0, 0); }

  /// "A(2,1)", "C(3)", "D(2,1;2.5)", "F(4)" ...
  std::string name() const;
  /// Family letter for grouping ("A", "B", ..., "D21a").
  std::string letter() const;
  /// True when this library has a supermatrix realization for the spec.
  bool realizable() const;

  bool operator==(const FamilySpec& other) const = default;
};

nlohmann::json spec_to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const nlohmann::json& doc);

struct IdealData
{
  std::string name;
  IdealKind kind = IdealKind::Simple;
  std::size_t dim = 0;
  /// Index of the odd part as a representation; zero for the abelian k_0.
  Rational l = 0;
  /// B|k_i = b_i K_i; zero for k_0.
  Rational b = 0;
  /// Casimir scalar of B|k_i on the odd part.
  Rational gamma = 0;
};

struct FamilyData
{
  FamilySpec spec;
  FormKind form = FormKind::Killing;
  bool has_k0 = false;
  bool killing_nondegenerate = true;
  std::size_t dim_odd = 0;
  /// Aligned with the metric variables: k_0 first when present, then k_1..k_s.
  std::vector<IdealData> ideals;

  std::size_t s() const { return ideals.size() - (has_k0 ? 1 : 0); }
  std::size_t num_vars() const { return ideals.size(); }
  /// Variable names "x0", "x1", ... matching the ideal numbering k_0, k_1, ...
  std::vector<std::string> variable_names() const;
};

/// Tabulated data for every family. Pure and total over valid specs.
FamilyData family_data(const FamilySpec& spec);

/// Sum over ideals of gamma_i (1/2 for B = K, 0 for the degenerate-K forms).
Rational gamma_sum(const FamilyData& data);

struct Realization
{
  LieSuperAlgebra algebra;
  FamilySpec spec;
  BilinearFormMatrix canonical_form;
  /// Exact Gram of str(XY) on the chosen representatives.
  RationalMatrix supertrace_gram;
  /// canonical = scale * supertrace_gram.
  Rational form_scale = 0;
  FamilyData data;
  /// Size of the defining supermatrices (p|q).
  std::size_t p = 0;
  std::size_t q = 0;
};

Realization build_sl_super(int m, int n);
Realization build_psl(int n);
Realization build_osp(int l, int k);

/// Dispatches on the spec; throws ScopeError for F(4), G(3) and D(2,1;alpha != 1).
Realization realize(const FamilySpec& spec);

/// Enumeration used by the report: A(m,n) for all 0 <= m <= max_m, 0 <= n <= max_n
/// except (0,0); B(m,n) with n >= 1; C(n) for 3 <= n <= max(3, max_n);
/// D(m,n) for 2 <= m <= max(2, max_m), 1 <= n <= max_n; then F(4), G(3) and
/// D(2,1;alpha) for alpha in {1, 2.5}. Duplicate names are dropped.
std::vector<FamilySpec> catalog(int max_m, int max_n);

} // namespace superein
