#pragma once

// The algebraic Einstein system for block-scaled metrics, its real solutions,
// exact eliminations for the two-ideal series, printed closed forms, real-form
// folding and brute-force Ricci verification.

#include "superein/curvature.hpp"
#include "superein/families.hpp"
#include "superein/polynomial.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superein {

enum class RicciStamp { Unchecked, Verified, NotApplicable, Failed };
enum class Provenance { Solver, PrintedCatalog, Lifted };

std::string to_string(RicciStamp s);
std::string to_string(Provenance p);

/// 1/4 (l x_var^2 - 1) = c b x_var
struct QuadraticEquation
{
  std::size_t var = 0;
  Rational l = 0;
  Rational b = 0;
};

struct EinsteinSystem
{
  FamilyData data;
  FormKind form_kind = FormKind::Killing;
  /// c = -x_0 / 4, present when k_0 exists (B = K only).
  bool has_k0_equation = false;
  std::vector<QuadraticEquation> quadratics;
  /// sum_i (x_i/2 - 1) gamma_i = c, one gamma per variable (k_0 included).
  std::vector<Rational> trace_gamma;
  /// sum_i gamma_i: 1/2 for B = K, 0 otherwise.
  Rational gamma_total = 0;

  std::size_t num_vars() const { return trace_gamma.size(); }
  std::vector<std::string> variable_names() const { return data.variable_names(); }

  /// Killing normalization: sum_i gamma_i x_i = 2c + 1. Returns the
  /// coefficients (gamma_i) and throws InputError for the K = 0 forms.
  std::vector<Rational> killing_trace_coefficients() const;

  /// Residuals in order: k_0 equation (if present), quadratics, trace.
  std::vector<double> residuals(const std::vector<double>& x, double c) const;
  double max_residual(const std::vector<double>& x, double c) const;
  /// sum_i gamma_i x_i - (2c + 1); only meaningful for B = K.
  double killing_trace_residual(const std::vector<double>& x, double c) const;
};

/// Throws InputError when form_kind does not fit the family.
EinsteinSystem build_system(const FamilyData& data, FormKind form_kind);
/// build_system(family_data(spec), family_data(spec).form)
EinsteinSystem build_system(const FamilySpec& spec);

struct EinsteinSolution
{
  std::vector<double> x;
  double c = 0.0;
  double residual = 0.0;
  RicciStamp ricci_verified = RicciStamp::Unchecked;
  Provenance provenance = Provenance::Solver;
  /// Printed values given only to a few digits.
  bool approximate = false;
  /// Largest |ric - c g| / scale over both Ricci routes (after verification).
  double ricci_deviation = 0.0;
  /// Block with the largest deviation when verification failed.
  std::string offending_block;
};

struct SolveOptions
{
  double cmax = 10.0;
  double step = 1e-4;
  double bisect_tol = 1e-13;
};

struct SolveResult
{
  std::vector<EinsteinSolution> solutions;
  /// Discarded degenerate roots and similar events.
  std::vector<std::string> notes;
  double cmax = 10.0;
};

SolveResult solve_detailed(const EinsteinSystem& sys, const SolveOptions& opts = {});
std::vector<EinsteinSolution> solve(const EinsteinSystem& sys, const SolveOptions& opts = {});

/// Printed (A, B, C, D) for the B(m,n) and D(m,n) quartics; nullopt otherwise.
std::optional<std::array<Rational, 4>> printed_quartic_coefficients(const FamilySpec& spec);

struct EliminationResult
{
  std::size_t pivot = 0;
  /// Exact polynomial in the pivot with the spurious x^k stripped.
  Polynomial polynomial;
  bool has_unit_root = false;
  /// polynomial / (x - 1) when x = 1 is a root, scaled to the printed leading coefficient.
  Polynomial cubic;
  std::optional<std::array<Rational, 4>> printed;
  /// Printed cubic equals the computed cofactor exactly (after scaling).
  bool printed_matches = false;
  /// Distinct real roots of `polynomial` (all nonzero).
  std::vector<double> roots;
};

/// Substitutes c from the pivot quadratic, clears denominators in the trace
/// equation and eliminates the remaining variable by a resultant. Supports at
/// most one simple ideal besides the pivot (k_0 allowed). Throws InputError on
/// any other shape.
EliminationResult elimination_polynomial(const EinsteinSystem& sys, std::optional<std::size_t> pivot = std::nullopt);

/// Closed-form and printed numeric solutions, provenance printed_catalog.
std::vector<EinsteinSolution> known_solutions(const FamilySpec& spec);
/// The printed list is claimed to be the full real solution set.
bool known_solutions_complete(const FamilySpec& spec);
/// Matching tolerance for a printed solution.
double printed_tolerance(const EinsteinSolution& sol);

using FoldingPairs = std::vector<std::pair<std::size_t, std::size_t>>;

/// Variable-index pairs that merge in the real forms considered here:
/// (x1, x2) for A(n,n) and D(2,1;alpha), none elsewhere.
FoldingPairs default_folding(const FamilySpec& spec);

struct FoldResult
{
  bool liftable = false;
  EinsteinSolution solution;
  std::string reason;
};

/// Merges each pair (i, j) into the variable i; rejects pairs whose values
/// differ by more than 1e-9.
FoldResult lift_real_form(const EinsteinSolution& sol, const FoldingPairs& folding);

/// Computes ric by the Koszul/direct route and by the closed form, compares
/// both with c times the metric and stamps the result.
EinsteinSolution verify_solution(const Realization& real, const EinsteinSolution& sol, double tol = 1e-8);

/// max-norm distance over (x, c); infinity on length mismatch.
double solution_distance(const EinsteinSolution& a, const EinsteinSolution& b);

nlohmann::json solution_to_json(const EinsteinSolution& sol);
/// {"family","params","form","solutions":[...]}
nlohmann::json solutions_to_json(const FamilySpec& spec, FormKind form, const std::vector<EinsteinSolution>& sols);

} // namespace superein
