#pragma once

// Catalog-wide reproduction report: per-family data, solutions, verification
// stamps and the solution-count summary, as markdown, JSON or CSV.

#include "superein/einstein.hpp"
#include "superein/invariants.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace superein {

struct ReportOptions
{
  int max_m = 3;
  int max_n = 3;
  unsigned long long seed = 1;
  unsigned jobs = 1;
  double cmax = 10.0;
  /// Random metrics per realized family for the route-equivalence sweep.
  std::size_t route_draws = 3;
  double ricci_tol = 1e-8;
  double residual_tol = 1e-10;
};

struct PrintedMatch
{
  EinsteinSolution printed;
  /// Distance to the closest solver solution.
  double distance = 0.0;
  bool matched = false;
};

struct FamilyReport
{
  FamilySpec spec;
  FamilyData data;
  bool realized = false;
  std::string scope_note;

  // Structure checks (realized only).
  std::size_t dim = 0;
  double jacobi_residual = 0.0;
  double killing_max = 0.0;
  double form_bi_invariance = 0.0;
  std::optional<DataComparison> comparison;
  double route_connection = 0.0;
  double route_ricci = 0.0;

  std::vector<EinsteinSolution> solutions;
  std::vector<std::string> solver_notes;
  std::vector<PrintedMatch> printed;
  /// Printed list claimed complete and equal to the solver's set.
  std::optional<bool> printed_equal;
  std::optional<EliminationResult> elimination;
  /// Elimination roots and solver x_1 values pair up within 1e-8.
  std::optional<bool> elimination_bijection;
  std::vector<FoldResult> folds;

  std::size_t expected_min = 2;
  bool expected_exact = false;
  bool needs_mixed_flatness = false;
  bool has_flat = false;
  bool has_non_flat = false;

  bool count_ok() const;
  bool mixed_ok() const { return !needs_mixed_flatness || (has_flat && has_non_flat); }
  bool residuals_ok(double tol) const;
  bool ricci_ok() const;
};

struct Report
{
  ReportOptions options;
  std::vector<FamilyReport> families;

  bool all_counts_ok() const;
  bool all_verified() const;
};

/// Analyzes one catalog entry (pure; safe to run concurrently).
FamilyReport analyze_family(const FamilySpec& spec, const ReportOptions& opts);

/// Runs analyze_family over catalog(max_m, max_n) with up to opts.jobs
/// workers; entries stay in catalog order.
Report build_report(const ReportOptions& opts);

std::string report_markdown(const Report& report);
nlohmann::json report_json(const Report& report);
std::string report_csv(const Report& report);

/// One CSV header plus a row per solution (x0..x3 blank-padded by variable name).
std::string solutions_csv_header();
std::string solutions_csv_rows(const FamilySpec& spec, const FamilyData& data, FormKind form,
                               const std::vector<EinsteinSolution>& sols);

/// "m=2;n=1" or "alpha=2.5"
std::string params_string(const FamilySpec& spec);

/// Fixed-format numbers used by every textual output.
std::string format_value(double v);
std::string format_residual(double r);

} // namespace superein
