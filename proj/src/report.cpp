#include "superein/report.hpp"

#include "superein/curvature.hpp"
#include "superein/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

namespace superein {

std::string format_value(double v)
{
  if (v == 0.0) {
    v = 0.0; // drop the sign of -0
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string format_residual(double r)
{
  if (r < 1e-12) {
    return "<1e-12";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1e", r);
  return buf;
}

std::string params_string(const FamilySpec& spec)
{
  switch (spec.kind) {
  case FamilyKind::D21alpha: return "alpha=" + format_value(spec.alpha);
  case FamilyKind::F4:
  case FamilyKind::G3: return "";
  case FamilyKind::C:
  case FamilyKind::Ann: return "n=" + std::to_string(spec.n);
  default: return "m=" + std::to_string(spec.m) + ";n=" + std::to_string(spec.n);
  }
}

bool FamilyReport::count_ok() const
{
  return expected_exact ? solutions.size() == expected_min : solutions.size() >= expected_min;
}

bool FamilyReport::residuals_ok(double tol) const
{
  return std::all_of(solutions.begin(), solutions.end(), [&](const EinsteinSolution& s) { return s.residual < tol; });
}

bool FamilyReport::ricci_ok() const
{
  return std::none_of(solutions.begin(), solutions.end(),
                      [](const EinsteinSolution& s) { return s.ricci_verified == RicciStamp::Failed; });
}

bool Report::all_counts_ok() const
{
  return std::all_of(families.begin(), families.end(),
                     [](const FamilyReport& f) { return f.count_ok() && f.mixed_ok(); });
}

bool Report::all_verified() const
{
  return std::all_of(families.begin(), families.end(), [&](const FamilyReport& f) {
    return f.ricci_ok() && f.residuals_ok(options.residual_tol);
  });
}

FamilyReport analyze_family(const FamilySpec& spec, const ReportOptions& opts)
{
  FamilyReport r;
  r.spec = spec;
  r.data = family_data(spec);
  const EinsteinSystem sys = build_system(r.data, r.data.form);
  SolveOptions so;
  so.cmax = opts.cmax;
  SolveResult sr = solve_detailed(sys, so);
  r.solutions = std::move(sr.solutions);
  r.solver_notes = std::move(sr.notes);

  r.expected_exact = spec.kind == FamilyKind::A || spec.kind == FamilyKind::F4;
  r.expected_min = r.expected_exact ? 1 : 2;
  r.needs_mixed_flatness = spec.kind == FamilyKind::Dn1n || spec.kind == FamilyKind::D21alpha;
  for (const auto& s : r.solutions) {
    r.has_flat = r.has_flat || std::abs(s.c) < 1e-12;
    r.has_non_flat = r.has_non_flat || std::abs(s.c) > 1e-6;
  }

  if (spec.realizable()) {
    r.realized = true;
    const Realization real = realize(spec);
    const auto& alg = real.algebra;
    r.dim = alg.dim();
    r.jacobi_residual = check_super_jacobi(alg).residual;
    r.killing_max = killing_form(alg).max_abs_entry();
    r.form_bi_invariance = check_form(alg, real.canonical_form).bi_invariance_residual;
    r.comparison = compare_with_table(real);
    for (std::size_t d = 0; d < opts.route_draws; ++d) {
      const MetricParams p = random_params(r.data.num_vars(), opts.seed, d);
      const BilinearFormMatrix metric = metric_from_params(real, p);
      const Connection koszul = levi_civita_koszul(alg, metric);
      r.route_connection = std::max(r.route_connection, connection_deviation(koszul, levi_civita_blockwise(real, p)));
      const RicciDirect direct = ricci_direct(alg, metric, koszul);
      const BilinearFormMatrix closed = ricci_closed_form(real, p);
      const double scale = std::max(1.0, metric.max_abs_entry());
      r.route_ricci = std::max(r.route_ricci, (direct.ric.gram - closed.gram).cwiseAbs().maxCoeff() / scale);
    }
    for (auto& s : r.solutions) {
      s = verify_solution(real, s, opts.ricci_tol);
    }
  } else {
    r.scope_note = "equation layer only: no matrix realization for " + spec.name();
    for (auto& s : r.solutions) {
      s.ricci_verified = RicciStamp::NotApplicable;
    }
  }

  for (const auto& k : known_solutions(spec)) {
    PrintedMatch pm;
    pm.printed = k;
    pm.distance = std::numeric_limits<double>::infinity();
    for (const auto& s : r.solutions) {
      pm.distance = std::min(pm.distance, solution_distance(k, s));
    }
    pm.matched = pm.distance <= printed_tolerance(k);
    r.printed.push_back(pm);
  }
  if (known_solutions_complete(spec)) {
    r.printed_equal = r.printed.size() == r.solutions.size() &&
                      std::all_of(r.printed.begin(), r.printed.end(), [](const PrintedMatch& p) { return p.matched; });
  }

  if (spec.kind == FamilyKind::B || spec.kind == FamilyKind::D) {
    r.elimination = elimination_polynomial(sys);
    const std::size_t pivot = r.elimination->pivot;
    const auto& roots = r.elimination->roots;
    bool ok = roots.size() == r.solutions.size();
    for (double root : roots) {
      ok = ok && std::any_of(r.solutions.begin(), r.solutions.end(),
                             [&](const EinsteinSolution& s) { return std::abs(s.x[pivot] - root) <= 1e-8; });
    }
    r.elimination_bijection = ok;
  }

  const FoldingPairs pairs = default_folding(spec);
  if (!pairs.empty()) {
    for (const auto& s : r.solutions) {
      r.folds.push_back(lift_real_form(s, pairs));
    }
  }
  return r;
}

Report build_report(const ReportOptions& opts)
{
  Report report;
  report.options = opts;
  const std::vector<FamilySpec> specs = catalog(opts.max_m, opts.max_n);
  report.families.resize(specs.size());
  std::vector<std::exception_ptr> errors(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        report.families[i] = analyze_family(specs[i], opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(specs.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Markdown

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string vector_string(const std::vector<double>& x)
{
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += (i ? ", " : "") + format_value(x[i]);
  }
  return s + ")";
}

void solution_table(std::ostringstream& os, const std::vector<std::string>& names,
                    const std::vector<EinsteinSolution>& sols)
{
  os << "| # |";
  for (const auto& n : names) {
    os << " " << n << " |";
  }
  os << " c | residual | Ricci | deviation |\n|---|";
  for (std::size_t i = 0; i < names.size(); ++i) {
    os << "---|";
  }
  os << "---|---|---|---|\n";
  for (std::size_t k = 0; k < sols.size(); ++k) {
    const auto& s = sols[k];
    os << "| " << k + 1 << " |";
    for (double v : s.x) {
      os << " " << format_value(v) << " |";
    }
    os << " " << format_value(s.c) << " | " << format_residual(s.residual) << " | " << to_string(s.ricci_verified);
    if (!s.offending_block.empty()) {
      os << " (" << s.offending_block << ")";
    }
    os << " | "
       << (s.ricci_verified == RicciStamp::NotApplicable ? std::string("-") : format_residual(s.ricci_deviation))
       << " |\n";
  }
}

void family_markdown(std::ostringstream& os, const FamilyReport& f)
{
  os << "## " << f.spec.name() << "\n\n";
  os << "Form: " << to_string(f.data.form) << ". ";
  if (f.realized) {
    os << "Realized with dim " << f.dim << " (" << f.dim - f.data.dim_odd << "|" << f.data.dim_odd << ").\n\n";
  } else {
    os << "Not realized (" << f.scope_note << ").\n\n";
  }

  os << "### Data\n\n";
  os << "| variable | ideal | kind | dim | l | b | gamma |\n|---|---|---|---|---|---|---|\n";
  const auto names = f.data.variable_names();
  for (std::size_t i = 0; i < f.data.ideals.size(); ++i) {
    const auto& id = f.data.ideals[i];
    os << "| " << names[i] << " | " << id.name << " | " << to_string(id.kind) << " | " << id.dim << " | "
       << to_string(id.l) << " | " << to_string(id.b) << " | " << to_string(id.gamma) << " |\n";
  }
  os << "\nodd dim " << f.data.dim_odd << ", sum of gamma " << to_string(gamma_sum(f.data)) << ".";
  if (f.comparison) {
    os << " Recomputed from the realization: " << f.comparison->rows.size() << " quantities, max deviation "
       << format_residual(f.comparison->max_deviation) << ".";
  }
  os << "\n\n";

  if (f.realized) {
    os << "### Structure\n\n";
    os << "- Jacobi residual: " << format_residual(f.jacobi_residual) << "\n";
    os << "- Killing form max entry: " << format_value(f.killing_max) << (f.killing_max < 1e-10 ? " (K = 0)" : "")
       << "\n";
    os << "- canonical form bi-invariance: " << format_residual(f.form_bi_invariance) << "\n";
    os << "- connection routes: " << format_residual(f.route_connection) << "\n";
    os << "- Ricci routes: " << format_residual(f.route_ricci) << "\n\n";
  }

  os << "### Solutions\n\n";
  solution_table(os, names, f.solutions);
  os << "\n";

  os << "### Printed values\n\n";
  os << "| x | c | distance | match |\n|---|---|---|---|\n";
  for (const auto& p : f.printed) {
    os << "| " << vector_string(p.printed.x) << (p.printed.approximate ? " (approx.)" : "") << " | "
       << format_value(p.printed.c) << " | " << format_residual(p.distance) << " | " << yes_no(p.matched) << " |\n";
  }
  if (f.printed_equal) {
    os << "\nPrinted list equals the solver set: " << yes_no(*f.printed_equal) << ".\n";
  }
  os << "\n";

  if (f.elimination) {
    const auto& e = *f.elimination;
    os << "### Elimination\n\n";
    os << "- polynomial in " << names[e.pivot] << ": " << e.polynomial.to_string(names[e.pivot]) << "\n";
    os << "- x = 1 is a root: " << yes_no(e.has_unit_root) << "\n";
    if (e.printed) {
      const auto& p = *e.printed;
      os << "- printed (A, B, C, D): (" << to_string(p[0]) << ", " << to_string(p[1]) << ", " << to_string(p[2])
         << ", " << to_string(p[3]) << ")\n";
      os << "- printed cubic matches the computed cofactor: " << yes_no(e.printed_matches) << "\n";
    }
    os << "- real roots: " << vector_string(e.roots) << "\n";
    os << "- roots and solutions correspond: " << yes_no(f.elimination_bijection.value_or(false)) << "\n\n";
  }

  if (!f.folds.empty()) {
    os << "### Real form folding\n\n";
    os << "| # | folded x | status |\n|---|---|---|\n";
    for (std::size_t k = 0; k < f.folds.size(); ++k) {
      const auto& fr = f.folds[k];
      os << "| " << k + 1 << " | " << (fr.liftable ? vector_string(fr.solution.x) : std::string("-")) << " | "
         << (fr.liftable ? std::string("folds") : "rejected: " + fr.reason) << " |\n";
    }
    os << "\n";
  }

  if (!f.solver_notes.empty()) {
    os << "### Notes\n\n";
    for (const auto& n : f.solver_notes) {
      os << "- " << n << "\n";
    }
    os << "\n";
  }
}

} // namespace

std::string report_markdown(const Report& report)
{
  const auto& o = report.options;
  std::ostringstream os;
  os << "# Einstein metrics on basic classical Lie superalgebras\n\n";
  os << "Catalog bounds m <= " << o.max_m << ", n <= " << o.max_n << ". Seed " << o.seed << ". Root window c in ["
     << format_value(-o.cmax) << ", " << format_value(o.cmax) << "]. Route draws per family: " << o.route_draws
     << ". Ricci tolerance " << format_value(o.ricci_tol) << " (relative to the metric scale).\n\n";
  os << "Curvature convention: R(X,Y)Z = nabla_X nabla_Y Z - (-1)^{|X||Y|} nabla_Y nabla_X Z - nabla_[X,Y] Z and "
        "ric(X,Y) = str(Z -> R(Z,X)Y). With this sign the bi-invariant metric has ric = -1/4 K; the opposite "
        "convention flips the sign of every Einstein constant c.\n\n";
  for (const auto& f : report.families) {
    family_markdown(os, f);
  }

  os << "## Summary\n\n";
  os << "| family | solutions | expected | Ricci-flat | non-flat | verified | status |\n|---|---|---|---|---|---|---|\n";
  for (const auto& f : report.families) {
    std::size_t verified = 0;
    for (const auto& s : f.solutions) {
      verified += s.ricci_verified == RicciStamp::Verified ? 1 : 0;
    }
    os << "| " << f.spec.name() << " | " << f.solutions.size() << " | " << (f.expected_exact ? "exactly " : ">= ")
       << f.expected_min << (f.needs_mixed_flatness ? ", mixed" : "") << " | " << yes_no(f.has_flat) << " | "
       << yes_no(f.has_non_flat) << " | " << (f.realized ? std::to_string(verified) : std::string("-")) << " | "
       << (f.count_ok() && f.mixed_ok() && f.ricci_ok() ? "ok" : "VIOLATED") << " |\n";
  }
  os << "\nSingle-solution families: ";
  bool first = true;
  for (const auto& f : report.families) {
    if (f.expected_exact) {
      os << (first ? "" : ", ") << f.spec.name();
      first = false;
    }
  }
  os << ".\nMixed Ricci-flat and non-flat families: ";
  first = true;
  for (const auto& f : report.families) {
    if (f.needs_mixed_flatness) {
      os << (first ? "" : ", ") << f.spec.name();
      first = false;
    }
  }
  os << ".\n\nSolution counts: " << (report.all_counts_ok() ? "all hold" : "VIOLATED") << ". Verification: "
     << (report.all_verified() ? "all pass" : "FAILED") << ".\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json report_json(const Report& report)
{
  using nlohmann::json;
  const auto& o = report.options;
  json doc;
  doc["options"] = {{"max_m", o.max_m},         {"max_n", o.max_n},         {"seed", o.seed},
                    {"cmax", o.cmax},           {"route_draws", o.route_draws}, {"ricci_tol", o.ricci_tol},
                    {"residual_tol", o.residual_tol}};
  doc["families"] = json::array();
  for (const auto& f : report.families) {
    json fj = solutions_to_json(f.spec, f.data.form, f.solutions);
    fj["realized"] = f.realized;
    json data = json::array();
    const auto names = f.data.variable_names();
    for (std::size_t i = 0; i < f.data.ideals.size(); ++i) {
      const auto& id = f.data.ideals[i];
      data.push_back({{"variable", names[i]},
                      {"ideal", id.name},
                      {"kind", to_string(id.kind)},
                      {"dim", id.dim},
                      {"l", to_string(id.l)},
                      {"b", to_string(id.b)},
                      {"gamma", to_string(id.gamma)}});
    }
    fj["data"] = data;
    fj["dim_odd"] = f.data.dim_odd;
    if (f.realized) {
      fj["checks"] = {{"jacobi", f.jacobi_residual},
                      {"killing_max", f.killing_max},
                      {"bi_invariance", f.form_bi_invariance},
                      {"table_deviation", f.comparison ? f.comparison->max_deviation : 0.0},
                      {"connection_routes", f.route_connection},
                      {"ricci_routes", f.route_ricci}};
    }
    json printed = json::array();
    for (const auto& p : f.printed) {
      printed.push_back({{"x", p.printed.x},
                         {"c", p.printed.c},
                         {"approximate", p.printed.approximate},
                         {"distance", p.distance},
                         {"matched", p.matched}});
    }
    fj["printed"] = printed;
    if (f.elimination) {
      const auto& e = *f.elimination;
      json ej = {{"pivot", names[e.pivot]},
                 {"polynomial", e.polynomial.to_string(names[e.pivot])},
                 {"has_unit_root", e.has_unit_root},
                 {"roots", e.roots},
                 {"bijection", f.elimination_bijection.value_or(false)}};
      if (e.printed) {
        ej["printed"] = {to_string((*e.printed)[0]), to_string((*e.printed)[1]), to_string((*e.printed)[2]),
                         to_string((*e.printed)[3])};
        ej["printed_matches"] = e.printed_matches;
      }
      fj["elimination"] = ej;
    }
    if (!f.folds.empty()) {
      json folds = json::array();
      for (const auto& fr : f.folds) {
        folds.push_back({{"liftable", fr.liftable}, {"x", fr.solution.x}, {"reason", fr.reason}});
      }
      fj["folds"] = folds;
    }
    fj["notes"] = f.solver_notes;
    fj["summary"] = {{"count", f.solutions.size()},
                     {"expected", (f.expected_exact ? "exactly " : ">= ") + std::to_string(f.expected_min)},
                     {"count_ok", f.count_ok()},
                     {"ricci_flat", f.has_flat},
                     {"non_flat", f.has_non_flat},
                     {"mixed_required", f.needs_mixed_flatness},
                     {"mixed_ok", f.mixed_ok()}};
    doc["families"].push_back(fj);
  }
  doc["summary"] = {{"counts_ok", report.all_counts_ok()}, {"verified", report.all_verified()}};
  return doc;
}

// ---------------------------------------------------------------------------
// CSV

std::string solutions_csv_header() { return "family,params,form,x0,x1,x2,x3,c,residual,ricci_verified\n"; }

std::string solutions_csv_rows(const FamilySpec& spec, const FamilyData& data, FormKind form,
                               const std::vector<EinsteinSolution>& sols)
{
  std::ostringstream os;
  // Column k holds variable x_k; families without k_0 start at x1.
  const std::size_t offset = data.has_k0 ? 0 : 1;
  for (const auto& s : sols) {
    os << '"' << spec.name() << "\"," << params_string(spec) << "," << to_string(form);
    for (std::size_t col = 0; col < 4; ++col) {
      os << ",";
      if (col >= offset && col - offset < s.x.size()) {
        os << format_value(s.x[col - offset]);
      }
    }
    os << "," << format_value(s.c) << "," << format_residual(s.residual) << "," << to_string(s.ricci_verified) << "\n";
  }
  return os.str();
}

std::string report_csv(const Report& report)
{
  std::string out = solutions_csv_header();
  for (const auto& f : report.families) {
    out += solutions_csv_rows(f.spec, f.data, f.data.form, f.solutions);
  }
  return out;
}

} // namespace superein
