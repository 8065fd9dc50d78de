#include "superein/cli.hpp"

#include "superein/curvature.hpp"
#include "superein/einstein.hpp"
#include "superein/errors.hpp"
#include "superein/invariants.hpp"
#include "superein/report.hpp"
#include "superein/supercore_json.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace superein {

namespace {

struct RunConfig
{
  std::string command;
  std::string family;
  std::optional<int> m;
  std::optional<int> n;
  double alpha = 1.0;
  std::string form;
  std::string format;
  std::string out_path;
  unsigned long long seed = 1;
  unsigned jobs = 1;
  double cmax = 10.0;
  std::optional<double> tol;
};

class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

FamilySpec spec_from(const RunConfig& cfg)
{
  if (cfg.family.empty()) {
    throw UsageError(cfg.command + " needs --family");
  }
  return FamilySpec::make(cfg.family, cfg.m.value_or(0), cfg.n.value_or(0), cfg.alpha);
}

double tolerance(const RunConfig& cfg, double def)
{
  if (!cfg.tol) {
    return def;
  }
  if (!(*cfg.tol > 0.0) || *cfg.tol > def) {
    std::ostringstream os;
    os << "--tol may only tighten the default " << def << " (got " << *cfg.tol << ")";
    throw UsageError(os.str());
  }
  return *cfg.tol;
}

std::string format_of(const RunConfig& cfg, const std::string& def)
{
  const std::string f = cfg.format.empty() ? def : cfg.format;
  if (f != "json" && f != "csv" && f != "markdown") {
    throw UsageError("--format must be json, csv or markdown");
  }
  return f;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text)
{
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) {
    throw UsageError("cannot write " + cfg.out_path);
  }
  f << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

struct Check
{
  std::string name;
  double residual;
  double tol;
  bool pass() const { return residual < tol; }
};

std::string checks_text(const std::string& family, const std::vector<Check>& checks, const std::string& format,
                        nlohmann::json extra = nlohmann::json::object())
{
  if (format == "json") {
    nlohmann::json j = extra;
    j["family"] = family;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
      j["checks"].push_back(verification_entry(c.name, family, c.residual, c.tol));
    }
    return dump(j);
  }
  std::ostringstream os;
  if (format == "csv") {
    os << "check,family,residual,tolerance,pass\n";
    for (const auto& c : checks) {
      os << c.name << ",\"" << family << "\"," << format_residual(c.residual) << "," << format_value(c.tol) << ","
         << (c.pass() ? "true" : "false") << "\n";
    }
    return os.str();
  }
  os << "# " << family << "\n\n| check | residual | tolerance | pass |\n|---|---|---|---|\n";
  for (const auto& c : checks) {
    os << "| " << c.name << " | " << format_residual(c.residual) << " | " << format_value(c.tol) << " | "
       << (c.pass() ? "yes" : "no") << " |\n";
  }
  return os.str();
}

bool all_pass(const std::vector<Check>& checks)
{
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

// ---------------------------------------------------------------------------

int cmd_build(const RunConfig& cfg, std::ostream& out)
{
  const FamilySpec spec = spec_from(cfg);
  const double jac_tol = tolerance(cfg, DefaultTolerances::jacobi);
  const Realization real = realize(spec);
  const auto& alg = real.algebra;
  const BilinearFormMatrix K = killing_form(alg);
  const bool k_zero = K.max_abs_entry() < 1e-10;
  std::vector<Check> checks;
  checks.push_back({"super_jacobi", check_super_jacobi(alg).residual, jac_tol});
  checks.push_back({"antisymmetry", alg.antisymmetry_residual(), jac_tol});
  checks.push_back({"killing_bi_invariance", check_form(alg, K).bi_invariance_residual, 1e-10});
  const FormReport canon = check_form(alg, real.canonical_form);
  checks.push_back({"canonical_form_bi_invariance", canon.bi_invariance_residual, 1e-10});
  checks.push_back({"canonical_form_supersymmetry", canon.supersymmetry_residual, 1e-10});

  const std::string format = format_of(cfg, "json");
  if (format == "json") {
    nlohmann::json j;
    j["family"] = spec.name();
    j["spec"] = spec_to_json(spec);
    j["killing_zero"] = k_zero;
    j["killing_max"] = K.max_abs_entry();
    j["form"] = to_string(real.data.form);
    j["form_scale"] = to_string(real.form_scale);
    j["notes"] = nlohmann::json::array();
    if (k_zero) {
      j["notes"].push_back("Killing form vanishes identically; canonical form " + to_string(real.form_scale) +
                           " str(XY) used");
    }
    j["algebra"] = algebra_to_json(alg);
    j["canonical_form"] = form_to_json(real.canonical_form);
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
      j["checks"].push_back(verification_entry(c.name, spec.name(), c.residual, c.tol));
    }
    emit(cfg, out, dump(j));
  } else {
    std::string text = checks_text(spec.name(), checks, format);
    if (format == "markdown") {
      text += "\ndim " + std::to_string(alg.dim()) + " (" + std::to_string(alg.basis().n_even()) + "|" +
              std::to_string(alg.basis().n_odd()) + ")" + (k_zero ? ", K = 0" : "") + "\n";
    }
    emit(cfg, out, text);
  }
  return all_pass(checks) ? ExitOk : ExitVerificationFailed;
}

int cmd_indices(const RunConfig& cfg, std::ostream& out)
{
  const FamilySpec spec = spec_from(cfg);
  const double tol = tolerance(cfg, DefaultTolerances::table);
  const FamilyData data = family_data(spec);
  std::optional<DataComparison> cmp;
  if (spec.realizable()) {
    cmp = compare_with_table(realize(spec));
  }
  const std::string format = format_of(cfg, "json");
  const auto names = data.variable_names();
  std::ostringstream os;
  if (format == "json") {
    nlohmann::json j;
    j["family"] = spec.name();
    j["dim_odd"] = data.dim_odd;
    j["form"] = to_string(data.form);
    j["gamma_sum"] = to_string(gamma_sum(data));
    j["ideals"] = nlohmann::json::array();
    for (std::size_t i = 0; i < data.ideals.size(); ++i) {
      const auto& id = data.ideals[i];
      j["ideals"].push_back({{"variable", names[i]},
                             {"name", id.name},
                             {"kind", to_string(id.kind)},
                             {"dim", id.dim},
                             {"l", to_string(id.l)},
                             {"b", to_string(id.b)},
                             {"gamma", to_string(id.gamma)}});
    }
    if (cmp) {
      j["computed"] = nlohmann::json::array();
      for (const auto& r : cmp->rows) {
        j["computed"].push_back(
            {{"quantity", r.quantity}, {"ideal", r.ideal}, {"tabulated", r.tabulated}, {"computed", r.computed}});
      }
      j["max_deviation"] = cmp->max_deviation;
    }
    os << dump(j);
  } else if (format == "csv") {
    os << "family,quantity,ideal,tabulated,computed\n";
    for (std::size_t i = 0; i < data.ideals.size(); ++i) {
      const auto& id = data.ideals[i];
      os << "\"" << spec.name() << "\",l," << id.name << "," << to_string(id.l) << ",\n";
    }
    if (cmp) {
      for (const auto& r : cmp->rows) {
        os << "\"" << spec.name() << "\"," << r.quantity << "," << r.ideal << "," << format_value(r.tabulated) << ","
           << format_value(r.computed) << "\n";
      }
    }
  } else {
    os << "# " << spec.name() << "\n\n| variable | ideal | kind | dim | l | b | gamma |\n|---|---|---|---|---|---|---|\n";
    for (std::size_t i = 0; i < data.ideals.size(); ++i) {
      const auto& id = data.ideals[i];
      os << "| " << names[i] << " | " << id.name << " | " << to_string(id.kind) << " | " << id.dim << " | "
         << to_string(id.l) << " | " << to_string(id.b) << " | " << to_string(id.gamma) << " |\n";
    }
    if (cmp) {
      os << "\n| quantity | ideal | tabulated | computed |\n|---|---|---|---|\n";
      for (const auto& r : cmp->rows) {
        os << "| " << r.quantity << " | " << r.ideal << " | " << format_value(r.tabulated) << " | "
           << format_value(r.computed) << " |\n";
      }
    }
  }
  emit(cfg, out, os.str());
  return !cmp || cmp->max_deviation < tol ? ExitOk : ExitVerificationFailed;
}

struct Solved
{
  FamilySpec spec;
  FamilyData data;
  FormKind form;
  std::vector<EinsteinSolution> solutions;
  std::vector<std::string> notes;
};

Solved solve_and_verify(const RunConfig& cfg, double ricci_tol)
{
  Solved s;
  s.spec = spec_from(cfg);
  s.data = family_data(s.spec);
  s.form = cfg.form.empty() ? s.data.form : form_kind_from_string(cfg.form);
  const EinsteinSystem sys = build_system(s.data, s.form);
  SolveOptions opts;
  if (!(cfg.cmax > 0.0)) {
    throw UsageError("--cmax must be positive");
  }
  opts.cmax = cfg.cmax;
  SolveResult res = solve_detailed(sys, opts);
  s.solutions = std::move(res.solutions);
  s.notes = std::move(res.notes);
  if (s.spec.realizable()) {
    const Realization real = realize(s.spec);
    for (auto& sol : s.solutions) {
      sol = verify_solution(real, sol, ricci_tol);
    }
  } else {
    for (auto& sol : s.solutions) {
      sol.ricci_verified = RicciStamp::NotApplicable;
    }
  }
  return s;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out)
{
  const double ricci_tol = tolerance(cfg, DefaultTolerances::ricci);
  const Solved s = solve_and_verify(cfg, ricci_tol);
  const std::string format = format_of(cfg, "json");
  std::string text;
  if (format == "json") {
    nlohmann::json j = solutions_to_json(s.spec, s.form, s.solutions);
    j["notes"] = s.notes;
    text = dump(j);
  } else if (format == "csv") {
    text = solutions_csv_header() + solutions_csv_rows(s.spec, s.data, s.form, s.solutions);
  } else {
    std::ostringstream os;
    os << "# " << s.spec.name() << "\n\n| # |";
    const auto names = s.data.variable_names();
    for (const auto& n : names) {
      os << " " << n << " |";
    }
    os << " c | residual | Ricci |\n|---|";
    for (std::size_t i = 0; i < names.size(); ++i) {
      os << "---|";
    }
    os << "---|---|---|\n";
    for (std::size_t k = 0; k < s.solutions.size(); ++k) {
      const auto& sol = s.solutions[k];
      os << "| " << k + 1 << " |";
      for (double v : sol.x) {
        os << " " << format_value(v) << " |";
      }
      os << " " << format_value(sol.c) << " | " << format_residual(sol.residual) << " | "
         << to_string(sol.ricci_verified) << " |\n";
    }
    text = os.str();
  }
  emit(cfg, out, text);
  const bool ok = std::all_of(s.solutions.begin(), s.solutions.end(), [](const EinsteinSolution& sol) {
    return sol.residual < DefaultTolerances::residual && sol.ricci_verified != RicciStamp::Failed;
  });
  return ok ? ExitOk : ExitVerificationFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
  const double ricci_tol = tolerance(cfg, DefaultTolerances::ricci);
  const FamilySpec spec = spec_from(cfg);
  const Realization real = realize(spec); // ScopeError for equation-layer-only families
  const Solved s = solve_and_verify(cfg, ricci_tol);
  std::vector<Check> checks;
  checks.push_back({"super_jacobi", check_super_jacobi(real.algebra).residual, DefaultTolerances::jacobi});
  double conn = 0.0;
  double ric = 0.0;
  for (std::size_t d = 0; d < 20; ++d) {
    const MetricParams p = random_params(real.data.num_vars(), cfg.seed, d);
    const BilinearFormMatrix metric = metric_from_params(real, p);
    const Connection koszul = levi_civita_koszul(real.algebra, metric);
    conn = std::max(conn, connection_deviation(koszul, levi_civita_blockwise(real, p)));
    const RicciDirect direct = ricci_direct(real.algebra, metric, koszul);
    const BilinearFormMatrix closed = ricci_closed_form(real, p);
    ric = std::max(ric, (direct.ric.gram - closed.gram).cwiseAbs().maxCoeff() / std::max(1.0, metric.max_abs_entry()));
  }
  checks.push_back({"connection_routes", conn, ricci_tol});
  checks.push_back({"ricci_routes", ric, ricci_tol});
  double nr = 0.0;
  for (std::size_t d = 0; d < 5; ++d) {
    nr = std::max(nr, verify_naturally_reductive(real, random_params(real.data.num_vars(), cfg.seed, d)));
  }
  checks.push_back({"naturally_reductive", nr, 1e-9});
  for (std::size_t k = 0; k < s.solutions.size(); ++k) {
    const auto& sol = s.solutions[k];
    checks.push_back({"einstein_solution_" + std::to_string(k + 1), sol.ricci_deviation, ricci_tol});
    checks.push_back({"equation_residual_" + std::to_string(k + 1), sol.residual, DefaultTolerances::residual});
  }
  nlohmann::json extra;
  extra["solutions"] = solutions_to_json(spec, s.form, s.solutions)["solutions"];
  emit(cfg, out, checks_text(spec.name(), checks, format_of(cfg, "json"), extra));
  return all_pass(checks) ? ExitOk : ExitVerificationFailed;
}

int cmd_report(const RunConfig& cfg, std::ostream& out)
{
  ReportOptions opts;
  opts.max_m = cfg.m.value_or(3);
  opts.max_n = cfg.n.value_or(3);
  if (opts.max_m < 0 || opts.max_n < 0) {
    throw UsageError("report bounds must be non-negative");
  }
  if (!(cfg.cmax > 0.0)) {
    throw UsageError("--cmax must be positive");
  }
  opts.seed = cfg.seed;
  opts.jobs = std::max(1u, cfg.jobs);
  opts.cmax = cfg.cmax;
  opts.ricci_tol = tolerance(cfg, DefaultTolerances::ricci);
  const Report report = build_report(opts);
  const std::string format = format_of(cfg, "markdown");
  if (format == "json") {
    emit(cfg, out, dump(report_json(report)));
  } else if (format == "csv") {
    emit(cfg, out, report_csv(report));
  } else {
    emit(cfg, out, report_markdown(report));
  }
  return report.all_verified() && report.all_counts_ok() ? ExitOk : ExitVerificationFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  RunConfig cfg;
  CLI::App app{"Einstein metrics on basic classical Lie superalgebras", "superein"};
  app.require_subcommand(1);

  int m = 0;
  int n = 0;
  double tol = 0.0;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"build", "Construct an algebra and check its axioms"},
      {"indices", "Tabulated and recomputed indices, b-ratios and Casimir scalars"},
      {"solve", "Solve the Einstein system and verify each solution"},
      {"verify", "Route-equivalence and Einstein checks on a realized algebra"},
      {"report", "Full catalog report"}};
  std::vector<CLI::App*> subs;
  std::vector<CLI::Option*> m_opts;
  std::vector<CLI::Option*> n_opts;
  std::vector<CLI::Option*> tol_opts;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--family", cfg.family, "A, B, C, D, D21a, F4 or G3");
    m_opts.push_back(sub->add_option("--m", m, name == "report" ? "Bound on m (default 3)" : "First parameter"));
    n_opts.push_back(sub->add_option("--n", n, name == "report" ? "Bound on n (default 3)" : "Second parameter"));
    sub->add_option("--alpha", cfg.alpha, "alpha for D(2,1;alpha)");
    sub->add_option("--form", cfg.form, "killing, case2, case6 or case7");
    sub->add_option("--format", cfg.format, "json, csv or markdown");
    sub->add_option("--out", cfg.out_path, "Output file (default stdout)");
    sub->add_option("--seed", cfg.seed, "Seed for random metric draws");
    sub->add_option("--jobs", cfg.jobs, "Worker threads for report");
    sub->add_option("--cmax", cfg.cmax, "Root search window [-cmax, cmax]");
    tol_opts.push_back(sub->add_option("--tol", tol, "Tighter tolerance for the main check"));
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return ExitInvalidInput;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) {
      cfg.command = commands[i].first;
      if (m_opts[i]->count() > 0) {
        cfg.m = m;
      }
      if (n_opts[i]->count() > 0) {
        cfg.n = n;
      }
      if (tol_opts[i]->count() > 0) {
        cfg.tol = tol;
      }
    }
  }

  try {
    if (cfg.command == "build") {
      return cmd_build(cfg, out);
    }
    if (cfg.command == "indices") {
      return cmd_indices(cfg, out);
    }
    if (cfg.command == "solve") {
      return cmd_solve(cfg, out);
    }
    if (cfg.command == "verify") {
      return cmd_verify(cfg, out);
    }
    return cmd_report(cfg, out);
  } catch (const ScopeError& e) {
    err << "error: " << e.what() << "\n";
    return ExitInvalidInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return ExitInvalidInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return ExitInvalidInput;
  }
}

} // namespace superein
