// Acceptance run: one PASS/FAIL line per criterion. Tolerances are pinned here
// and must not be relaxed. Reference values are computed independently of the
// library's own tables wherever possible.

#include "superein/curvature.hpp"
#include "superein/einstein.hpp"
#include "superein/families.hpp"
#include "superein/invariants.hpp"
#include "superein/report.hpp"

#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <future>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

using namespace superein;

namespace {

constexpr double kJacobiTol = 1e-12;
constexpr double kBiInvTol = 1e-10;
constexpr double kKillingZeroTol = 1e-10;
constexpr double kIndexTol = 1e-9;
constexpr double kTraceIdentityTol = 1e-10;
constexpr double kKillingCasimirTol = 1e-9;
constexpr double kScalarityTol = 1e-9;
constexpr double kRouteTol = 1e-8;
constexpr std::size_t kRouteDraws = 20;
constexpr double kResidualTol = 1e-10;
constexpr double kBijectionTol = 1e-8;
constexpr double kRicciTol = 1e-8;
constexpr double kReductiveTol = 1e-9;
constexpr double kReductiveDiagnostic = 1e-3;
constexpr std::size_t kReductiveDraws = 5;
constexpr unsigned long long kSeed = 20240611ULL;

class Criterion
{
public:
  Criterion(int number, std::string title) : m_number(number), m_title(std::move(title)) {}

  void require(bool ok, const std::string& what)
  {
    ++m_checks;
    if (!ok) {
      m_failures.push_back(what);
    }
  }

  void info(const std::string& line) { m_info.push_back(line); }

  bool report() const
  {
    const bool pass = m_failures.empty();
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << m_number << ": " << m_title << " (" << m_checks
              << " checks";
    if (!pass) {
      std::cout << ", " << m_failures.size() << " failed";
    }
    std::cout << ")\n";
    for (const auto& f : m_failures) {
      std::cout << "    failed: " << f << "\n";
    }
    for (const auto& i : m_info) {
      std::cout << "    note: " << i << "\n";
    }
    return pass;
  }

private:
  int m_number;
  std::string m_title;
  std::size_t m_checks = 0;
  std::vector<std::string> m_failures;
  std::vector<std::string> m_info;
};

std::string num(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::vector<FamilySpec> realizable_catalog()
{
  std::vector<FamilySpec> out;
  for (const auto& s : catalog(3, 3)) {
    if (s.realizable()) {
      out.push_back(s);
    }
  }
  return out;
}

bool killing_vanishes_expected(const FamilySpec& s)
{
  switch (s.kind) {
  case FamilyKind::Ann: return s.n <= 3;
  case FamilyKind::Dn1n: return s.n <= 2;
  case FamilyKind::D21alpha: return s.alpha == 1.0;
  default: return false;
  }
}

// Index formulas of the classical series, written out independently of the
// library's data tables. Ordered like the realized simple ideals.
std::vector<Rational> table_indices(const FamilySpec& s)
{
  const long m = s.m;
  const long n = s.n;
  switch (s.kind) {
  case FamilyKind::A: {
    std::vector<Rational> l;
    if (m >= 1) {
      l.emplace_back(n + 1, m + 1);
    }
    if (n >= 1) {
      l.emplace_back(m + 1, n + 1);
    }
    return l;
  }
  case FamilyKind::Ann: return {Rational(1), Rational(1)};
  case FamilyKind::B: {
    std::vector<Rational> l;
    if (m >= 1) {
      l.emplace_back(2 * n, 2 * m - 1);
    }
    l.emplace_back(2 * m + 1, 2 * n + 2);
    return l;
  }
  case FamilyKind::C: return {Rational(1, n)};
  case FamilyKind::D:
  case FamilyKind::Dn1n: return {Rational(n, m - 1), Rational(m, n + 1)};
  case FamilyKind::D21alpha: return {Rational(1), Rational(1), Rational(1)};
  default: return {};
  }
}

std::vector<std::size_t> odd_coords(const LieSuperAlgebra& alg, std::size_t first, std::size_t count,
                                    std::size_t stride)
{
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < count; ++t) {
    out.push_back(alg.basis().n_even() + first + t * stride);
  }
  return out;
}

double max_abs(const CMatrix& m)
{
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

struct Expected
{
  std::vector<double> x;
  double c;
};

// Matches a solver list against an expected set: same size and every expected
// point within tol of some solution.
void require_exact_set(Criterion& cr, const std::string& name, const std::vector<EinsteinSolution>& sols,
                       const std::vector<Expected>& expected, double tol)
{
  cr.require(sols.size() == expected.size(), name + ": " + std::to_string(sols.size()) + " solutions, expected " +
                                                 std::to_string(expected.size()));
  for (const auto& s : sols) {
    cr.require(s.residual < kResidualTol, name + ": residual " + num(s.residual));
  }
  for (const auto& e : expected) {
    EinsteinSolution probe;
    probe.x = e.x;
    probe.c = e.c;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : sols) {
      best = std::min(best, solution_distance(s, probe));
    }
    std::ostringstream what;
    what << name << ": expected point (";
    for (double v : e.x) {
      what << num(v) << ", ";
    }
    what << "c=" << num(e.c) << ") nearest solution at distance " << num(best) << " (tol " << num(tol) << ")";
    cr.require(best < tol, what.str());
  }
}

// ---------------------------------------------------------------------------

bool criterion1()
{
  Criterion cr(1, "structural axioms on the realizable catalog m, n <= 3");
  for (const auto& s : realizable_catalog()) {
    const Realization r = realize(s);
    const double jac = check_super_jacobi(r.algebra).residual;
    cr.require(jac < kJacobiTol, s.name() + " Jacobi residual " + num(jac));
    const BilinearFormMatrix K = killing_form(r.algebra);
    const double bi = check_form(r.algebra, K).bi_invariance_residual;
    cr.require(bi < kBiInvTol, s.name() + " Killing bi-invariance residual " + num(bi));
    const bool zero = K.max_abs_entry() < kKillingZeroTol;
    cr.require(zero == killing_vanishes_expected(s),
               s.name() + (zero ? " has K = 0 unexpectedly" : " has K != 0 (max " + num(K.max_abs_entry()) + ")"));
  }
  return cr.report();
}

bool criterion2()
{
  Criterion cr(2, "representation indices against the closed-form formulas");
  std::vector<FamilySpec> specs;
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      if (m + n > 0) {
        specs.push_back(FamilySpec::a(m, n));
      }
    }
  }
  for (int m = 0; m <= 3; ++m) {
    for (int n = 1; n <= 2; ++n) {
      specs.push_back(FamilySpec::b(m, n));
    }
  }
  for (int n = 3; n <= 5; ++n) {
    specs.push_back(FamilySpec::c(n));
  }
  for (int m = 2; m <= 4; ++m) {
    for (int n = 1; n <= 2; ++n) {
      specs.push_back(FamilySpec::d(m, n));
    }
  }
  for (const auto& s : specs) {
    const Realization r = realize(s);
    const std::vector<Rational> expected = table_indices(s);
    std::vector<const IdealBlock*> simple;
    for (const auto& b : r.algebra.decomposition()) {
      if (b.kind == IdealKind::Simple) {
        simple.push_back(&b);
      }
    }
    cr.require(simple.size() == expected.size(), s.name() + ": " + std::to_string(simple.size()) +
                                                     " simple ideals, expected " + std::to_string(expected.size()));
    for (std::size_t i = 0; i < std::min(simple.size(), expected.size()); ++i) {
      const RatioFit fit = representation_index(r.algebra, *simple[i]);
      const double want = expected[i].get_d();
      cr.require(std::abs(fit.value - want) < kIndexTol && fit.residual < kIndexTol,
                 s.name() + " l_" + std::to_string(i + 1) + " = " + num(fit.value) + ", expected " + num(want));
    }
  }

  // Standard representations: one column (or row) of the odd block.
  const Realization b11 = realize(FamilySpec::b(1, 1)); // osp(3|2), odd (i, j) at 2i + j
  const auto& ob = b11.algebra;
  const double so3 = representation_index_on(ob, ob.decomposition()[0], odd_coords(ob, 0, 3, 2)).value;
  cr.require(std::abs(so3 - 1.0) < kIndexTol, "so(3) on C^3: " + num(so3));
  const double sp2 = representation_index_on(ob, ob.decomposition()[1], odd_coords(ob, 0, 2, 1)).value;
  cr.require(std::abs(sp2 - 0.25) < kIndexTol, "sp(2) on C^2: " + num(sp2));
  const Realization a20 = realize(FamilySpec::a(2, 0)); // sl(3|1), upper-right block first
  const auto& oa = a20.algebra;
  const double sl3 = representation_index_on(oa, oa.decomposition()[1], odd_coords(oa, 0, 3, 1)).value;
  cr.require(std::abs(sl3 - 1.0 / 6.0) < kIndexTol, "sl(3) on C^3: " + num(sl3));
  return cr.report();
}

bool criterion3()
{
  Criterion cr(3, "trace identities, Killing-Casimir identity, Casimir scalarity and gamma sums");
  for (const auto& s : realizable_catalog()) {
    const Realization r = realize(s);
    const auto& alg = r.algebra;
    for (const auto& ideal : alg.decomposition()) {
      const TraceIdentityResiduals t = verify_trace_identities(alg, r.canonical_form, ideal);
      cr.require(t.max() < kTraceIdentityTol, s.name() + " " + ideal.name + " trace identities " + num(t.max()));
      const CasimirResult cas = casimir_on_odd(alg, r.canonical_form, ideal);
      cr.require(cas.off_scalar_residual < kScalarityTol,
                 s.name() + " " + ideal.name + " Casimir off-scalar " + num(cas.off_scalar_residual));
    }
    const double kc = verify_killing_casimir(alg, r.canonical_form);
    cr.require(kc < kKillingCasimirTol, s.name() + " Killing-Casimir identity " + num(kc));

    // Exact Casimir scalars of the canonical form summed over all ideals.
    const RationalMatrix gram = r.supertrace_gram.scaled(r.form_scale);
    Rational sum = 0;
    for (const auto& ideal : alg.decomposition()) {
      sum += casimir_scalar_exact(alg, gram, ideal);
    }
    const Rational want = r.data.killing_nondegenerate ? Rational(1, 2) : Rational(0);
    cr.require(sum == want, s.name() + " exact gamma sum " + to_string(sum) + ", expected " + to_string(want));
    cr.require(gamma_sum(r.data) == want, s.name() + " tabulated gamma sum " + to_string(gamma_sum(r.data)));
  }
  // The degenerate-K families outside the realized range use the tabulated scalars.
  for (const auto& s : {FamilySpec::d21(2.5), FamilySpec::d(4, 3), FamilySpec::a(4, 4)}) {
    cr.require(gamma_sum(family_data(s)) == 0, s.name() + " tabulated gamma sum " + to_string(gamma_sum(family_data(s))));
  }
  for (const auto& s : {FamilySpec::f4(), FamilySpec::g3()}) {
    cr.require(gamma_sum(family_data(s)) == Rational(1, 2), s.name() + " tabulated gamma sum");
  }
  return cr.report();
}

struct RouteResult
{
  std::string name;
  double connection = 0.0;
  double ricci = 0.0;
  double torsion = 0.0;
  double compatibility = 0.0;
};

RouteResult route_sweep(const FamilySpec& s)
{
  const Realization r = realize(s);
  RouteResult out{s.name()};
  for (std::size_t d = 0; d < kRouteDraws; ++d) {
    const MetricParams p = random_params(r.data.num_vars(), kSeed, d);
    const BilinearFormMatrix g = metric_from_params(r, p);
    const Connection koszul = levi_civita_koszul(r.algebra, g);
    const Connection block = levi_civita_blockwise(r, p);
    out.connection = std::max(out.connection, connection_deviation(koszul, block));
    const ConnectionCheck chk = check_connection(r.algebra, g, koszul);
    out.torsion = std::max(out.torsion, chk.torsion);
    out.compatibility = std::max(out.compatibility, chk.compatibility);
    const RicciDirect direct = ricci_direct(r.algebra, g, koszul);
    out.ricci = std::max(out.ricci, max_abs(direct.ric.gram - ricci_closed_form(r, p).gram));
  }
  return out;
}

bool criterion4()
{
  Criterion cr(4, "route equivalence over 20 seeded draws per realized family");
  std::vector<std::future<RouteResult>> jobs;
  for (const auto& s : realizable_catalog()) {
    jobs.push_back(std::async(std::launch::async, route_sweep, s));
  }
  double worst_conn = 0.0;
  double worst_ric = 0.0;
  for (auto& j : jobs) {
    const RouteResult r = j.get();
    cr.require(r.connection < kRouteTol, r.name + " connection routes differ by " + num(r.connection));
    cr.require(r.ricci < kRouteTol, r.name + " Ricci routes differ by " + num(r.ricci));
    cr.require(r.torsion < kRouteTol && r.compatibility < kRouteTol, r.name + " torsion/compatibility " +
                                                                         num(r.torsion) + "/" + num(r.compatibility));
    worst_conn = std::max(worst_conn, r.connection);
    worst_ric = std::max(worst_ric, r.ricci);
  }
  cr.info("worst connection deviation " + num(worst_conn) + ", worst Ricci deviation " + num(worst_ric));
  return cr.report();
}

bool criterion5()
{
  Criterion cr(5, "solution regression against the printed values");
  auto solved = [](const FamilySpec& s) { return solve(build_system(s)); };

  require_exact_set(cr, "A(2,1)", solved(FamilySpec::a(2, 1)), {{{1, 1, 1}, -0.25}}, 1e-10);
  for (int n : {1, 2}) {
    require_exact_set(cr, FamilySpec::a(n, n).name(), solved(FamilySpec::a(n, n)), {{{1, 1}, 0.0}, {{-1, -1}, 0.0}},
                      1e-10);
  }
  // C(n) closed form at n = 3.
  {
    const double n = 3;
    const double x0 = (4 * n * n * n - 20 * n * n + 33 * n - 16) / (4 * n * n * n - 16 * n * n + 23 * n - 12);
    const double x1 = (2 * n * n - 3 * n) / (2 * n * n - 5 * n + 4);
    cr.require(std::abs(x0 - 11.0 / 21.0) < 1e-15 && std::abs(x1 - 9.0 / 7.0) < 1e-15, "C(3) closed form arithmetic");
    require_exact_set(cr, "C(3)", solved(FamilySpec::c(3)), {{{1, 1}, -0.25}, {{x0, x1}, -x0 / 4}}, 1e-10);
  }
  // D(n+1,n) at n = 2.
  {
    const double n = 2;
    const double r = std::sqrt(2 * n * n + 2 * n + 1);
    const double a = std::sqrt(2.0) * n / r;
    const double b = std::sqrt(2.0) * (n + 1) / r;
    const double c = -std::sqrt(2.0) * (2 * n + 1) / (8 * n * r);
    require_exact_set(cr, "D(3,2)", solved(FamilySpec::d(3, 2)),
                      {{{1, 1}, 0.0}, {{-1, -1}, 0.0}, {{a, b}, c}, {{-a, -b}, -c}}, 1e-9);
  }
  {
    const double t = std::sqrt(2.0 / 5.0);
    const std::vector<Expected> d21 = {
        {{1, 1, 1}, 0.0}, {{-1, -1, -1}, 0.0}, {{t, t, 2 * t}, -3 * t / 8}, {{-t, -t, -2 * t}, 3 * t / 8}};
    for (double alpha : {1.0, 2.5}) {
      const FamilySpec s = FamilySpec::d21(alpha);
      require_exact_set(cr, s.name(), solved(s), d21, 1e-10);
    }
  }
  require_exact_set(cr, "F(4)", solved(FamilySpec::f4()), {{{1, 1}, -0.25}}, 1e-10);

  // G(3): exactly two solutions, the second compared with the printed digits.
  {
    const auto sols = solved(FamilySpec::g3());
    require_exact_set(cr, "G(3) unit solution", {sols.empty() ? EinsteinSolution{} : sols.front()},
                      {{{1, 1}, -0.25}}, 1e-10);
    cr.require(sols.size() == 2, "G(3): " + std::to_string(sols.size()) + " solutions, expected 2");
    const Expected printed{{1.1760, 0.8767}, 0.1312};
    double best = std::numeric_limits<double>::infinity();
    const EinsteinSolution* nearest = nullptr;
    for (const auto& s : sols) {
      const double dx = std::max(std::abs(s.x[0] - printed.x[0]), std::abs(s.x[1] - printed.x[1]));
      if (dx < best) {
        best = dx;
        nearest = &s;
      }
    }
    cr.require(best < 2e-4, "G(3): x part of the printed point at distance " + num(best));
    if (nearest != nullptr) {
      cr.require(std::abs(nearest->c - printed.c) < 2e-4,
                 "G(3): computed c = " + num(nearest->c) + " vs printed " + num(printed.c) + " (tol 2e-4)");
      // Independent evidence for the sign: both the trace equation and the first
      // quadratic at the printed x give the same c.
      const double c_trace = (printed.x[0] - printed.x[1] / 2 - 1) / 2;
      const double c_quad = (0.5 * printed.x[0] * printed.x[0] - 1) / (4 * 0.5 * printed.x[0]);
      cr.info("G(3): printed x implies c = " + num(c_trace) + " (trace) and " + num(c_quad) +
              " (first quadratic); the printed c has the opposite sign");
    }
  }
  return cr.report();
}

// Printed cubic coefficients for D(m,n), evaluated from the closed formulas.
std::array<Rational, 4> printed_d_cubic(long m, long n)
{
  const Rational M(m);
  const Rational N(n);
  const Rational A = 4 * M * M * M - 4 * (2 * N + 1) * M * M + (8 * N * N + 6 * N + 1) * M - N * (2 * N + 1) * (2 * N + 1);
  const Rational B = -12 * M * M * M + 4 * (6 * N + 5) * M * M - (16 * N * N + 22 * N + 7) * M +
                     N * (4 * N * N + 8 * N + 3);
  const Rational C = 2 * (M - 1) * (6 * M * M - M * (10 * N + 7) + (2 * N + 1) * (2 * N + 1));
  const Rational D = 2 * (M - 1) * (M - 1) * (2 * N - 2 * M + 1);
  return {A, B, C, D};
}

bool criterion6()
{
  Criterion cr(6, "exact elimination polynomial against the solver and the printed cubic");
  std::vector<FamilySpec> specs;
  for (int m = 0; m <= 3; ++m) {
    for (int n = 1; n <= 2; ++n) {
      specs.push_back(FamilySpec::b(m, n));
    }
  }
  for (int m = 2; m <= 3; ++m) {
    for (int n = 1; n <= 2; ++n) {
      if (m - n != 1) {
        specs.push_back(FamilySpec::d(m, n));
      }
    }
  }
  for (const auto& s : specs) {
    const EinsteinSystem sys = build_system(s);
    const EliminationResult e = elimination_polynomial(sys);
    cr.require(e.has_unit_root, s.name() + ": x_1 = 1 is not a root");
    const auto sols = solve(sys);
    cr.require(e.roots.size() == sols.size(), s.name() + ": " + std::to_string(e.roots.size()) +
                                                  " polynomial roots vs " + std::to_string(sols.size()) + " solutions");
    for (double root : e.roots) {
      bool found = false;
      for (const auto& sol : sols) {
        found = found || std::abs(sol.x[e.pivot] - root) < kBijectionTol;
      }
      cr.require(found, s.name() + ": root " + num(root) + " has no solution");
    }
    for (const auto& sol : sols) {
      bool found = false;
      for (double root : e.roots) {
        found = found || std::abs(sol.x[e.pivot] - root) < kBijectionTol;
      }
      cr.require(found, s.name() + ": solution x_1 = " + num(sol.x[e.pivot]) + " is not a root");
    }
    if (s.kind == FamilyKind::D) {
      const auto want = printed_d_cubic(s.m, s.n);
      bool equal = e.cubic.degree() == 3;
      for (int k = 0; k < 4 && equal; ++k) {
        equal = e.cubic.coeff(3 - k) == want[static_cast<std::size_t>(k)];
      }
      cr.require(equal, s.name() + ": printed cubic differs from the computed cofactor " + e.cubic.to_string());
    } else if (s.kind == FamilyKind::B && !e.printed_matches) {
      cr.info(s.name() + ": printed cubic differs from the computed cofactor " + e.cubic.to_string() +
              "; the computed polynomial is used");
    }
  }
  return cr.report();
}

bool criterion7()
{
  Criterion cr(7, "brute-force Ricci verification of every solver solution");
  const std::vector<FamilySpec> specs = {FamilySpec::a(1, 0), FamilySpec::a(2, 1), FamilySpec::a(1, 1),
                                         FamilySpec::b(1, 1), FamilySpec::b(2, 1), FamilySpec::b(1, 2),
                                         FamilySpec::c(3),    FamilySpec::d(3, 1), FamilySpec::d(2, 2),
                                         FamilySpec::d(3, 2), FamilySpec::d21(1.0)};
  std::size_t verified = 0;
  for (const auto& s : specs) {
    const Realization r = realize(s);
    const auto sols = solve(build_system(s));
    cr.require(!sols.empty(), s.name() + ": no solutions");
    for (const auto& sol : sols) {
      const EinsteinSolution v = verify_solution(r, sol, kRicciTol);
      cr.require(v.ricci_verified == RicciStamp::Verified,
                 s.name() + " c = " + num(sol.c) + ": deviation " + num(v.ricci_deviation) + " at " + v.offending_block);
      verified += v.ricci_verified == RicciStamp::Verified ? 1 : 0;
    }
  }
  cr.info(std::to_string(verified) + " solutions verified by both routes");
  return cr.report();
}

bool criterion8(const Report& rep)
{
  Criterion cr(8, "solution counts and Ricci-flat coexistence in the report");
  for (const auto& f : rep.families) {
    const std::size_t n = f.solutions.size();
    const bool single = f.spec.kind == FamilyKind::A || f.spec.kind == FamilyKind::F4;
    cr.require(single ? n == 1 : n >= 2, f.spec.name() + ": " + std::to_string(n) + " solutions");
    cr.require(f.count_ok(), f.spec.name() + ": report count check failed");
    if (f.spec.kind == FamilyKind::Dn1n || f.spec.kind == FamilyKind::D21alpha) {
      bool flat = false;
      bool non_flat = false;
      for (const auto& s : f.solutions) {
        flat = flat || std::abs(s.c) < 1e-12;
        non_flat = non_flat || std::abs(s.c) > 1e-6;
      }
      cr.require(flat && non_flat, f.spec.name() + ": flat " + std::to_string(flat) + ", non-flat " +
                                       std::to_string(non_flat));
      cr.require(f.needs_mixed_flatness && f.mixed_ok(), f.spec.name() + ": report does not assert coexistence");
    }
  }
  cr.require(rep.all_counts_ok(), "report summary count flag");
  const std::string md = report_markdown(rep);
  cr.require(md.find("## Summary") != std::string::npos, "markdown summary section");
  return cr.report();
}

bool criterion9()
{
  Criterion cr(9, "naturally reductive at t = x, diagnostic at t != x");
  for (const auto& s : {FamilySpec::a(1, 0), FamilySpec::b(1, 1), FamilySpec::c(3)}) {
    const Realization r = realize(s);
    for (std::size_t d = 0; d < kReductiveDraws; ++d) {
      const MetricParams p = random_params(r.data.num_vars(), kSeed, d);
      const double res = verify_naturally_reductive(r, p);
      cr.require(res < kReductiveTol, s.name() + " draw " + std::to_string(d) + ": residual " + num(res));
      std::vector<double> t = p.x;
      for (double& v : t) {
        v += 0.1;
      }
      const double diag = verify_naturally_reductive(r, p, t);
      cr.require(diag >= kReductiveDiagnostic, s.name() + " draw " + std::to_string(d) + ": diagnostic " + num(diag));
    }
  }
  return cr.report();
}

bool criterion10(const Report& first, const Report& second)
{
  Criterion cr(10, "real-form folding and report determinism");
  for (const auto& s : catalog(3, 3)) {
    if (s.kind != FamilyKind::Ann && s.kind != FamilyKind::Dn1n && s.kind != FamilyKind::D21alpha) {
      continue;
    }
    const FoldingPairs pairs = default_folding(s);
    for (const auto& sol : solve(build_system(s))) {
      for (const auto& [i, j] : pairs) {
        cr.require(std::abs(sol.x[i] - sol.x[j]) < 1e-9, s.name() + ": paired coordinates differ");
      }
      const FoldResult fold = lift_real_form(sol, pairs);
      cr.require(fold.liftable, s.name() + ": fold rejected (" + fold.reason + ")");
      cr.require(fold.solution.x.size() == sol.x.size() - pairs.size(), s.name() + ": folded length");
    }
  }
  const std::string a = report_json(first).dump(2);
  const std::string b = report_json(second).dump(2);
  cr.require(a == b, "report JSON differs between two runs with the same seed");
  cr.info("report JSON size " + std::to_string(a.size()) + " bytes");
  return cr.report();
}

} // namespace

int main()
{
  bool ok = true;
  ok = criterion1() && ok;
  ok = criterion2() && ok;
  ok = criterion3() && ok;
  ok = criterion4() && ok;
  ok = criterion5() && ok;
  ok = criterion6() && ok;
  ok = criterion7() && ok;

  ReportOptions opts;
  opts.max_m = 3;
  opts.max_n = 3;
  opts.seed = kSeed;
  opts.jobs = 4;
  const Report first = build_report(opts);
  opts.jobs = 1;
  const Report second = build_report(opts);
  ok = criterion8(first) && ok;
  ok = criterion9() && ok;
  ok = criterion10(first, second) && ok;
  std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
  return ok ? 0 : 1;
}
