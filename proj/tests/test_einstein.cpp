#include "superein/curvature.hpp"
#include "superein/einstein.hpp"
#include "superein/families.hpp"

#include <doctest.h>

#include <cmath>

using namespace superein;

namespace {

bool contains(const std::vector<EinsteinSolution>& sols, const std::vector<double>& x, double c, double tol)
{
  EinsteinSolution probe;
  probe.x = x;
  probe.c = c;
  for (const auto& s : sols) {
    if (solution_distance(s, probe) < tol) {
      return true;
    }
  }
  return false;
}

} // namespace

TEST_CASE("G(3) system coefficients")
{
  const EinsteinSystem sys = build_system(FamilySpec::g3());
  CHECK_FALSE(sys.has_k0_equation);
  REQUIRE(sys.quadratics.size() == 2);
  CHECK(sys.quadratics[0].l == Rational(1, 2));
  CHECK(sys.quadratics[0].b == Rational(1, 2));
  CHECK(sys.quadratics[1].l == Rational(7, 4));
  CHECK(sys.quadratics[1].b == Rational(-3, 4));
  // x1 - x2/2 = 2c + 1
  const auto k = sys.killing_trace_coefficients();
  CHECK(k == std::vector<Rational>{Rational(1), Rational(-1, 2)});
  CHECK(sys.gamma_total == Rational(1, 2));
}

TEST_CASE("D(2,1;alpha) and C(n) system shapes")
{
  const EinsteinSystem d21 = build_system(FamilySpec::d21(1.0));
  CHECK(d21.form_kind == FormKind::Case7);
  REQUIRE(d21.quadratics.size() == 3);
  for (const auto& q : d21.quadratics) {
    CHECK(q.l == 1);
  }
  CHECK(d21.quadratics[2].b == Rational(-1, 2));
  CHECK(d21.trace_gamma == std::vector<Rational>{Rational(3, 8), Rational(3, 8), Rational(-3, 4)});
  CHECK_THROWS_AS(d21.killing_trace_coefficients(), InputError);

  const EinsteinSystem c4 = build_system(FamilySpec::c(4));
  CHECK(c4.has_k0_equation);
  CHECK(c4.quadratics.size() == 1);
  CHECK(c4.num_vars() == 2);
  CHECK(c4.residuals({1.0, 1.0}, -0.25).size() == 3);
  CHECK_THROWS_AS(c4.residuals({1.0}, -0.25), InputError);
}

TEST_CASE("inconsistent form kinds are rejected")
{
  CHECK_THROWS_AS(build_system(family_data(FamilySpec::a(1, 1)), FormKind::Killing), InputError);
  CHECK_THROWS_AS(build_system(family_data(FamilySpec::b(1, 1)), FormKind::Case2), InputError);
  CHECK_THROWS_AS(build_system(family_data(FamilySpec::d(3, 2)), FormKind::Case7), InputError);
}

TEST_CASE("unit metric solves every Killing system")
{
  for (const FamilySpec& s : catalog(3, 3)) {
    const FamilyData d = family_data(s);
    if (d.form != FormKind::Killing) {
      continue;
    }
    const std::string name = s.name();
    CAPTURE(name);
    const EinsteinSystem sys = build_system(s);
    const std::vector<double> x(sys.num_vars(), 1.0);
    CHECK(sys.max_residual(x, -0.25) < 1e-15);
    CHECK(std::abs(sys.killing_trace_residual(x, -0.25)) < 1e-15);
  }
}

TEST_CASE("solution counts on the complete cases")
{
  const auto f4 = solve(build_system(FamilySpec::f4()));
  REQUIRE(f4.size() == 1);
  CHECK(contains(f4, {1.0, 1.0}, -0.25, 1e-10));

  const auto a11 = solve(build_system(FamilySpec::a(1, 1)));
  REQUIRE(a11.size() == 2);
  CHECK(contains(a11, {1.0, 1.0}, 0.0, 1e-10));
  CHECK(contains(a11, {-1.0, -1.0}, 0.0, 1e-10));

  const auto d21 = solve(build_system(FamilySpec::d21(1.0)));
  REQUIRE(d21.size() == 4);
  const double t = std::sqrt(2.0 / 5.0);
  CHECK(contains(d21, {t, t, 2 * t}, -3.0 * t / 8.0, 1e-10));
  CHECK(contains(d21, {-t, -t, -2 * t}, 3.0 * t / 8.0, 1e-10));
  CHECK(contains(d21, {1, 1, 1}, 0.0, 1e-10));
  CHECK(contains(d21, {-1, -1, -1}, 0.0, 1e-10));
}

TEST_CASE("solver output contains the printed solutions and equals them where complete")
{
  for (const FamilySpec& s : catalog(3, 3)) {
    const std::string name = s.name();
    CAPTURE(name);
    const auto sols = solve(build_system(s));
    for (const auto& sol : sols) {
      CHECK(sol.residual < 1e-10);
      for (double v : sol.x) {
        CHECK(v != 0.0);
      }
    }
    const auto printed = known_solutions(s);
    for (const auto& p : printed) {
      if (p.approximate) {
        continue;
      }
      CHECK(contains(sols, p.x, p.c, 1e-8));
    }
    if (known_solutions_complete(s)) {
      CHECK(sols.size() == printed.size());
    }
  }
}

TEST_CASE("C(3) closed form and D(3,2) ricci-flat coexistence")
{
  const auto c3 = known_solutions(FamilySpec::c(3));
  CHECK(contains(c3, {11.0 / 21.0, 9.0 / 7.0}, -11.0 / 84.0, 1e-14));
  const auto d32 = solve(build_system(FamilySpec::d(3, 2)));
  const double r = std::sqrt(13.0);
  CHECK(contains(d32, {2 * std::sqrt(2.0) / r, 3 * std::sqrt(2.0) / r}, -5 * std::sqrt(2.0) / (16 * r), 1e-10));
  bool flat = false;
  bool non_flat = false;
  for (const auto& s : d32) {
    flat = flat || std::abs(s.c) < 1e-12;
    non_flat = non_flat || std::abs(s.c) > 1e-6;
  }
  CHECK(flat);
  CHECK(non_flat);
}

TEST_CASE("G(3) second solution")
{
  const auto sols = solve(build_system(FamilySpec::g3()));
  REQUIRE(sols.size() == 2);
  const auto printed = known_solutions(FamilySpec::g3());
  REQUIRE(printed.size() == 2);
  const EinsteinSolution& approx = printed[1];
  CHECK(approx.approximate);
  // The x-components agree with the four printed digits.
  const EinsteinSolution* match = nullptr;
  for (const auto& s : sols) {
    if (std::abs(s.x[0] - approx.x[0]) < 2e-4 && std::abs(s.x[1] - approx.x[1]) < 2e-4) {
      match = &s;
    }
  }
  REQUIRE(match != nullptr);
  CHECK(match->residual < 1e-10);
  // The trace equation x1 - x2/2 = 2c + 1 at the printed x fixes the sign of c.
  const double c_from_trace = (approx.x[0] - approx.x[1] / 2.0 - 1.0) / 2.0;
  CHECK(std::abs(match->c - c_from_trace) < 2e-4);
  CHECK(match->c < 0.0);
}

TEST_CASE("D(3,1) elimination polynomial")
{
  const EliminationResult e = elimination_polynomial(build_system(FamilySpec::d(3, 1)));
  CHECK(e.has_unit_root);
  CHECK(e.polynomial.degree() == 4);
  REQUIRE(e.printed.has_value());
  CHECK((*e.printed)[0] == 36);
  CHECK((*e.printed)[1] == -48);
  CHECK((*e.printed)[2] == 48);
  CHECK((*e.printed)[3] == -24);
  CHECK(e.printed_matches);
  CHECK(e.cubic.coeff(3) == 36);
  CHECK(e.cubic.coeff(0) == -24);
}

TEST_CASE("elimination roots biject with solver solutions")
{
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      std::vector<FamilySpec> specs = {FamilySpec::b(m, n)};
      if (m >= 2 && m - n != 1 && !(m == 2 && n == 1)) {
        specs.push_back(FamilySpec::d(m, n));
      }
      for (const auto& s : specs) {
        const std::string name = s.name();
        CAPTURE(name);
        const EinsteinSystem sys = build_system(s);
        const EliminationResult e = elimination_polynomial(sys);
        CHECK(e.has_unit_root);
        const auto sols = solve(sys);
        REQUIRE(e.roots.size() == sols.size());
        for (double root : e.roots) {
          bool found = false;
          for (const auto& sol : sols) {
            found = found || std::abs(sol.x[e.pivot] - root) < 1e-8;
          }
          CHECK(found);
        }
      }
    }
  }
}

TEST_CASE("elimination rejects the wrong shape")
{
  CHECK_THROWS_AS(elimination_polynomial(build_system(FamilySpec::d21(1.0))), InputError);
  CHECK_THROWS_AS(elimination_polynomial(build_system(FamilySpec::c(3)), std::size_t{0}), InputError);
}

TEST_CASE("real-form folding")
{
  EinsteinSolution a;
  a.x = {1.0, 1.0};
  const FoldResult ok = lift_real_form(a, default_folding(FamilySpec::a(1, 1)));
  CHECK(ok.liftable);
  CHECK(ok.solution.x == std::vector<double>{1.0});
  CHECK(ok.solution.provenance == Provenance::Lifted);

  const double t = std::sqrt(2.0 / 5.0);
  EinsteinSolution d;
  d.x = {t, t, 2 * t};
  d.c = -3 * t / 8;
  const FoldResult dd = lift_real_form(d, default_folding(FamilySpec::d21(1.0)));
  CHECK(dd.liftable);
  CHECK(dd.solution.x.size() == 2);

  EinsteinSolution bad;
  bad.x = {1.0, 1.5};
  const FoldResult rej = lift_real_form(bad, {{0, 1}});
  CHECK_FALSE(rej.liftable);
  CHECK_FALSE(rej.reason.empty());
  CHECK_THROWS_AS(lift_real_form(bad, {{0, 5}}), InputError);
  CHECK(default_folding(FamilySpec::b(1, 1)).empty());
}

TEST_CASE("Ricci verification of solver output")
{
  for (const FamilySpec& s : {FamilySpec::a(1, 0), FamilySpec::a(2, 1), FamilySpec::a(1, 1), FamilySpec::b(1, 1),
                              FamilySpec::b(2, 1), FamilySpec::c(3), FamilySpec::d(2, 1), FamilySpec::d(3, 1),
                              FamilySpec::d(3, 2)}) {
    const std::string name = s.name();
    CAPTURE(name);
    const Realization r = realize(s);
    for (const auto& sol : solve(build_system(s))) {
      const EinsteinSolution v = verify_solution(r, sol);
      CHECK(v.ricci_verified == RicciStamp::Verified);
      CHECK(v.ricci_deviation < 1e-8);
    }
  }
}

TEST_CASE("a perturbed solution fails verification with a named block")
{
  const Realization r = realize(FamilySpec::b(1, 1));
  EinsteinSolution sol;
  sol.x = {1.0 + 1e-3, 1.0};
  sol.c = -0.25;
  const EinsteinSolution v = verify_solution(r, sol);
  CHECK(v.ricci_verified == RicciStamp::Failed);
  CHECK_FALSE(v.offending_block.empty());
  sol.x = {1.0};
  CHECK(verify_solution(r, sol).ricci_verified == RicciStamp::NotApplicable);
}

TEST_CASE("determinism and sign symmetry")
{
  const EinsteinSystem sys = build_system(FamilySpec::d(4, 3));
  const auto a = solve(sys);
  const auto b = solve(sys);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].x == b[i].x);
    CHECK(a[i].c == b[i].c);
  }
  for (const auto& s : a) {
    std::vector<double> neg = s.x;
    for (double& v : neg) {
      v = -v;
    }
    CHECK(contains(a, neg, -s.c, 1e-9));
  }
  for (std::size_t i = 1; i < a.size(); ++i) {
    CHECK(a[i - 1].c <= a[i].c);
  }
}

TEST_CASE("solution JSON schema")
{
  const auto sols = solve(build_system(FamilySpec::b(1, 1)));
  const auto doc = solutions_to_json(FamilySpec::b(1, 1), FormKind::Killing, sols);
  CHECK(doc["family"] == "B(1,1)");
  CHECK(doc.contains("params"));
  CHECK(doc["form"] == "killing");
  REQUIRE(doc["solutions"].size() == sols.size());
  const auto& first = doc["solutions"][0];
  for (const char* key : {"x", "c", "residual", "ricci_verified", "provenance"}) {
    CHECK(first.contains(key));
  }
  CHECK(first["provenance"] == "solver");
  CHECK(first["ricci_verified"] == "unchecked");
}
