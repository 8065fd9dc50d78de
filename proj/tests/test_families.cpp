#include "superein/families.hpp"

#include <doctest.h>

#include <algorithm>

using namespace superein;

TEST_CASE("names and routing")
{
  CHECK(FamilySpec::a(2, 1).name() == "A(2,1)");
  CHECK(FamilySpec::c(3).name() == "C(3)");
  CHECK(FamilySpec::f4().name() == "F(4)");
  CHECK(FamilySpec::a(2, 2).kind == FamilyKind::Ann);
  CHECK(FamilySpec::d(3, 2).kind == FamilyKind::Dn1n);
  CHECK(FamilySpec::d(3, 1).kind == FamilyKind::D);
  const FamilySpec d21 = FamilySpec::d(2, 1);
  CHECK(d21.kind == FamilyKind::D21alpha);
  CHECK(d21.alpha == 1.0);
  CHECK(FamilySpec::d21(2.5).name() == "D(2,1;2.5)");
  CHECK(FamilySpec::a(1, 0).realizable());
  CHECK_FALSE(FamilySpec::f4().realizable());
  CHECK_FALSE(FamilySpec::d21(2.5).realizable());
}

TEST_CASE("range validation")
{
  CHECK_THROWS_AS(FamilySpec::a(0, 0), InputError);
  CHECK_THROWS_AS(FamilySpec::a(-1, 2), InputError);
  CHECK_THROWS_AS(FamilySpec::b(1, 0), InputError);
  CHECK_THROWS_AS(FamilySpec::c(2), InputError);
  CHECK_THROWS_AS(FamilySpec::d(1, 1), InputError);
  CHECK_THROWS_AS(FamilySpec::d21(0.0), InputError);
  CHECK_THROWS_AS(FamilySpec::d21(-1.0), InputError);
  CHECK_THROWS_AS(FamilySpec::make("Q", 1, 1), InputError);
}

TEST_CASE("tabulated data of A(1,0)")
{
  const FamilyData d = family_data(FamilySpec::a(1, 0));
  CHECK(d.has_k0);
  CHECK(d.dim_odd == 4);
  REQUIRE(d.ideals.size() == 2);
  CHECK(d.ideals[0].dim == 1);
  CHECK(d.ideals[1].dim == 3);
  CHECK(d.ideals[1].l == Rational(1, 2));
  CHECK(d.variable_names() == std::vector<std::string>{"x0", "x1"});
}

TEST_CASE("tabulated data of A(2,1)")
{
  const FamilyData d = family_data(FamilySpec::a(2, 1));
  CHECK(d.dim_odd == 12);
  REQUIRE(d.ideals.size() == 3);
  CHECK(d.ideals[1].l == Rational(2, 3));
  CHECK(d.ideals[2].l == Rational(3, 2));
  CHECK(d.ideals[1].b == 1 - d.ideals[1].l);
  CHECK(d.ideals[2].b == 1 - d.ideals[2].l);
}

TEST_CASE("tabulated data of B, C, D, F(4), G(3)")
{
  const FamilyData b11 = family_data(FamilySpec::b(1, 1));
  REQUIRE(b11.ideals.size() == 2);
  CHECK(b11.ideals[0].l == 2);
  CHECK(b11.ideals[1].l == Rational(3, 4));

  const FamilyData c3 = family_data(FamilySpec::c(3));
  CHECK(c3.has_k0);
  CHECK(c3.dim_odd == 8);
  CHECK(c3.ideals[0].dim == 1);
  CHECK(c3.ideals[1].dim == 10);
  CHECK(c3.ideals[1].l == Rational(1, 3));

  const FamilyData d32 = family_data(FamilySpec::d(3, 2));
  CHECK(d32.form == FormKind::Case6);
  CHECK(d32.ideals[0].b == 1);
  CHECK(d32.ideals[1].b == Rational(-2, 3));

  const FamilyData f4 = family_data(FamilySpec::f4());
  CHECK(f4.dim_odd == 16);
  CHECK(f4.ideals[0].l == Rational(2, 5));
  CHECK(f4.ideals[1].b == -1);
  CHECK(f4.ideals[0].gamma == Rational(7, 8));
  CHECK(f4.ideals[1].gamma == Rational(-3, 8));

  const FamilyData g3 = family_data(FamilySpec::g3());
  CHECK(g3.ideals[0].b == Rational(1, 2));
  CHECK(g3.ideals[0].gamma == 1);
  CHECK(g3.ideals[1].gamma == Rational(-1, 2));
  CHECK(g3.dim_odd == 14);
}

TEST_CASE("gamma sums: one half for the Killing form, zero otherwise")
{
  for (const FamilySpec& s : {FamilySpec::a(2, 0), FamilySpec::b(2, 1), FamilySpec::c(4), FamilySpec::d(3, 1),
                              FamilySpec::f4(), FamilySpec::g3()}) {
    const std::string name = s.name();
    CAPTURE(name);
    CHECK(gamma_sum(family_data(s)) == Rational(1, 2));
  }
  for (const FamilySpec& s : {FamilySpec::a(1, 1), FamilySpec::a(3, 3), FamilySpec::d(3, 2), FamilySpec::d21(1.0),
                              FamilySpec::d21(2.5)}) {
    const std::string name = s.name();
    CAPTURE(name);
    CHECK(gamma_sum(family_data(s)) == 0);
  }
}

TEST_CASE("A(n,n) Casimir scalars")
{
  for (int n = 1; n <= 4; ++n) {
    const FamilyData d = family_data(FamilySpec::a(n, n));
    REQUIRE(d.ideals.size() == 2);
    Rational expected(n * (n + 2), 2 * (n + 1) * (n + 1));
    expected.canonicalize();
    CHECK(d.ideals[0].gamma == expected);
    CHECK(d.ideals[1].gamma == -expected);
    CHECK(d.ideals[0].b == 1);
    CHECK(d.ideals[1].b == -1);
  }
}

TEST_CASE("D(2,1;1) data")
{
  const FamilyData d = family_data(FamilySpec::d21(1.0));
  REQUIRE(d.ideals.size() == 3);
  CHECK(d.ideals[0].gamma == Rational(3, 8));
  CHECK(d.ideals[1].gamma == Rational(3, 8));
  CHECK(d.ideals[2].gamma == Rational(-3, 4));
}

TEST_CASE("B(0,n) has a single even ideal")
{
  const FamilyData d = family_data(FamilySpec::b(0, 2));
  CHECK(d.ideals.size() == 1);
  CHECK(d.dim_odd == 4);
}

TEST_CASE("builders reject invalid parameters")
{
  CHECK_THROWS_AS(build_sl_super(1, 1), InputError);
  CHECK_THROWS_AS(build_osp(3, 3), InputError);
  CHECK_THROWS_AS(build_psl(0), InputError);
  CHECK_THROWS_AS(realize(FamilySpec::f4()), ScopeError);
  CHECK_THROWS_AS(realize(FamilySpec::g3()), ScopeError);
  CHECK_THROWS_AS(realize(FamilySpec::d21(2.5)), ScopeError);
}

TEST_CASE("realizations have the tabulated dimensions and form scales")
{
  for (const FamilySpec& s : {FamilySpec::a(1, 0), FamilySpec::a(2, 2), FamilySpec::b(1, 1), FamilySpec::c(3),
                              FamilySpec::d(3, 1), FamilySpec::d21(1.0)}) {
    const std::string name = s.name();
    CAPTURE(name);
    const Realization r = realize(s);
    CHECK(r.algebra.basis().n_odd() == r.data.dim_odd);
    std::size_t even = 0;
    for (const auto& id : r.data.ideals) {
      even += id.dim;
    }
    CHECK(r.algebra.basis().n_even() == even);
    CHECK(check_super_jacobi(r.algebra).residual < 1e-12);
    CHECK(r.canonical_form.flags.bi_invariant == Tri::True);
  }
  CHECK(realize(FamilySpec::a(2, 2)).form_scale == 6);
  CHECK(realize(FamilySpec::d(3, 2)).form_scale == 4);
  CHECK(realize(FamilySpec::d21(1.0)).form_scale == 2);
}

TEST_CASE("catalog contents")
{
  const auto cat = catalog(1, 1);
  std::vector<std::string> names;
  for (const auto& s : cat) {
    names.push_back(s.name());
  }
  const auto has = [&](const std::string& n) { return std::find(names.begin(), names.end(), n) != names.end(); };
  CHECK(has("A(1,0)"));
  CHECK(has("A(1,1)"));
  CHECK(has("B(1,1)"));
  CHECK(has("C(3)"));
  CHECK(has("F(4)"));
  CHECK(has("G(3)"));
  CHECK(has("D(2,1;2.5)"));
  CHECK_FALSE(has("A(0,0)"));
  // D(2,1) appears once.
  CHECK(std::count(names.begin(), names.end(), "D(2,1;1)") == 1);
}

TEST_CASE("spec JSON round trip")
{
  for (const FamilySpec& s : {FamilySpec::a(2, 1), FamilySpec::d21(2.5), FamilySpec::g3()}) {
    CHECK(spec_from_json(spec_to_json(s)) == s);
  }
}
