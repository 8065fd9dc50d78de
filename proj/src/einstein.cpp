#include "superein/einstein.hpp"

#include "superein/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace superein {

std::string to_string(RicciStamp s)
{
  switch (s) {
  case RicciStamp::Unchecked: return "unchecked";
  case RicciStamp::Verified: return "verified";
  case RicciStamp::NotApplicable: return "not-applicable";
  case RicciStamp::Failed: return "failed";
  }
  return "unchecked";
}

std::string to_string(Provenance p)
{
  switch (p) {
  case Provenance::Solver: return "solver";
  case Provenance::PrintedCatalog: return "printed_catalog";
  case Provenance::Lifted: return "lifted";
  }
  return "solver";
}

// ---------------------------------------------------------------------------
// System

std::vector<Rational> EinsteinSystem::killing_trace_coefficients() const
{
  if (form_kind != FormKind::Killing) {
    throw InputError("the 2c + 1 normalization needs B = K");
  }
  return trace_gamma;
}

std::vector<double> EinsteinSystem::residuals(const std::vector<double>& x, double c) const
{
  if (x.size() != num_vars()) {
    throw InputError("expected " + std::to_string(num_vars()) + " metric parameters, got " + std::to_string(x.size()));
  }
  std::vector<double> r;
  if (has_k0_equation) {
    r.push_back(c + x[0] / 4.0);
  }
  for (const auto& q : quadratics) {
    const double xv = x[q.var];
    r.push_back(0.25 * (to_double(q.l) * xv * xv - 1.0) - c * to_double(q.b) * xv);
  }
  double trace = -c;
  for (std::size_t i = 0; i < x.size(); ++i) {
    trace += (x[i] / 2.0 - 1.0) * to_double(trace_gamma[i]);
  }
  r.push_back(trace);
  return r;
}

double EinsteinSystem::max_residual(const std::vector<double>& x, double c) const
{
  double worst = 0.0;
  for (double v : residuals(x, c)) {
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

double EinsteinSystem::killing_trace_residual(const std::vector<double>& x, double c) const
{
  double lhs = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    lhs += to_double(trace_gamma[i]) * x[i];
  }
  return lhs - (2.0 * c + 1.0);
}

EinsteinSystem build_system(const FamilyData& data, FormKind form_kind)
{
  const std::string name = data.spec.name();
  switch (form_kind) {
  case FormKind::Killing:
    if (!data.killing_nondegenerate) {
      throw InputError(name + " has K = 0; the Killing form cannot define the metric family");
    }
    break;
  case FormKind::Case2:
    if (data.spec.kind != FamilyKind::Ann) {
      throw InputError("form case2 applies only to A(n,n), not " + name);
    }
    break;
  case FormKind::Case6:
    if (data.spec.kind != FamilyKind::Dn1n) {
      throw InputError("form case6 applies only to D(n+1,n), not " + name);
    }
    break;
  case FormKind::Case7:
    if (data.spec.kind != FamilyKind::D21alpha) {
      throw InputError("form case7 applies only to D(2,1;alpha), not " + name);
    }
    break;
  }
  if (form_kind != data.form) {
    throw InputError("form " + to_string(form_kind) + " does not match the tabulated form " + to_string(data.form) +
                     " of " + name);
  }

  EinsteinSystem sys;
  sys.data = data;
  sys.form_kind = form_kind;
  sys.has_k0_equation = data.has_k0;
  for (std::size_t v = 0; v < data.ideals.size(); ++v) {
    const IdealData& id = data.ideals[v];
    sys.trace_gamma.push_back(id.gamma);
    if (id.kind == IdealKind::Simple) {
      sys.quadratics.push_back({v, id.l, id.b});
    }
  }
  sys.gamma_total = gamma_sum(data);
  return sys;
}

EinsteinSystem build_system(const FamilySpec& spec)
{
  const FamilyData data = family_data(spec);
  return build_system(data, data.form);
}

// ---------------------------------------------------------------------------
// Numeric solve

namespace {

struct BranchModel
{
  double k0_gamma = 0.0;
  bool has_k0 = false;
  struct Q
  {
    std::size_t var;
    double l, b, gamma, sign;
  };
  std::vector<Q> quads;
  std::size_t num_vars = 0;

  double discriminant(const Q& q, double c) const { return 4.0 * c * c * q.b * q.b + q.l; }

  double xq(const Q& q, double c) const
  {
    return (2.0 * c * q.b + q.sign * std::sqrt(std::max(0.0, discriminant(q, c)))) / q.l;
  }

  bool defined(double c) const
  {
    for (const auto& q : quads) {
      if (discriminant(q, c) < 0.0) {
        return false;
      }
    }
    return true;
  }

  double f(double c) const
  {
    double r = -c;
    if (has_k0) {
      r += (-2.0 * c - 1.0) * k0_gamma;
    }
    for (const auto& q : quads) {
      r += (xq(q, c) / 2.0 - 1.0) * q.gamma;
    }
    return r;
  }

  double df(double c) const
  {
    double r = -1.0;
    if (has_k0) {
      r += -2.0 * k0_gamma;
    }
    for (const auto& q : quads) {
      const double d = std::sqrt(std::max(discriminant(q, c), 1e-300));
      const double dx = (2.0 * q.b + q.sign * 4.0 * c * q.b * q.b / d) / q.l;
      r += dx / 2.0 * q.gamma;
    }
    return r;
  }

  std::vector<double> x(double c) const
  {
    std::vector<double> out(num_vars, 0.0);
    if (has_k0) {
      out[0] = -4.0 * c;
    }
    for (const auto& q : quads) {
      out[q.var] = xq(q, c);
    }
    return out;
  }
};

template <class F>
double bisect(const F& fn, double a, double b, double tol)
{
  double fa = fn(a);
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) {
      break;
    }
    const double fm = fn(mid);
    if (fm == 0.0) {
      return mid;
    }
    if ((fa < 0.0) == (fm < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

struct Candidate
{
  double c;
  double abs_f;
  /// Found as a critical point of f; exact for a double root.
  bool tangent = false;
};

bool solution_less(const EinsteinSolution& a, const EinsteinSolution& b)
{
  if (a.c != b.c) {
    return a.c < b.c;
  }
  return a.x < b.x;
}

std::string format_vector(const std::vector<double>& x, double c)
{
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (double v : x) {
    os << v << ", ";
  }
  os << "c=" << c << ")";
  return os.str();
}

} // namespace

SolveResult solve_detailed(const EinsteinSystem& sys, const SolveOptions& opts)
{
  SolveResult result;
  result.cmax = opts.cmax;
  const std::size_t s = sys.quadratics.size();
  const double tangency_tol = 1e-11;
  const double cluster_tol = 1e-6;

  std::vector<EinsteinSolution> collected;
  for (std::size_t mask = 0; mask < (std::size_t(1) << s); ++mask) {
    BranchModel model;
    model.num_vars = sys.num_vars();
    model.has_k0 = sys.has_k0_equation;
    if (model.has_k0) {
      model.k0_gamma = to_double(sys.trace_gamma[0]);
    }
    for (std::size_t i = 0; i < s; ++i) {
      const auto& q = sys.quadratics[i];
      model.quads.push_back({q.var, to_double(q.l), to_double(q.b), to_double(sys.trace_gamma[q.var]),
                             (mask >> i) & 1 ? -1.0 : 1.0});
    }

    std::vector<Candidate> cands;
    const auto steps = static_cast<long>(std::llround(2.0 * opts.cmax / opts.step));
    auto grid = [&](long k) { return -opts.cmax + static_cast<double>(k) * opts.step; };
    auto f = [&](double c) { return model.f(c); };
    auto df = [&](double c) { return model.df(c); };

    double c_prev = grid(0);
    bool prev_def = model.defined(c_prev);
    double f_prev = prev_def ? f(c_prev) : 0.0;
    double d_prev = prev_def ? df(c_prev) : 0.0;
    for (long k = 1; k <= steps; ++k) {
      const double c_cur = grid(k);
      const bool cur_def = model.defined(c_cur);
      if (!cur_def) {
        prev_def = false;
        c_prev = c_cur;
        continue;
      }
      const double f_cur = f(c_cur);
      const double d_cur = df(c_cur);
      if (prev_def) {
        if (f_prev == 0.0) {
          cands.push_back({c_prev, 0.0});
        } else if ((f_prev < 0.0) != (f_cur < 0.0) && f_cur != 0.0) {
          const double root = bisect(f, c_prev, c_cur, opts.bisect_tol);
          cands.push_back({root, std::abs(f(root))});
        }
        // f touches zero without crossing: look for a critical point with |f| ~ 0.
        if ((d_prev < 0.0) != (d_cur < 0.0) && d_prev != 0.0 && d_cur != 0.0) {
          const double crit = bisect(df, c_prev, c_cur, opts.bisect_tol);
          const double fc = std::abs(f(crit));
          if (fc <= tangency_tol) {
            cands.push_back({crit, fc, true});
          }
        } else if (d_cur == 0.0 && std::abs(f_cur) <= tangency_tol) {
          cands.push_back({c_cur, std::abs(f_cur), true});
        }
      }
      if (k == steps && f_cur == 0.0) {
        cands.push_back({c_cur, 0.0});
      }
      prev_def = true;
      c_prev = c_cur;
      f_prev = f_cur;
      d_prev = d_cur;
    }
    // Branch-discriminant zeros (only possible when some l_i < 0).
    for (const auto& q : model.quads) {
      if (q.l < 0.0 && q.b != 0.0) {
        const double cd = std::sqrt(-q.l) / (2.0 * std::abs(q.b));
        for (double cand : {-cd, cd}) {
          if (std::abs(cand) <= opts.cmax && model.defined(cand) && std::abs(f(cand)) <= tangency_tol) {
            cands.push_back({cand, std::abs(f(cand))});
          }
        }
      }
    }

    // A double root can show up as both a rounding-level crossing and a tangency.
    // The crossing sits up to sqrt(eps) away from the true root, so the critical
    // point wins; otherwise keep the smaller |f|.
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.c < b.c; });
    std::vector<Candidate> merged;
    for (const auto& cd : cands) {
      if (!merged.empty() && cd.c - merged.back().c <= cluster_tol) {
        Candidate& kept = merged.back();
        if (cd.tangent != kept.tangent ? cd.tangent : cd.abs_f < kept.abs_f) {
          kept = cd;
        }
        continue;
      }
      merged.push_back(cd);
    }

    for (const auto& cd : merged) {
      EinsteinSolution sol;
      sol.c = cd.c;
      sol.x = model.x(cd.c);
      sol.provenance = Provenance::Solver;
      const bool degenerate =
          std::any_of(sol.x.begin(), sol.x.end(), [](double v) { return std::abs(v) < 1e-9; });
      if (degenerate) {
        result.notes.push_back("discarded degenerate root " + format_vector(sol.x, sol.c) + ": some x_i = 0");
        continue;
      }
      sol.residual = sys.max_residual(sol.x, sol.c);
      if (sol.residual > 1e-9) {
        result.notes.push_back("discarded spurious crossing " + format_vector(sol.x, sol.c));
        continue;
      }
      collected.push_back(std::move(sol));
    }
  }

  std::sort(collected.begin(), collected.end(), solution_less);
  for (auto& sol : collected) {
    const bool dup = std::any_of(result.solutions.begin(), result.solutions.end(),
                                 [&](const EinsteinSolution& o) { return solution_distance(o, sol) <= 1e-8; });
    if (!dup) {
      result.solutions.push_back(std::move(sol));
    }
  }
  return result;
}

std::vector<EinsteinSolution> solve(const EinsteinSystem& sys, const SolveOptions& opts)
{
  return solve_detailed(sys, opts).solutions;
}

double solution_distance(const EinsteinSolution& a, const EinsteinSolution& b)
{
  if (a.x.size() != b.x.size()) {
    return std::numeric_limits<double>::infinity();
  }
  double d = std::abs(a.c - b.c);
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    d = std::max(d, std::abs(a.x[i] - b.x[i]));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Exact elimination

std::optional<std::array<Rational, 4>> printed_quartic_coefficients(const FamilySpec& spec)
{
  const Rational m = spec.m;
  const Rational n = spec.n;
  if (spec.kind == FamilyKind::B) {
    const Rational A = 2 * (2 * m * m * m + (-4 * n + 1) * m * m + n * (4 * n - 1) * m - 2 * n * n * n);
    const Rational B = -2 * (6 * m * m * m - (12 * n + 1) * m * m + (8 * n * n - n - 2) * m - 2 * n * n * n + n);
    const Rational C = (2 * m - 1) * (6 * m * m - (10 * n + 1) * m + 4 * n * n - n - 1);
    const Rational D = (2 * m - 1) * (2 * m - 1) * (n - m);
    return std::array<Rational, 4>{A, B, C, D};
  }
  if (spec.kind == FamilyKind::D) {
    const Rational A = 4 * m * m * m - 4 * (2 * n + 1) * m * m + (8 * n * n + 6 * n + 1) * m - n * (2 * n + 1) * (2 * n + 1);
    const Rational B = -12 * m * m * m + 4 * (6 * n + 5) * m * m - (16 * n * n + 22 * n + 7) * m +
                       n * (4 * n * n + 8 * n + 3);
    const Rational C = 2 * (m - 1) * (6 * m * m - m * (10 * n + 7) + (2 * n + 1) * (2 * n + 1));
    const Rational D = 2 * (m - 1) * (m - 1) * (2 * n - 2 * m + 1);
    return std::array<Rational, 4>{A, B, C, D};
  }
  return std::nullopt;
}

EliminationResult elimination_polynomial(const EinsteinSystem& sys, std::optional<std::size_t> pivot_opt)
{
  if (sys.quadratics.empty()) {
    throw InputError("elimination needs at least one simple ideal");
  }
  const std::size_t pivot = pivot_opt.value_or(sys.quadratics.front().var);
  const QuadraticEquation* p = nullptr;
  const QuadraticEquation* other = nullptr;
  for (const auto& q : sys.quadratics) {
    if (q.var == pivot) {
      p = &q;
    } else if (other == nullptr) {
      other = &q;
    } else {
      throw InputError("elimination supports at most two simple ideals; " + sys.data.spec.name() + " has " +
                       std::to_string(sys.quadratics.size()));
    }
  }
  if (p == nullptr) {
    throw InputError("pivot x" + std::to_string(pivot) + " is not a simple-ideal variable");
  }
  if (sgn(p->b) == 0) {
    throw InputError("pivot ideal has b = 0");
  }

  // c = Nc / Dc from the pivot quadratic.
  const Polynomial Nc({Rational(-1), Rational(0), p->l});
  const Polynomial Dc({Rational(0), Rational(4) * p->b});
  // 2 * trace: gamma_p x + gamma_j y + gamma_0 x_0 - 2 Gamma - 2c = 0 with x_0 = -4c.
  const Rational gamma_p = sys.trace_gamma[pivot];
  const Rational gamma_0 = sys.has_k0_equation ? sys.trace_gamma[0] : Rational(0);
  const Polynomial A0 = (Polynomial({Rational(-2) * sys.gamma_total, gamma_p}) * Dc) -
                        Nc.scaled(Rational(2) + Rational(4) * gamma_0);

  Polynomial poly;
  if (other == nullptr) {
    poly = A0;
  } else {
    const Polynomial A1 = Dc.scaled(sys.trace_gamma[other->var]);
    const BivariatePolynomial linear{A0, A1};
    const BivariatePolynomial quad{-Dc, Nc.scaled(Rational(-4) * other->b), Dc.scaled(other->l)};
    poly = resultant_y(linear, quad);
  }
  if (poly.is_zero()) {
    throw DegeneracyError("elimination polynomial vanishes identically for " + sys.data.spec.name());
  }
  poly.strip_x_power();

  EliminationResult res;
  res.pivot = pivot;
  res.has_unit_root = sgn(poly.eval(Rational(1))) == 0;
  res.printed = printed_quartic_coefficients(sys.data.spec);

  Polynomial cubic = res.has_unit_root ? poly.exact_div(Polynomial::linear_root(Rational(1))) : poly;
  Rational scale = 1;
  if (res.printed) {
    const auto& pc = *res.printed;
    Polynomial printed({pc[3], pc[2], pc[1], pc[0]});
    printed.strip_x_power();
    if (!printed.is_zero()) {
      scale = printed.leading() / cubic.leading();
    }
    res.printed_matches = res.has_unit_root && cubic.scaled(scale) == printed;
  } else {
    scale = poly.primitive().leading() / poly.leading();
  }
  res.polynomial = poly.scaled(scale);
  res.cubic = cubic.scaled(scale);
  res.roots = real_roots(res.polynomial);
  return res;
}

// ---------------------------------------------------------------------------
// Printed solutions

namespace {

EinsteinSolution printed(std::vector<double> x, double c, bool approximate = false)
{
  EinsteinSolution s;
  s.x = std::move(x);
  s.c = c;
  s.provenance = Provenance::PrintedCatalog;
  s.approximate = approximate;
  return s;
}

std::vector<double> ones(std::size_t n) { return std::vector<double>(n, 1.0); }

// Roots of the printed cubic, extended by the printed c(x1) and x2(x1).
template <class CFn, class X2Fn>
void cubic_branch(std::vector<EinsteinSolution>& out, const std::array<Rational, 4>& pc, CFn c_of, X2Fn x2_of)
{
  Polynomial cubic({pc[3], pc[2], pc[1], pc[0]});
  cubic.strip_x_power();
  for (double x1 : real_roots(cubic)) {
    if (std::abs(x1 - 1.0) < 1e-12 || x1 == 0.0) {
      continue;
    }
    out.push_back(printed({x1, x2_of(x1)}, c_of(x1)));
  }
}

} // namespace

std::vector<EinsteinSolution> known_solutions(const FamilySpec& spec)
{
  std::vector<EinsteinSolution> out;
  const FamilyData data = family_data(spec);
  const double m = spec.m;
  const double n = spec.n;
  switch (spec.kind) {
  case FamilyKind::A:
    out.push_back(printed(ones(data.num_vars()), -0.25));
    break;
  case FamilyKind::Ann:
    out.push_back(printed({1.0, 1.0}, 0.0));
    out.push_back(printed({-1.0, -1.0}, 0.0));
    break;
  case FamilyKind::B:
    out.push_back(printed(ones(data.num_vars()), -0.25));
    // The printed c(x1) and x2(x1) need both ideals.
    if (spec.m > 0) {
      cubic_branch(
          out, *printed_quartic_coefficients(spec),
          [&](double x) { return (2 * n * x * x - 2 * m + 1) / (4 * (2 * m - 2 * n - 1) * x); },
          [&](double x) { return (2 * (m - n) * x * x - 2 * (2 * m - 2 * n - 1) * x + 2 * m - 1) / ((2 * n + 1) * x); });
    }
    break;
  case FamilyKind::C: {
    out.push_back(printed({1.0, 1.0}, -0.25));
    const double den = 4 * n * n * n - 16 * n * n + 23 * n - 12;
    const double num = 4 * n * n * n - 20 * n * n + 33 * n - 16;
    out.push_back(printed({num / den, (2 * n * n - 3 * n) / (2 * n * n - 5 * n + 4)}, -num / (4 * den)));
    break;
  }
  case FamilyKind::D:
    out.push_back(printed({1.0, 1.0}, -0.25));
    cubic_branch(
        out, *printed_quartic_coefficients(spec),
        [&](double x) { return (n * x * x - m + 1) / (4 * (m - n - 1) * x); },
        [&](double x) { return ((2 * m - 2 * n - 1) * x * x - 4 * (m - n - 1) * x + 2 * (m - 1)) / ((2 * n + 1) * x); });
    break;
  case FamilyKind::Dn1n: {
    const double r = std::sqrt(2 * n * n + 2 * n + 1);
    const double s2 = std::sqrt(2.0);
    for (double sign : {1.0, -1.0}) {
      out.push_back(printed({sign, sign}, 0.0));
      out.push_back(printed({sign * s2 * n / r, sign * s2 * (n + 1) / r}, -sign * s2 * (2 * n + 1) / (8 * n * r)));
    }
    break;
  }
  case FamilyKind::D21alpha: {
    const double t = std::sqrt(2.0 / 5.0);
    for (double sign : {1.0, -1.0}) {
      out.push_back(printed({sign, sign, sign}, 0.0));
      out.push_back(printed({sign * t, sign * t, sign * 2 * t}, -sign * 3.0 / 8.0 * t));
    }
    break;
  }
  case FamilyKind::F4:
    out.push_back(printed({1.0, 1.0}, -0.25));
    break;
  case FamilyKind::G3:
    out.push_back(printed({1.0, 1.0}, -0.25));
    out.push_back(printed({1.1760, 0.8767}, 0.1312, true));
    break;
  }
  std::sort(out.begin(), out.end(), solution_less);
  return out;
}

bool known_solutions_complete(const FamilySpec& spec)
{
  switch (spec.kind) {
  case FamilyKind::A:
  case FamilyKind::Ann:
  case FamilyKind::C:
  case FamilyKind::Dn1n:
  case FamilyKind::D21alpha:
  case FamilyKind::F4:
    return true;
  default:
    return false;
  }
}

double printed_tolerance(const EinsteinSolution& sol) { return sol.approximate ? 2e-4 : 1e-9; }

// ---------------------------------------------------------------------------
// Real forms

FoldingPairs default_folding(const FamilySpec& spec)
{
  if (spec.kind == FamilyKind::Ann || spec.kind == FamilyKind::D21alpha) {
    return {{0, 1}};
  }
  return {};
}

FoldResult lift_real_form(const EinsteinSolution& sol, const FoldingPairs& folding)
{
  FoldResult res;
  res.solution = sol;
  std::vector<bool> drop(sol.x.size(), false);
  for (const auto& [i, j] : folding) {
    if (i >= sol.x.size() || j >= sol.x.size() || i == j) {
      throw InputError("folding pair (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    }
    const double diff = std::abs(sol.x[i] - sol.x[j]);
    if (diff > 1e-9) {
      std::ostringstream os;
      os << "x" << i << " and x" << j << " differ by " << diff;
      res.reason = os.str();
      return res;
    }
    drop[j] = true;
  }
  std::vector<double> folded;
  for (std::size_t k = 0; k < sol.x.size(); ++k) {
    if (!drop[k]) {
      folded.push_back(sol.x[k]);
    }
  }
  res.liftable = true;
  res.solution.x = std::move(folded);
  res.solution.provenance = Provenance::Lifted;
  res.solution.ricci_verified = RicciStamp::NotApplicable;
  return res;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

std::string block_of(const LieSuperAlgebra& alg, Eigen::Index i)
{
  const auto idx = static_cast<std::size_t>(i);
  if (idx >= alg.basis().n_even()) {
    return "odd";
  }
  for (const auto& blk : alg.decomposition()) {
    if (blk.contains(idx)) {
      return blk.name;
    }
  }
  return "even";
}

} // namespace

EinsteinSolution verify_solution(const Realization& real, const EinsteinSolution& sol, double tol)
{
  EinsteinSolution out = sol;
  if (sol.x.size() != real.data.num_vars()) {
    out.ricci_verified = RicciStamp::NotApplicable;
    return out;
  }
  const MetricParams params{sol.x};
  const BilinearFormMatrix metric = metric_from_params(real, params);
  const Connection conn = levi_civita_koszul(real.algebra, metric);
  const RicciDirect direct = ricci_direct(real.algebra, metric, conn);
  const BilinearFormMatrix closed = ricci_closed_form(real, params);
  const double scale = std::max(1.0, metric.max_abs_entry());
  const CMatrix target = metric.gram * Complex(sol.c, 0.0);

  double worst = -1.0;
  Eigen::Index wi = 0;
  Eigen::Index wj = 0;
  std::string route;
  const std::pair<const char*, const CMatrix*> routes[] = {{"direct", &direct.ric.gram},
                                                           {"closed-form", &closed.gram}};
  for (const auto& [name, ric] : routes) {
    Eigen::Index i = 0;
    Eigen::Index j = 0;
    const double dev = ((*ric) - target).cwiseAbs().maxCoeff(&i, &j) / scale;
    if (dev > worst) {
      worst = dev;
      wi = i;
      wj = j;
      route = name;
    }
  }
  out.ricci_deviation = worst;
  if (worst < tol) {
    out.ricci_verified = RicciStamp::Verified;
    out.offending_block.clear();
  } else {
    out.ricci_verified = RicciStamp::Failed;
    out.offending_block = block_of(real.algebra, wi) + " x " + block_of(real.algebra, wj) + " (" + route + ")";
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json solution_to_json(const EinsteinSolution& sol)
{
  nlohmann::json j;
  j["x"] = sol.x;
  j["c"] = sol.c;
  j["residual"] = sol.residual;
  j["ricci_verified"] = to_string(sol.ricci_verified);
  j["provenance"] = to_string(sol.provenance);
  return j;
}

nlohmann::json solutions_to_json(const FamilySpec& spec, FormKind form, const std::vector<EinsteinSolution>& sols)
{
  nlohmann::json j;
  j["family"] = spec.name();
  j["params"] = {{"m", spec.m}, {"n", spec.n}, {"alpha", spec.alpha}};
  j["form"] = to_string(form);
  j["solutions"] = nlohmann::json::array();
  for (const auto& s : sols) {
    j["solutions"].push_back(solution_to_json(s));
  }
  return j;
}

} // namespace superein
