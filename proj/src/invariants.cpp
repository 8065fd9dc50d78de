#include "superein/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace superein {

namespace {

using Idx = Eigen::Index;

Idx ix(std::size_t v) { return static_cast<Idx>(v); }

std::vector<std::size_t> all_odd(const LieSuperAlgebra& alg)
{
  std::vector<std::size_t> out(alg.basis().n_odd());
  std::iota(out.begin(), out.end(), alg.basis().n_even());
  return out;
}

RatioFit fit_ratio(const CMatrix& lhs, const CMatrix& rhs)
{
  const double denom = rhs.squaredNorm();
  RatioFit fit;
  if (denom == 0.0) {
    throw DegeneracyError("ratio fit: reference form vanishes identically");
  }
  const Complex num = (rhs.conjugate().cwiseProduct(lhs)).sum();
  fit.value = num.real() / denom;
  fit.residual = (lhs - fit.value * rhs).cwiseAbs().maxCoeff() / rhs.cwiseAbs().maxCoeff();
  return fit;
}

void require_in_even(const LieSuperAlgebra& alg, const IdealHandle& ideal)
{
  if (ideal.end > alg.basis().n_even() || ideal.end <= ideal.begin) {
    throw InputError("ideal range [" + std::to_string(ideal.begin) + "," + std::to_string(ideal.end) +
                     ") is not a non-empty range of the even part");
  }
}

/// Odd block of ad e_a.
CMatrix odd_block(const LieSuperAlgebra& alg, std::size_t a)
{
  const Idx ne = ix(alg.basis().n_even());
  const Idx no = ix(alg.basis().n_odd());
  return alg.ad(a).block(ne, ne, no, no);
}

} // namespace

CMatrix ideal_killing_form(const LieSuperAlgebra& alg, const IdealHandle& ideal)
{
  require_in_even(alg, ideal);
  const Idx b = ix(ideal.begin);
  const Idx d = ix(ideal.size());
  std::vector<CMatrix> blocks;
  blocks.reserve(ideal.size());
  for (std::size_t a = ideal.begin; a < ideal.end; ++a) {
    blocks.push_back(alg.ad(a).block(b, b, d, d));
  }
  CMatrix out(d, d);
  for (Idx i = 0; i < d; ++i) {
    for (Idx j = i; j < d; ++j) {
      out(i, j) = (blocks[static_cast<std::size_t>(i)] * blocks[static_cast<std::size_t>(j)]).trace();
      out(j, i) = out(i, j);
    }
  }
  return out;
}

CMatrix odd_trace_form(const LieSuperAlgebra& alg, const IdealHandle& ideal, const std::vector<std::size_t>& odd_coords)
{
  require_in_even(alg, ideal);
  const Idx d = ix(ideal.size());
  const Idx k = ix(odd_coords.size());
  std::vector<CMatrix> rho;
  rho.reserve(ideal.size());
  for (std::size_t a = ideal.begin; a < ideal.end; ++a) {
    CMatrix r(k, k);
    for (Idx i = 0; i < k; ++i) {
      for (Idx j = 0; j < k; ++j) {
        r(i, j) = alg.ad(a)(ix(odd_coords[static_cast<std::size_t>(i)]), ix(odd_coords[static_cast<std::size_t>(j)]));
      }
    }
    rho.push_back(std::move(r));
  }
  CMatrix out(d, d);
  for (Idx i = 0; i < d; ++i) {
    for (Idx j = i; j < d; ++j) {
      out(i, j) = (rho[static_cast<std::size_t>(i)] * rho[static_cast<std::size_t>(j)]).trace();
      out(j, i) = out(i, j);
    }
  }
  return out;
}

RatioFit representation_index(const LieSuperAlgebra& alg, const IdealHandle& ideal)
{
  return representation_index_on(alg, ideal, all_odd(alg));
}

RatioFit representation_index_on(const LieSuperAlgebra& alg, const IdealHandle& ideal,
                                 const std::vector<std::size_t>& odd_coords)
{
  require_in_even(alg, ideal);
  if (ideal.kind == IdealKind::Abelian) {
    throw InputError("representation index is undefined for the abelian ideal '" + ideal.name + "'");
  }
  std::vector<char> inside(alg.dim(), 0);
  for (std::size_t o : odd_coords) {
    if (o < alg.basis().n_even() || o >= alg.dim()) {
      throw InputError("representation_index_on: coordinate " + std::to_string(o) + " is not odd");
    }
    inside[o] = 1;
  }
  // Invariance: ad e_a maps the subspace into itself.
  for (std::size_t a = ideal.begin; a < ideal.end; ++a) {
    for (std::size_t o : odd_coords) {
      for (const auto& e : alg.bracket_of_basis(a, o)) {
        if (!inside[e.index] && std::abs(e.value) > 1e-12) {
          throw InputError("representation_index_on: subspace is not invariant under '" + ideal.name + "'");
        }
      }
    }
  }
  return fit_ratio(odd_trace_form(alg, ideal, odd_coords), ideal_killing_form(alg, ideal));
}

CasimirResult casimir_on_odd(const LieSuperAlgebra& alg, const BilinearFormMatrix& form, const IdealHandle& ideal)
{
  require_in_even(alg, ideal);
  const CMatrix dual = dual_basis(form, ideal.begin, ideal.end, ideal.name);
  const Idx d = ix(ideal.size());
  const Idx no = ix(alg.basis().n_odd());
  std::vector<CMatrix> rho;
  rho.reserve(ideal.size());
  for (std::size_t a = ideal.begin; a < ideal.end; ++a) {
    rho.push_back(odd_block(alg, a));
  }
  CMatrix c = CMatrix::Zero(no, no);
  for (Idx k = 0; k < d; ++k) {
    CMatrix star = CMatrix::Zero(no, no);
    for (Idx m = 0; m < d; ++m) {
      if (dual(m, k) != Complex(0.0, 0.0)) {
        star += dual(m, k) * rho[static_cast<std::size_t>(m)];
      }
    }
    c += rho[static_cast<std::size_t>(k)] * star;
  }
  CasimirResult res;
  res.op.matrix = c;
  res.op.parity = Parity::Even;
  res.scalar = no > 0 ? c.trace() / static_cast<double>(no) : Complex(0.0, 0.0);
  res.off_scalar_residual = no > 0 ? (c - res.scalar * CMatrix::Identity(no, no)).cwiseAbs().maxCoeff() : 0.0;
  double comm = 0.0;
  for (const auto& r : rho) {
    if (no > 0) {
      comm = std::max(comm, (c * r - r * c).cwiseAbs().maxCoeff());
    }
  }
  res.commutator_residual = comm;
  return res;
}

Rational casimir_scalar_exact(const LieSuperAlgebra& alg, const RationalMatrix& gram, const IdealHandle& ideal)
{
  require_in_even(alg, ideal);
  if (!alg.has_exact()) {
    throw InputError("casimir_scalar_exact: algebra has no exact channel");
  }
  const RationalMatrix dual = dual_basis_exact(gram, ideal.begin, ideal.end, ideal.name);
  const std::size_t n_even = alg.basis().n_even();
  const std::size_t n = alg.dim();
  const std::size_t d = ideal.size();
  // T(a,c) = tr over the odd part of ad e_a ad e_c.
  RationalMatrix t(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t c = 0; c < d; ++c) {
      Rational acc = 0;
      for (std::size_t o = n_even; o < n; ++o) {
        for (const auto& e : alg.exact_bracket(ideal.begin + c, o)) {
          for (const auto& f : alg.exact_bracket(ideal.begin + a, e.index)) {
            if (f.index == o) {
              acc += e.value * f.value;
            }
          }
        }
      }
      t(a, c) = acc;
    }
  }
  Rational trace = 0;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t m = 0; m < d; ++m) {
      trace += dual(m, k) * t(k, m);
    }
  }
  const std::size_t no = alg.basis().n_odd();
  if (no == 0) {
    return Rational(0);
  }
  Rational out = trace / Rational(static_cast<long>(no));
  out.canonicalize();
  return out;
}

RatioFit b_ratio(const LieSuperAlgebra& alg, const BilinearFormMatrix& form, const IdealHandle& ideal)
{
  require_in_even(alg, ideal);
  if (ideal.kind == IdealKind::Abelian) {
    throw InputError("b_ratio is undefined for the abelian ideal '" + ideal.name + "'");
  }
  const Idx b = ix(ideal.begin);
  const Idx d = ix(ideal.size());
  return fit_ratio(form.gram.block(b, b, d, d), ideal_killing_form(alg, ideal));
}

double verify_killing_casimir(const LieSuperAlgebra& alg, const BilinearFormMatrix& form)
{
  const Idx ne = ix(alg.basis().n_even());
  const Idx no = ix(alg.basis().n_odd());
  if (no == 0) {
    return 0.0;
  }
  const CMatrix k = killing_form(alg).gram.block(ne, ne, no, no);
  CMatrix total = CMatrix::Zero(no, no);
  for (const auto& ideal : alg.decomposition()) {
    total += casimir_on_odd(alg, form, ideal).op.matrix;
  }
  const CMatrix rhs = 2.0 * form.gram.block(ne, ne, no, no) * total;
  return (k - rhs).cwiseAbs().maxCoeff();
}

TraceIdentityResiduals verify_trace_identities(const LieSuperAlgebra& alg, const BilinearFormMatrix& form,
                                               const IdealHandle& ideal)
{
  require_in_even(alg, ideal);
  const std::size_t ne = alg.basis().n_even();
  const std::size_t n = alg.dim();
  const Idx no = ix(alg.basis().n_odd());
  TraceIdentityResiduals res;
  if (no == 0) {
    return res;
  }
  const CMatrix c = casimir_on_odd(alg, form, ideal).op.matrix;
  const CMatrix bc = form.gram.block(ix(ne), ix(ne), no, no) * c;

  std::vector<Complex> odd_trace(ideal.size());
  for (std::size_t m = ideal.begin; m < ideal.end; ++m) {
    odd_trace[m - ideal.begin] = odd_block(alg, m).trace();
  }
  for (std::size_t a = ne; a < n; ++a) {
    const CMatrix& ada = alg.ad(a);
    for (std::size_t b = ne; b < n; ++b) {
      const CMatrix& adb = alg.ad(b);
      Complex t1(0.0, 0.0);
      Complex t2(0.0, 0.0);
      Complex t3(0.0, 0.0);
      for (std::size_t m = ideal.begin; m < ideal.end; ++m) {
        t1 += ada(ix(m), ix(b)) * odd_trace[m - ideal.begin];
        for (std::size_t o = ne; o < n; ++o) {
          t2 += ada(ix(m), ix(o)) * adb(ix(o), ix(m));
          t3 += ada(ix(o), ix(m)) * adb(ix(m), ix(o));
        }
      }
      const Complex target = bc(ix(a - ne), ix(b - ne));
      res.commutator_trace = std::max(res.commutator_trace, std::abs(t1));
      res.ad_ad_trace = std::max(res.ad_ad_trace, std::abs(t2 - target));
      res.nested_trace = std::max(res.nested_trace, std::abs(t3 + target));
    }
  }
  return res;
}

DataComparison compare_with_table(const Realization& real)
{
  DataComparison out;
  const auto& alg = real.algebra;
  const auto& data = real.data;
  auto add = [&](const std::string& quantity, const std::string& ideal, double tab, double comp) {
    out.rows.push_back({quantity, ideal, tab, comp});
    out.max_deviation = std::max(out.max_deviation, std::abs(tab - comp));
  };
  add("dim_odd", "", static_cast<double>(data.dim_odd), static_cast<double>(alg.basis().n_odd()));
  if (alg.decomposition().size() != data.ideals.size()) {
    add("ideal_count", "", static_cast<double>(data.ideals.size()), static_cast<double>(alg.decomposition().size()));
    return out;
  }
  for (std::size_t i = 0; i < data.ideals.size(); ++i) {
    const auto& tab = data.ideals[i];
    const auto& blk = alg.decomposition()[i];
    add("dim", tab.name, static_cast<double>(tab.dim), static_cast<double>(blk.size()));
    if (tab.kind == IdealKind::Simple) {
      add("l", tab.name, to_double(tab.l), representation_index(alg, blk).value);
      add("b", tab.name, to_double(tab.b), b_ratio(alg, real.canonical_form, blk).value);
    }
    add("gamma", tab.name, to_double(tab.gamma), casimir_on_odd(alg, real.canonical_form, blk).scalar.real());
  }
  return out;
}

nlohmann::json verification_entry(const std::string& check, const std::string& family, double residual, double tol)
{
  return {{"check", check}, {"family", family}, {"residual", residual}, {"pass", residual < tol}};
}

} // namespace superein
