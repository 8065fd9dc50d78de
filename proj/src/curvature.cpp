#include "superein/curvature.hpp"

#include "superein/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace superein {

namespace {

using Idx = Eigen::Index;

Idx ix(std::size_t v) { return static_cast<Idx>(v); }

void check_params(const LieSuperAlgebra& alg, const MetricParams& params)
{
  if (params.x.size() != alg.decomposition().size()) {
    throw InputError("metric parameters: expected " + std::to_string(alg.decomposition().size()) +
                     " values, got " + std::to_string(params.x.size()));
  }
  for (double v : params.x) {
    if (!std::isfinite(v) || v == 0.0) {
      throw InputError("metric parameters must be finite and non-zero");
    }
  }
}

/// Which decomposition block holds even index a.
std::vector<std::size_t> block_of(const LieSuperAlgebra& alg)
{
  std::vector<std::size_t> out(alg.basis().n_even(), 0);
  const auto& dec = alg.decomposition();
  for (std::size_t b = 0; b < dec.size(); ++b) {
    for (std::size_t a = dec[b].begin; a < dec[b].end; ++a) {
      out[a] = b;
    }
  }
  return out;
}

void graded_symmetrize(CMatrix& m, const SuperBasis& basis)
{
  const Idx n = m.rows();
  for (Idx i = 0; i < n; ++i) {
    for (Idx j = i + 1; j < n; ++j) {
      const double s = graded_sign(basis.parity(static_cast<std::size_t>(i)), basis.parity(static_cast<std::size_t>(j)));
      const Complex avg = 0.5 * (m(i, j) + s * m(j, i));
      m(i, j) = avg;
      m(j, i) = s * avg;
    }
  }
  const Idx ne = ix(basis.n_even());
  if (ne > 0 && ne < n) {
    m.topRightCorner(ne, n - ne).setZero();
    m.bottomLeftCorner(n - ne, ne).setZero();
  }
}

} // namespace

BilinearFormMatrix metric_from_params(const Realization& real, const MetricParams& params)
{
  const auto& alg = real.algebra;
  check_params(alg, params);
  BilinearFormMatrix out;
  out.gram = real.canonical_form.gram;
  const auto& dec = alg.decomposition();
  for (std::size_t b = 0; b < dec.size(); ++b) {
    const Idx s = ix(dec[b].begin);
    const Idx d = ix(dec[b].size());
    out.gram.block(s, s, d, d) *= params.x[b];
  }
  return with_checked_flags(alg, std::move(out));
}

Connection levi_civita_koszul(const LieSuperAlgebra& alg, const BilinearFormMatrix& metric)
{
  const Idx n = ix(alg.dim());
  if (metric.gram.rows() != n) {
    throw InputError("levi_civita_koszul: metric dimension does not match algebra");
  }
  if (!restriction_nondegenerate(metric.gram, 0, alg.dim(), 1e-10)) {
    throw DegeneracyError("levi_civita_koszul: metric Gram matrix is singular");
  }
  const SuperBasis& basis = alg.basis();
  const CMatrix& g = metric.gram;
  const Eigen::FullPivLU<CMatrix> lu(g);
  const CMatrix g_inv = lu.inverse();

  // stacked(i, j*n + z) = <e_i, [e_j, e_z]>
  CMatrix ads(n, n * n);
  for (Idx j = 0; j < n; ++j) {
    ads.middleCols(j * n, n) = alg.ad(static_cast<std::size_t>(j));
  }
  const CMatrix stacked = g * ads;

  Connection conn;
  conn.nabla.resize(alg.dim());
  for (Idx i = 0; i < n; ++i) {
    const CMatrix& adi = alg.ad(static_cast<std::size_t>(i));
    // rhs(j,z) = <[e_i,e_j],e_z> - <e_i,[e_j,e_z]> - s_ij <e_j,[e_i,e_z]>
    CMatrix rhs = adi.transpose() * g;
    const CMatrix g_adi = g * adi;
    for (Idx j = 0; j < n; ++j) {
      const double s = graded_sign(basis.parity(static_cast<std::size_t>(i)), basis.parity(static_cast<std::size_t>(j)));
      rhs.row(j) -= stacked.block(i, j * n, 1, n);
      rhs.row(j) -= s * g_adi.row(j);
    }
    // N^T g = rhs / 2
    conn.nabla[static_cast<std::size_t>(i)] = (0.5 * rhs * g_inv).transpose();
  }
  return conn;
}

Connection levi_civita_blockwise(const Realization& real, const MetricParams& params)
{
  const auto& alg = real.algebra;
  check_params(alg, params);
  const std::size_t n = alg.dim();
  const std::size_t ne = alg.basis().n_even();
  const auto owner = block_of(alg);
  Connection conn;
  conn.nabla.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    CMatrix m = alg.ad(i);
    for (std::size_t j = 0; j < n; ++j) {
      const bool ie = i < ne;
      const bool je = j < ne;
      double f = 0.5;
      if (ie && !je) {
        f = 1.0 - params.x[owner[i]] / 2.0;
      } else if (!ie && je) {
        f = params.x[owner[j]] / 2.0;
      }
      m.col(ix(j)) *= f;
    }
    conn.nabla[i] = std::move(m);
  }
  return conn;
}

ConnectionCheck check_connection(const LieSuperAlgebra& alg, const BilinearFormMatrix& metric, const Connection& conn)
{
  const std::size_t n = alg.dim();
  const SuperBasis& basis = alg.basis();
  const CMatrix& g = metric.gram;
  ConnectionCheck out;
  for (std::size_t i = 0; i < n; ++i) {
    const CMatrix& ni = conn.nabla[i];
    // <nabla_i e_j, e_z> + s_ij <e_j, nabla_i e_z>
    const CMatrix a = ni.transpose() * g;
    const CMatrix b = g * ni;
    for (std::size_t j = 0; j < n; ++j) {
      const double s = graded_sign(basis.parity(i), basis.parity(j));
      out.compatibility = std::max(out.compatibility, (a.row(ix(j)) + s * b.row(ix(j))).cwiseAbs().maxCoeff());
      const CVector tors = ni.col(ix(j)) - s * conn.nabla[j].col(ix(i)) - alg.ad(i).col(ix(j));
      out.torsion = std::max(out.torsion, tors.cwiseAbs().maxCoeff());
    }
    out.parity = std::max(out.parity, parity_violation(LinearOperator{ni, basis.parity(i)}, basis));
  }
  return out;
}

double connection_deviation(const Connection& a, const Connection& b)
{
  if (a.nabla.size() != b.nabla.size()) {
    throw InputError("connection_deviation: size mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.nabla.size(); ++i) {
    worst = std::max(worst, (a.nabla[i] - b.nabla[i]).cwiseAbs().maxCoeff());
  }
  return worst;
}

RicciDirect ricci_direct(const LieSuperAlgebra& alg, const BilinearFormMatrix& metric, const Connection& conn)
{
  const Idx n = ix(alg.dim());
  const SuperBasis& basis = alg.basis();
  if (conn.nabla.size() != alg.dim()) {
    throw InputError("ricci_direct: connection does not match algebra");
  }
  auto sig = [&](Idx z) { return basis.sigma(static_cast<std::size_t>(z)); };
  auto sgn2 = [&](Idx a, Idx b) {
    return graded_sign(basis.parity(static_cast<std::size_t>(a)), basis.parity(static_cast<std::size_t>(b)));
  };
  const auto& N = conn.nabla;

  // ric(x,y) = sum_z sigma_z [ (N_z N_x)(z,y) - s_zx (N_x N_z)(z,y) - sum_w c[z][x][w] N_w(z,y) ]
  CVector tau = CVector::Zero(n);
  for (Idx z = 0; z < n; ++z) {
    tau += sig(z) * N[static_cast<std::size_t>(z)].row(z).transpose();
  }
  CMatrix t1(n, n);
  for (Idx x = 0; x < n; ++x) {
    t1.row(x) = tau.transpose() * N[static_cast<std::size_t>(x)];
  }
  // M((p,q), y) = N_p(q, y)
  CMatrix M(n * n, n);
  for (Idx p = 0; p < n; ++p) {
    M.middleRows(p * n, n) = N[static_cast<std::size_t>(p)];
  }
  CMatrix V(n, n * n);
  CMatrix U(n, n * n);
  for (Idx x = 0; x < n; ++x) {
    const CMatrix& nx = N[static_cast<std::size_t>(x)];
    for (Idx z = 0; z < n; ++z) {
      const double f = sig(z) * sgn2(z, x);
      for (Idx a = 0; a < n; ++a) {
        V(x, z * n + a) = f * nx(z, a);
      }
    }
  }
  for (Idx z = 0; z < n; ++z) {
    const CMatrix& adz = alg.ad(static_cast<std::size_t>(z));
    const double sz = sig(z);
    for (Idx w = 0; w < n; ++w) {
      for (Idx x = 0; x < n; ++x) {
        U(x, w * n + z) = sz * adz(w, x);
      }
    }
  }
  CMatrix ric = t1 - V * M - U * M;

  RicciDirect out;
  double asym = 0.0;
  for (Idx i = 0; i < n; ++i) {
    for (Idx j = i + 1; j < n; ++j) {
      if (basis.parity(static_cast<std::size_t>(i)) != basis.parity(static_cast<std::size_t>(j))) {
        asym = std::max({asym, std::abs(ric(i, j)), std::abs(ric(j, i))});
      } else {
        asym = std::max(asym, std::abs(ric(i, j) - sgn2(i, j) * ric(j, i)));
      }
    }
  }
  const double scale = std::max(1.0, ric.size() ? ric.cwiseAbs().maxCoeff() : 0.0);
  out.symmetry_residual = asym;
  const bool ok = asym < 1e-9 * scale;
  out.ric.flags.even = ok ? Tri::True : Tri::False;
  out.ric.flags.supersymmetric = ok ? Tri::True : Tri::False;
  if (ok) {
    graded_symmetrize(ric, basis);
  }
  out.ric.gram = std::move(ric);
  (void)metric;
  return out;
}

BilinearFormMatrix ricci_closed_form(const Realization& real, const MetricParams& params)
{
  const auto& alg = real.algebra;
  check_params(alg, params);
  const Idx n = ix(alg.dim());
  const Idx ne = ix(alg.basis().n_even());
  const Idx no = n - ne;
  BilinearFormMatrix out;
  out.gram = CMatrix::Zero(n, n);
  const auto& dec = alg.decomposition();
  CMatrix odd_sum = CMatrix::Zero(no, no);
  std::optional<CMatrix> killing;
  for (std::size_t b = 0; b < dec.size(); ++b) {
    const auto& blk = dec[b];
    const double x = params.x[b];
    const Idx s = ix(blk.begin);
    const Idx d = ix(blk.size());
    if (blk.kind == IdealKind::Abelian) {
      if (!killing) {
        killing = killing_form(alg).gram;
      }
      out.gram.block(s, s, d, d) = -(x * x / 4.0) * killing->block(s, s, d, d);
    } else {
      const double l = representation_index(alg, blk).value;
      out.gram.block(s, s, d, d) = 0.25 * (l * x * x - 1.0) * ideal_killing_form(alg, blk);
    }
    if (no > 0) {
      odd_sum += (x / 2.0 - 1.0) * casimir_on_odd(alg, real.canonical_form, blk).op.matrix;
    }
  }
  if (no > 0) {
    out.gram.block(ne, ne, no, no) = real.canonical_form.gram.block(ne, ne, no, no) * odd_sum;
  }
  out.flags.even = Tri::True;
  return out;
}

double verify_naturally_reductive(const Realization& real, const MetricParams& params,
                                  const std::optional<std::vector<double>>& t)
{
  const auto& alg = real.algebra;
  check_params(alg, params);
  const std::vector<double> tv = t.value_or(params.x);
  if (tv.size() != params.x.size()) {
    throw InputError("verify_naturally_reductive: t has the wrong length");
  }
  const BilinearFormMatrix metric = metric_from_params(real, params);
  const std::size_t n = alg.dim();
  const std::size_t ne = alg.basis().n_even();
  const auto owner = block_of(alg);
  // m_a = (alpha_a e_a, beta_a e_a) inside g + g_0
  std::vector<double> alpha(n, 1.0);
  std::vector<double> beta(n, 0.0);
  for (std::size_t a = 0; a < ne; ++a) {
    alpha[a] = tv[owner[a]];
    beta[a] = tv[owner[a]] - 1.0;
  }
  // P_a(:, b): m-coordinates of [m_a, m_b]_m. The diag(g_0) part is split off
  // by subtracting the second component from the first on the even slots.
  std::vector<CMatrix> proj(n);
  for (std::size_t a = 0; a < n; ++a) {
    CMatrix p = alg.ad(a);
    for (std::size_t b = 0; b < n; ++b) {
      const bool both_even = a < ne && b < ne;
      const double even_coef = alpha[a] * alpha[b] - (both_even ? beta[a] * beta[b] : 0.0);
      const double odd_coef = alpha[a] * alpha[b];
      p.col(ix(b)).head(ix(ne)) *= even_coef;
      p.col(ix(b)).tail(ix(n - ne)) *= odd_coef;
    }
    proj[a] = std::move(p);
  }
  const Idx nn = ix(n);
  const CMatrix& g = metric.gram;
  CMatrix stacked(nn, nn * nn);
  for (Idx b = 0; b < nn; ++b) {
    stacked.middleCols(b * nn, nn) = proj[static_cast<std::size_t>(b)];
  }
  const CMatrix right = g * stacked; // (a, b*n + c) = <m_a, [m_b, m_c]_m>'
  double worst = 0.0;
  for (Idx a = 0; a < nn; ++a) {
    const CMatrix left = proj[static_cast<std::size_t>(a)].transpose() * g; // (b, c)
    for (Idx b = 0; b < nn; ++b) {
      worst = std::max(worst, (left.row(b) - right.block(a, b * nn, 1, nn)).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

MetricParams random_params(std::size_t count, unsigned long long seed, std::size_t draw)
{
  std::mt19937_64 rng(seed * 1000003ULL + draw);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  MetricParams p;
  p.x.reserve(count);
  while (p.x.size() < count) {
    const double v = dist(rng);
    if (std::abs(v) >= 0.1) {
      p.x.push_back(v);
    }
  }
  return p;
}

} // namespace superein
