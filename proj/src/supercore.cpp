#include "superein/supercore.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace superein {

// ---------------------------------------------------------------------------
// SuperBasis

SuperBasis::SuperBasis(std::size_t n_even, std::size_t n_odd, std::vector<std::string> labels)
  : m_even(n_even), m_odd(n_odd), m_labels(std::move(labels))
{
  if (m_labels.empty()) {
    m_labels.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      m_labels.push_back((i < m_even ? "e" : "o") + std::to_string(i));
    }
  }
  if (m_labels.size() != dim()) {
    throw InputError("SuperBasis: label count does not match dimension");
  }
}

SuperBasis SuperBasis::from_parities(const std::vector<Parity>& parities, std::vector<std::string> labels)
{
  std::size_t n_even = 0;
  while (n_even < parities.size() && parities[n_even] == Parity::Even) {
    ++n_even;
  }
  for (std::size_t i = n_even; i < parities.size(); ++i) {
    if (parities[i] != Parity::Odd) {
      throw InputError("SuperBasis: even vector at position " + std::to_string(i) + " follows an odd one");
    }
  }
  return SuperBasis(n_even, parities.size() - n_even, std::move(labels));
}

std::vector<Parity> SuperBasis::parities() const
{
  std::vector<Parity> out(dim(), Parity::Even);
  std::fill(out.begin() + static_cast<std::ptrdiff_t>(m_even), out.end(), Parity::Odd);
  return out;
}

std::string to_string(IdealKind kind)
{
  return kind == IdealKind::Abelian ? "abelian" : "simple";
}

std::string to_string(Tri t)
{
  switch (t) {
  case Tri::True: return "true";
  case Tri::False: return "false";
  default: return "unchecked";
  }
}

// ---------------------------------------------------------------------------
// LieSuperAlgebra

namespace {

void check_index(std::size_t idx, std::size_t dim, const char* what)
{
  if (idx >= dim) {
    std::ostringstream msg;
    msg << what << ": index " << idx << " out of range for dimension " << dim;
    throw InputError(msg.str());
  }
}

} // namespace

LieSuperAlgebra LieSuperAlgebra::from_exact(SuperBasis basis, const std::vector<ExactTriplet>& entries,
                                            std::vector<IdealBlock> decomposition)
{
  LieSuperAlgebra alg;
  alg.m_basis = std::move(basis);
  alg.m_decomposition = std::move(decomposition);
  const std::size_t n = alg.dim();

  // Merge duplicates exactly before deriving the numeric channel.
  std::map<std::array<std::size_t, 3>, Rational> merged;
  for (const auto& t : entries) {
    check_index(t.i, n, "from_exact");
    check_index(t.j, n, "from_exact");
    check_index(t.k, n, "from_exact");
    merged[{t.i, t.j, t.k}] += t.value;
  }
  std::vector<std::vector<ExactEntry>> exact(n * n);
  std::vector<Triplet> numeric;
  numeric.reserve(merged.size());
  for (auto& [key, value] : merged) {
    if (sgn(value) == 0) {
      continue;
    }
    value.canonicalize();
    exact[key[0] * n + key[1]].push_back({key[2], value});
    numeric.push_back({key[0], key[1], key[2], Complex(value.get_d(), 0.0)});
  }
  alg.m_exact = std::move(exact);
  alg.finish_numeric(numeric);
  return alg;
}

LieSuperAlgebra LieSuperAlgebra::from_numeric(SuperBasis basis, const std::vector<Triplet>& entries,
                                              std::vector<IdealBlock> decomposition)
{
  LieSuperAlgebra alg;
  alg.m_basis = std::move(basis);
  alg.m_decomposition = std::move(decomposition);
  const std::size_t n = alg.dim();
  for (const auto& t : entries) {
    check_index(t.i, n, "from_numeric");
    check_index(t.j, n, "from_numeric");
    check_index(t.k, n, "from_numeric");
  }
  alg.finish_numeric(entries);
  return alg;
}

void LieSuperAlgebra::finish_numeric(const std::vector<Triplet>& entries)
{
  const std::size_t n = dim();
  m_ad.assign(n, CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
  for (const auto& t : entries) {
    const Parity expected = m_basis.parity(t.i) + m_basis.parity(t.j);
    if (m_basis.parity(t.k) != expected && std::abs(t.value) > 0.0) {
      std::ostringstream msg;
      msg << "LieSuperAlgebra: parity violation at c[" << t.i << "][" << t.j << "][" << t.k << "]";
      throw InputError(msg.str());
    }
    m_ad[t.i](static_cast<Eigen::Index>(t.k), static_cast<Eigen::Index>(t.j)) += t.value;
  }
  m_sparse.assign(n * n, {});
  m_max_abs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto& list = m_sparse[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        const Complex v = m_ad[i](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
        if (v != Complex(0.0, 0.0)) {
          list.push_back({k, v});
          m_max_abs = std::max(m_max_abs, std::abs(v));
        }
      }
    }
  }
  validate_decomposition();
}

void LieSuperAlgebra::validate_decomposition() const
{
  std::size_t expected_begin = 0;
  for (const auto& block : m_decomposition) {
    if (block.begin != expected_begin || block.end < block.begin || block.end > m_basis.n_even()) {
      throw InputError("LieSuperAlgebra: decomposition must partition the even part contiguously");
    }
    if (block.size() == 0) {
      throw InputError("LieSuperAlgebra: empty decomposition block '" + block.name + "'");
    }
    expected_begin = block.end;
  }
  if (!m_decomposition.empty() && expected_begin != m_basis.n_even()) {
    throw InputError("LieSuperAlgebra: decomposition does not cover the even part");
  }
  // Each block must be an ideal of the even part: [k_a, g_0] lands in k_a.
  const double tol = 1e-12 * std::max(1.0, m_max_abs);
  for (const auto& block : m_decomposition) {
    for (std::size_t i = block.begin; i < block.end; ++i) {
      for (std::size_t j = 0; j < m_basis.n_even(); ++j) {
        for (const auto& e : m_sparse[i * dim() + j]) {
          if (!block.contains(e.index) && std::abs(e.value) > tol) {
            throw InputError("LieSuperAlgebra: block '" + block.name + "' is not an ideal of the even part");
          }
        }
      }
    }
  }
}

Rational LieSuperAlgebra::exact_c(std::size_t i, std::size_t j, std::size_t k) const
{
  if (!m_exact) {
    throw InputError("exact_c: algebra has no exact channel");
  }
  for (const auto& e : (*m_exact)[i * dim() + j]) {
    if (e.index == k) {
      return e.value;
    }
  }
  return Rational(0);
}

double LieSuperAlgebra::antisymmetry_residual() const
{
  double worst = 0.0;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double s = graded_sign(m_basis.parity(i), m_basis.parity(j));
      const auto a = m_ad[i].col(static_cast<Eigen::Index>(j));
      const auto b = m_ad[j].col(static_cast<Eigen::Index>(i));
      worst = std::max(worst, (a + s * b).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

LieSuperAlgebra LieSuperAlgebra::with_perturbed_entry(std::size_t i, std::size_t j, std::size_t k,
                                                      Complex delta) const
{
  const std::size_t n = dim();
  check_index(i, n, "with_perturbed_entry");
  check_index(j, n, "with_perturbed_entry");
  check_index(k, n, "with_perturbed_entry");
  std::vector<Triplet> entries;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& e : m_sparse[a * n + b]) {
        entries.push_back({a, b, e.index, e.value});
      }
    }
  }
  entries.push_back({i, j, k, delta});
  LieSuperAlgebra out;
  out.m_basis = m_basis;
  out.m_decomposition = m_decomposition;
  // The perturbation may break ideal closure; skip that validation on purpose.
  const std::size_t nn = dim();
  out.m_ad.assign(nn, CMatrix::Zero(static_cast<Eigen::Index>(nn), static_cast<Eigen::Index>(nn)));
  for (const auto& t : entries) {
    out.m_ad[t.i](static_cast<Eigen::Index>(t.k), static_cast<Eigen::Index>(t.j)) += t.value;
  }
  out.m_sparse.assign(nn * nn, {});
  for (std::size_t a = 0; a < nn; ++a) {
    for (std::size_t b = 0; b < nn; ++b) {
      for (std::size_t c = 0; c < nn; ++c) {
        const Complex v = out.m_ad[a](static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(b));
        if (v != Complex(0.0, 0.0)) {
          out.m_sparse[a * nn + b].push_back({c, v});
          out.m_max_abs = std::max(out.m_max_abs, std::abs(v));
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Forms and operators

double BilinearFormMatrix::max_abs_entry() const
{
  return gram.size() == 0 ? 0.0 : gram.cwiseAbs().maxCoeff();
}

CVector bracket(const LieSuperAlgebra& alg, const CVector& x, const CVector& y)
{
  const auto n = static_cast<Eigen::Index>(alg.dim());
  if (x.size() != n || y.size() != n) {
    throw InputError("bracket: vector length does not match algebra dimension");
  }
  CVector out = CVector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (x(i) == Complex(0.0, 0.0)) {
      continue;
    }
    out += x(i) * (alg.ad(static_cast<std::size_t>(i)) * y);
  }
  return out;
}

CMatrix ad_matrix(const LieSuperAlgebra& alg, const CVector& x)
{
  const auto n = static_cast<Eigen::Index>(alg.dim());
  if (x.size() != n) {
    throw InputError("ad_matrix: vector length does not match algebra dimension");
  }
  CMatrix out = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (x(i) != Complex(0.0, 0.0)) {
      out += x(i) * alg.ad(static_cast<std::size_t>(i));
    }
  }
  return out;
}

Complex supertrace(const CMatrix& op, const SuperBasis& basis)
{
  const auto n = static_cast<Eigen::Index>(basis.dim());
  if (op.rows() != n || op.cols() != n) {
    throw InputError("supertrace: operator shape does not match basis");
  }
  const auto ne = static_cast<Eigen::Index>(basis.n_even());
  return op.diagonal().head(ne).sum() - op.diagonal().tail(n - ne).sum();
}

Complex supertrace(const LinearOperator& op, const SuperBasis& basis)
{
  return supertrace(op.matrix, basis);
}

double parity_violation(const LinearOperator& op, const SuperBasis& basis)
{
  const std::size_t n = basis.dim();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (basis.parity(i) != basis.parity(j) + op.parity) {
        worst = std::max(worst, std::abs(op.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
      }
    }
  }
  return worst;
}

namespace {

// A(m, j*n + k) = ad_j(m, k): every ad matrix side by side.
CMatrix stacked_ad(const LieSuperAlgebra& alg)
{
  const auto n = static_cast<Eigen::Index>(alg.dim());
  CMatrix out(n, n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.middleCols(j * n, n) = alg.ad(static_cast<std::size_t>(j));
  }
  return out;
}

double symmetric_form_residual(const CMatrix& gram, const SuperBasis& basis)
{
  double worst = 0.0;
  const auto n = gram.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double s = graded_sign(basis.parity(static_cast<std::size_t>(i)), basis.parity(static_cast<std::size_t>(j)));
      worst = std::max(worst, std::abs(gram(i, j) - s * gram(j, i)));
    }
  }
  return worst;
}

double evenness_residual(const CMatrix& gram, const SuperBasis& basis)
{
  const auto ne = static_cast<Eigen::Index>(basis.n_even());
  const auto n = gram.rows();
  if (ne == 0 || ne == n) {
    return 0.0;
  }
  return std::max(gram.topRightCorner(ne, n - ne).cwiseAbs().maxCoeff(),
                  gram.bottomLeftCorner(n - ne, ne).cwiseAbs().maxCoeff());
}

void symmetrize(CMatrix& gram, const SuperBasis& basis)
{
  const auto n = gram.rows();
  const auto ne = static_cast<Eigen::Index>(basis.n_even());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double s = graded_sign(basis.parity(static_cast<std::size_t>(i)), basis.parity(static_cast<std::size_t>(j)));
      const Complex avg = 0.5 * (gram(i, j) + s * gram(j, i));
      gram(i, j) = avg;
      gram(j, i) = s * avg;
    }
  }
  if (ne > 0 && ne < n) {
    gram.topRightCorner(ne, n - ne).setZero();
    gram.bottomLeftCorner(n - ne, ne).setZero();
  }
}

} // namespace

BilinearFormMatrix killing_form(const LieSuperAlgebra& alg)
{
  const auto n = static_cast<Eigen::Index>(alg.dim());
  const SuperBasis& basis = alg.basis();
  // K(i,j) = sum_{k,m} sigma_k ad_i(k,m) ad_j(m,k): one product of stacked matrices.
  CMatrix left(n, n * n);
  CMatrix right(n, n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const CMatrix& a = alg.ad(static_cast<std::size_t>(i));
    for (Eigen::Index k = 0; k < n; ++k) {
      const double sk = basis.sigma(static_cast<std::size_t>(k));
      for (Eigen::Index m = 0; m < n; ++m) {
        left(i, k * n + m) = sk * a(k, m);
        right(i, k * n + m) = a(m, k);
      }
    }
  }
  BilinearFormMatrix form;
  form.gram = left * right.transpose();
  const double scale = std::max(1.0, form.gram.size() ? form.gram.cwiseAbs().maxCoeff() : 0.0);
  const double asym = std::max(symmetric_form_residual(form.gram, basis), evenness_residual(form.gram, basis));
  if (asym > 1e-12 * scale) {
    throw InputError("killing_form: structure constants break supersymmetry of the trace form (residual " +
                     std::to_string(asym) + ")");
  }
  symmetrize(form.gram, basis);
  form.flags.even = Tri::True;
  form.flags.supersymmetric = Tri::True;
  return form;
}

RationalMatrix killing_form_exact(const LieSuperAlgebra& alg)
{
  if (!alg.has_exact()) {
    throw InputError("killing_form_exact: algebra has no exact channel");
  }
  const std::size_t n = alg.dim();
  const SuperBasis& basis = alg.basis();
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (basis.parity(i) != basis.parity(j)) {
        continue;
      }
      // str(ad e_i ad e_j) = sum_k sigma_k * sum_m c[j][k][m] c[i][m][k]
      Rational acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        Rational inner = 0;
        for (const auto& e : alg.exact_bracket(j, k)) {
          for (const auto& f : alg.exact_bracket(i, e.index)) {
            if (f.index == k) {
              inner += e.value * f.value;
            }
          }
        }
        if (basis.sigma(k) > 0) {
          acc += inner;
        } else {
          acc -= inner;
        }
      }
      out(i, j) = acc;
      out(j, i) = basis.parity(i) == Parity::Odd ? Rational(-acc) : acc;
    }
  }
  return out;
}

JacobiReport check_super_jacobi(const LieSuperAlgebra& alg)
{
  const std::size_t n = alg.dim();
  const SuperBasis& basis = alg.basis();
  JacobiReport report;
  std::vector<Complex> acc(n, Complex(0.0, 0.0));
  std::vector<std::size_t> touched;
  touched.reserve(n);
  std::vector<char> mark(n, 0);
  auto add = [&](std::size_t idx, Complex v) {
    if (!mark[idx]) {
      mark[idx] = 1;
      touched.push_back(idx);
    }
    acc[idx] += v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double sij = graded_sign(basis.parity(i), basis.parity(j));
      for (std::size_t k = 0; k < n; ++k) {
        // [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - s_ij [e_j,[e_i,e_k]]
        for (const auto& e : alg.bracket_of_basis(j, k)) {
          for (const auto& f : alg.bracket_of_basis(i, e.index)) {
            add(f.index, e.value * f.value);
          }
        }
        for (const auto& e : alg.bracket_of_basis(i, j)) {
          for (const auto& f : alg.bracket_of_basis(e.index, k)) {
            add(f.index, -e.value * f.value);
          }
        }
        for (const auto& e : alg.bracket_of_basis(i, k)) {
          for (const auto& f : alg.bracket_of_basis(j, e.index)) {
            add(f.index, -sij * e.value * f.value);
          }
        }
        for (std::size_t idx : touched) {
          const double r = std::abs(acc[idx]);
          if (r > report.residual) {
            report.residual = r;
            report.worst = {i, j, k};
          }
          acc[idx] = Complex(0.0, 0.0);
          mark[idx] = 0;
        }
        touched.clear();
      }
    }
  }
  return report;
}

ExactJacobiReport check_super_jacobi_exact(const LieSuperAlgebra& alg)
{
  if (!alg.has_exact()) {
    throw InputError("check_super_jacobi_exact: algebra has no exact channel");
  }
  const std::size_t n = alg.dim();
  const SuperBasis& basis = alg.basis();
  ExactJacobiReport report;
  std::map<std::size_t, Rational> acc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool odd_pair = basis.parity(i) == Parity::Odd && basis.parity(j) == Parity::Odd;
      for (std::size_t k = 0; k < n; ++k) {
        acc.clear();
        for (const auto& e : alg.exact_bracket(j, k)) {
          for (const auto& f : alg.exact_bracket(i, e.index)) {
            acc[f.index] += e.value * f.value;
          }
        }
        for (const auto& e : alg.exact_bracket(i, j)) {
          for (const auto& f : alg.exact_bracket(e.index, k)) {
            acc[f.index] -= e.value * f.value;
          }
        }
        for (const auto& e : alg.exact_bracket(i, k)) {
          for (const auto& f : alg.exact_bracket(j, e.index)) {
            if (odd_pair) {
              acc[f.index] += e.value * f.value;
            } else {
              acc[f.index] -= e.value * f.value;
            }
          }
        }
        const bool fails = std::any_of(acc.begin(), acc.end(), [](const auto& kv) { return sgn(kv.second) != 0; });
        if (fails) {
          if (report.failing_triples == 0) {
            report.first_failure = {i, j, k};
          }
          ++report.failing_triples;
        }
      }
    }
  }
  return report;
}

bool restriction_nondegenerate(const CMatrix& gram, std::size_t begin, std::size_t end, double tol)
{
  if (end <= begin) {
    return true;
  }
  const auto b = static_cast<Eigen::Index>(begin);
  const auto m = static_cast<Eigen::Index>(end - begin);
  CMatrix block = gram.block(b, b, m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    const double rmax = block.row(r).cwiseAbs().maxCoeff();
    if (rmax <= tol) {
      return false;
    }
    block.row(r) /= rmax;
  }
  Eigen::FullPivLU<CMatrix> lu(block);
  lu.setThreshold(tol);
  return lu.rank() == m;
}

FormReport check_form(const LieSuperAlgebra& alg, const BilinearFormMatrix& form, double tol)
{
  const std::size_t n = alg.dim();
  if (form.dim() != n) {
    throw InputError("check_form: form dimension does not match algebra");
  }
  const SuperBasis& basis = alg.basis();
  FormReport rep;
  const double scale = std::max(1.0, form.max_abs_entry());
  rep.even_residual = evenness_residual(form.gram, basis);
  rep.supersymmetry_residual = symmetric_form_residual(form.gram, basis);

  // f([e_i,e_j],e_k) = (ad_i^T G)(j,k);  f(e_i,[e_j,e_k]) = (G * stacked)(i, j*n+k)
  const auto nn = static_cast<Eigen::Index>(n);
  const CMatrix right = form.gram * stacked_ad(alg);
  double bi = 0.0;
  for (Eigen::Index i = 0; i < nn; ++i) {
    const CMatrix left = alg.ad(static_cast<std::size_t>(i)).transpose() * form.gram;
    for (Eigen::Index j = 0; j < nn; ++j) {
      bi = std::max(bi, (left.row(j) - right.block(i, j * nn, 1, nn)).cwiseAbs().maxCoeff());
    }
  }
  rep.bi_invariance_residual = bi;

  CMatrix scaled = form.gram;
  for (Eigen::Index r = 0; r < scaled.rows(); ++r) {
    const double rmax = scaled.row(r).cwiseAbs().maxCoeff();
    if (rmax > 0.0) {
      scaled.row(r) /= rmax;
    }
  }
  rep.scaled_determinant = n == 0 ? 1.0 : std::abs(scaled.fullPivLu().determinant());

  rep.flags.even = rep.even_residual < tol * scale ? Tri::True : Tri::False;
  rep.flags.supersymmetric = rep.supersymmetry_residual < tol * scale ? Tri::True : Tri::False;
  rep.flags.bi_invariant = bi < tol * scale * std::max(1.0, alg.max_abs_entry()) ? Tri::True : Tri::False;
  rep.flags.nondegenerate = restriction_nondegenerate(form.gram, 0, n, tol) ? Tri::True : Tri::False;
  return rep;
}

BilinearFormMatrix with_checked_flags(const LieSuperAlgebra& alg, BilinearFormMatrix form, double tol)
{
  form.flags = check_form(alg, form, tol).flags;
  return form;
}

CMatrix dual_basis(const BilinearFormMatrix& form, std::size_t begin, std::size_t end, const std::string& name)
{
  if (end > form.dim() || end < begin) {
    throw InputError("dual_basis: subspace range out of bounds");
  }
  const std::string label = name.empty() ? "[" + std::to_string(begin) + "," + std::to_string(end) + ")" : name;
  if (!restriction_nondegenerate(form.gram, begin, end, 1e-10)) {
    throw DegeneracyError("dual_basis: form is degenerate on subspace " + label);
  }
  const auto b = static_cast<Eigen::Index>(begin);
  const auto m = static_cast<Eigen::Index>(end - begin);
  const CMatrix block = form.gram.block(b, b, m, m);
  return block.fullPivLu().solve(CMatrix::Identity(m, m));
}

RationalMatrix dual_basis_exact(const RationalMatrix& gram, std::size_t begin, std::size_t end,
                                const std::string& name)
{
  if (end > gram.rows() || end < begin) {
    throw InputError("dual_basis_exact: subspace range out of bounds");
  }
  const std::string label = name.empty() ? "[" + std::to_string(begin) + "," + std::to_string(end) + ")" : name;
  auto inv = gram.block(begin, begin, end - begin, end - begin).inverse();
  if (!inv) {
    throw DegeneracyError("dual_basis_exact: form is degenerate on subspace " + label);
  }
  return *inv;
}

} // namespace superein
