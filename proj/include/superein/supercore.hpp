#pragma once

// Graded linear algebra: super bases, structure-constant brackets, supertraces,
// bilinear forms and the axiom checks that everything else is built on.

#include "superein/errors.hpp"
#include "superein/rational.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace superein {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline int parity_bit(Parity p) { return p == Parity::Odd ? 1 : 0; }

/// (-1)^{[a][b]}
inline double graded_sign(Parity a, Parity b)
{
  return (a == Parity::Odd && b == Parity::Odd) ? -1.0 : 1.0;
}

inline Parity operator+(Parity a, Parity b)
{
  return (parity_bit(a) ^ parity_bit(b)) ? Parity::Odd : Parity::Even;
}

/// Basis of a finite-dimensional super vector space. Even vectors always come
/// first, so the even and odd parts are the index ranges [0, n_even) and
/// [n_even, dim).
class SuperBasis
{
public:
  SuperBasis() = default;
  SuperBasis(std::size_t n_even, std::size_t n_odd, std::vector<std::string> labels = {});

  /// Throws InputError unless the parities are in canonical (even-first) order.
  static SuperBasis from_parities(const std::vector<Parity>& parities, std::vector<std::string> labels = {});

  std::size_t dim() const { return m_even + m_odd; }
  std::size_t n_even() const { return m_even; }
  std::size_t n_odd() const { return m_odd; }

  Parity parity(std::size_t i) const { return i < m_even ? Parity::Even : Parity::Odd; }
  /// +1 on even vectors, -1 on odd ones; the weight used by the supertrace.
  double sigma(std::size_t i) const { return i < m_even ? 1.0 : -1.0; }
  std::vector<Parity> parities() const;

  const std::string& label(std::size_t i) const { return m_labels.at(i); }
  const std::vector<std::string>& labels() const { return m_labels; }

private:
  std::size_t m_even = 0;
  std::size_t m_odd = 0;
  std::vector<std::string> m_labels;
};

enum class IdealKind { Abelian, Simple };

std::string to_string(IdealKind kind);

/// Half-open index range [begin, end) into the even part.
struct IdealBlock
{
  std::size_t begin = 0;
  std::size_t end = 0;
  IdealKind kind = IdealKind::Simple;
  std::string name;

  std::size_t size() const { return end - begin; }
  bool contains(std::size_t i) const { return i >= begin && i < end; }
};

struct SparseEntry
{
  std::size_t index;
  Complex value;
};

struct ExactEntry
{
  std::size_t index;
  Rational value;
};

/// Structure constants c[i][j][k] = coefficient of e_k in [e_i, e_j], held
/// densely as ad matrices, sparsely per basis pair, and (when every entry is
/// rational) in an exact channel.
class LieSuperAlgebra
{
public:
  struct Triplet
  {
    std::size_t i, j, k;
    Complex value;
  };
  struct ExactTriplet
  {
    std::size_t i, j, k;
    Rational value;
  };

  LieSuperAlgebra() = default;

  /// Builds from exact triplets; the numeric channel is derived from them.
  static LieSuperAlgebra from_exact(SuperBasis basis, const std::vector<ExactTriplet>& entries,
                                    std::vector<IdealBlock> decomposition);
  /// Numeric-only construction (no exact channel).
  static LieSuperAlgebra from_numeric(SuperBasis basis, const std::vector<Triplet>& entries,
                                      std::vector<IdealBlock> decomposition);

  const SuperBasis& basis() const { return m_basis; }
  std::size_t dim() const { return m_basis.dim(); }
  const std::vector<IdealBlock>& decomposition() const { return m_decomposition; }

  Complex c(std::size_t i, std::size_t j, std::size_t k) const { return m_ad[i](k, j); }
  /// Matrix of ad e_i: column j holds the coordinates of [e_i, e_j].
  const CMatrix& ad(std::size_t i) const { return m_ad[i]; }
  const std::vector<SparseEntry>& bracket_of_basis(std::size_t i, std::size_t j) const
  {
    return m_sparse[i * dim() + j];
  }

  bool has_exact() const { return m_exact.has_value(); }
  const std::vector<ExactEntry>& exact_bracket(std::size_t i, std::size_t j) const
  {
    return (*m_exact)[i * dim() + j];
  }
  /// Exact value of c[i][j][k] (zero when absent). Requires has_exact().
  Rational exact_c(std::size_t i, std::size_t j, std::size_t k) const;

  /// Largest |c[i][j][k]|; used to scale relative residuals.
  double max_abs_entry() const { return m_max_abs; }

  /// max |c[i][j][k] + (-1)^{[i][j]} c[j][i][k]|
  double antisymmetry_residual() const;

  /// Copy with c[i][j][k] += delta. Drops the exact channel.
  LieSuperAlgebra with_perturbed_entry(std::size_t i, std::size_t j, std::size_t k, Complex delta) const;

private:
  void finish_numeric(const std::vector<Triplet>& entries);
  void validate_decomposition() const;

  SuperBasis m_basis;
  std::vector<IdealBlock> m_decomposition;
  std::vector<CMatrix> m_ad;
  std::vector<std::vector<SparseEntry>> m_sparse;
  std::optional<std::vector<std::vector<ExactEntry>>> m_exact;
  double m_max_abs = 0.0;
};

enum class Tri { Unchecked, True, False };

std::string to_string(Tri t);

struct FormFlags
{
  Tri even = Tri::Unchecked;
  Tri supersymmetric = Tri::Unchecked;
  Tri bi_invariant = Tri::Unchecked;
  Tri nondegenerate = Tri::Unchecked;
};

/// Gram matrix of a bilinear form, gram(i, j) = f(e_i, e_j).
struct BilinearFormMatrix
{
  CMatrix gram;
  std::optional<RationalMatrix> exact;
  FormFlags flags;

  std::size_t dim() const { return static_cast<std::size_t>(gram.rows()); }
  double max_abs_entry() const;
  Complex operator()(const CVector& x, const CVector& y) const { return x.transpose() * gram * y; }
};

/// A parity-homogeneous endomorphism; matrix column j is the image of e_j.
struct LinearOperator
{
  CMatrix matrix;
  Parity parity = Parity::Even;
};

/// Bilinear extension of the bracket to coefficient vectors.
CVector bracket(const LieSuperAlgebra& alg, const CVector& x, const CVector& y);

/// ad x as a matrix (column j = [x, e_j]).
CMatrix ad_matrix(const LieSuperAlgebra& alg, const CVector& x);

Complex supertrace(const CMatrix& op, const SuperBasis& basis);
Complex supertrace(const LinearOperator& op, const SuperBasis& basis);

/// max |matrix(i, j)| over entries that break homogeneity of the given parity.
double parity_violation(const LinearOperator& op, const SuperBasis& basis);

/// K(e_i, e_j) = str(ad e_i o ad e_j). Uses the exact channel when present.
BilinearFormMatrix killing_form(const LieSuperAlgebra& alg);
RationalMatrix killing_form_exact(const LieSuperAlgebra& alg);

struct JacobiReport
{
  double residual = 0.0;
  std::array<std::size_t, 3> worst{0, 0, 0};
};

/// Graded Jacobi identity over every basis triple.
JacobiReport check_super_jacobi(const LieSuperAlgebra& alg);

struct ExactJacobiReport
{
  std::size_t failing_triples = 0;
  std::array<std::size_t, 3> first_failure{0, 0, 0};
};
ExactJacobiReport check_super_jacobi_exact(const LieSuperAlgebra& alg);

struct FormReport
{
  double even_residual = 0.0;
  double supersymmetry_residual = 0.0;
  double bi_invariance_residual = 0.0;
  /// |det| of the row-max scaled Gram matrix.
  double scaled_determinant = 0.0;
  FormFlags flags;
};

/// Residuals are relative to max(1, largest Gram entry) and compared to tol.
FormReport check_form(const LieSuperAlgebra& alg, const BilinearFormMatrix& form, double tol = 1e-10);

/// Returns the form with flags filled in from check_form.
BilinearFormMatrix with_checked_flags(const LieSuperAlgebra& alg, BilinearFormMatrix form, double tol = 1e-10);

/// Dual basis of the coordinate subspace [begin, end): column k holds the
/// coordinates (within the range) of e_k^* with form(e_j, e_k^*) = delta_jk.
/// Throws DegeneracyError naming the subspace if the restriction is singular.
CMatrix dual_basis(const BilinearFormMatrix& form, std::size_t begin, std::size_t end,
                   const std::string& name = {});
RationalMatrix dual_basis_exact(const RationalMatrix& gram, std::size_t begin, std::size_t end,
                                const std::string& name = {});

/// Is the restriction to [begin, end) non-degenerate (row-max scaled |det| test)?
bool restriction_nondegenerate(const CMatrix& gram, std::size_t begin, std::size_t end, double tol = 1e-10);

} // namespace superein
