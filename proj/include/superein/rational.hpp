#pragma once

#include <Eigen/Dense>
#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace superein {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// "p/q" (or "p" for integers).
std::string to_string(const Rational& q);

/// Closest rational to a double with denominator at most max_den (continued fractions).
Rational rationalize(double value, long max_den = 1000000);

/// Dense row-major matrix over Q. Intended for the small blocks that show up
/// in structure-constant work (a few hundred rows at most).
class RationalMatrix
{
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return m_rows; }
  std::size_t cols() const { return m_cols; }

  Rational& operator()(std::size_t r, std::size_t c) { return m_data[r * m_cols + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return m_data[r * m_cols + c]; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix transpose() const;
  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  RationalMatrix scaled(const Rational& factor) const;

  /// Gauss-Jordan inverse; nullopt when singular.
  std::optional<RationalMatrix> inverse() const;
  std::size_t rank() const;
  bool is_zero() const;

  Eigen::MatrixXcd to_complex() const;

  bool operator==(const RationalMatrix& other) const;

private:
  std::size_t m_rows = 0;
  std::size_t m_cols = 0;
  std::vector<Rational> m_data;
};

} // namespace superein
