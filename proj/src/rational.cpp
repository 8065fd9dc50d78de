#include "superein/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace superein {

std::string to_string(const Rational& q)
{
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) {
    return c.get_num().get_str();
  }
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rationalize(double value, long max_den)
{
  if (!std::isfinite(value)) {
    throw std::invalid_argument("rationalize: non-finite value");
  }
  // Standard continued-fraction convergents, stopping before the denominator bound.
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double x = value;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(x);
    const long ai = static_cast<long>(a);
    const long h2 = ai * h1 + h0;
    const long k2 = ai * k1 + k0;
    if (k2 > max_den) {
      break;
    }
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    const double frac = x - a;
    if (std::abs(frac) < 1e-15) {
      break;
    }
    x = 1.0 / frac;
  }
  return make_rational(h1, k1);
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
  : m_rows(rows), m_cols(cols), m_data(rows * cols, Rational(0))
{
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
  RationalMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    id(i, i) = 1;
  }
  return id;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const
{
  if (m_cols != other.m_rows) {
    throw std::invalid_argument("RationalMatrix: shape mismatch in product");
  }
  RationalMatrix out(m_rows, other.m_cols);
  for (std::size_t i = 0; i < m_rows; ++i) {
    for (std::size_t k = 0; k < m_cols; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < other.m_cols; ++j) {
        const Rational& b = other(k, j);
        if (sgn(b) != 0) {
          out(i, j) += a * b;
        }
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const
{
  RationalMatrix out(m_cols, m_rows);
  for (std::size_t i = 0; i < m_rows; ++i) {
    for (std::size_t j = 0; j < m_cols; ++j) {
      out(j, i) = (*this)(i, j);
    }
  }
  return out;
}

RationalMatrix RationalMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
  if (r0 + nr > m_rows || c0 + nc > m_cols) {
    throw std::out_of_range("RationalMatrix::block");
  }
  RationalMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      out(i, j) = (*this)(r0 + i, c0 + j);
    }
  }
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const
{
  RationalMatrix out = *this;
  for (auto& v : out.m_data) {
    v *= factor;
  }
  return out;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const
{
  if (m_rows != m_cols) {
    throw std::invalid_argument("RationalMatrix::inverse: not square");
  }
  const std::size_t n = m_rows;
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (sgn(a(r, col)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) {
      return std::nullopt;
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) {
        continue;
      }
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(a(col, j)) != 0) {
          a(r, j) -= f * a(col, j);
        }
        if (sgn(inv(col, j)) != 0) {
          inv(r, j) -= f * inv(col, j);
        }
      }
    }
  }
  return inv;
}

std::size_t RationalMatrix::rank() const
{
  RationalMatrix a = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m_cols && rank < m_rows; ++col) {
    std::size_t pivot = m_rows;
    for (std::size_t r = rank; r < m_rows; ++r) {
      if (sgn(a(r, col)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == m_rows) {
      continue;
    }
    for (std::size_t j = 0; j < m_cols; ++j) {
      std::swap(a(pivot, j), a(rank, j));
    }
    for (std::size_t r = rank + 1; r < m_rows; ++r) {
      if (sgn(a(r, col)) == 0) {
        continue;
      }
      const Rational f = a(r, col) / a(rank, col);
      for (std::size_t j = col; j < m_cols; ++j) {
        a(r, j) -= f * a(rank, j);
      }
    }
    ++rank;
  }
  return rank;
}

bool RationalMatrix::is_zero() const
{
  for (const auto& v : m_data) {
    if (sgn(v) != 0) {
      return false;
    }
  }
  return true;
}

Eigen::MatrixXcd RationalMatrix::to_complex() const
{
  Eigen::MatrixXcd out(m_rows, m_cols);
  for (std::size_t i = 0; i < m_rows; ++i) {
    for (std::size_t j = 0; j < m_cols; ++j) {
      out(i, j) = (*this)(i, j).get_d();
    }
  }
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const
{
  return m_rows == other.m_rows && m_cols == other.m_cols && m_data == other.m_data;
}

} // namespace superein
