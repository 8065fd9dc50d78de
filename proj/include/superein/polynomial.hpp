#pragma once

// Dense univariate polynomials over Q with Sturm-sequence root isolation, and
// the Sylvester resultant of two polynomials in y with coefficients in Q[x].

#include "superein/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace superein {

class Polynomial
{
public:
  Polynomial() = default;
  /// coeffs[k] multiplies x^k. Trailing zeros are trimmed.
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  /// x - r
  static Polynomial linear_root(const Rational& r);
  static Polynomial x();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(m_c.size()) - 1; }
  bool is_zero() const { return m_c.empty(); }
  const std::vector<Rational>& coeffs() const { return m_c; }
  Rational coeff(int k) const;
  Rational leading() const;

  Rational eval(const Rational& x) const;
  double eval(double x) const;

  Polynomial derivative() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& f) const;
  bool operator==(const Polynomial& o) const { return m_c == o.m_c; }

  /// Euclidean division; throws on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  /// Exact division; throws std::domain_error if there is a remainder.
  Polynomial exact_div(const Polynomial& d) const;

  /// Removes the largest power x^k dividing the polynomial; returns k.
  int strip_x_power();
  /// Integer coefficients with content 1 and positive leading coefficient.
  Polynomial primitive() const;
  Polynomial monic() const;

  /// "36*x^3 - 48*x^2 + ..." (highest degree first).
  std::string to_string(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Rational> m_c;
};

Polynomial gcd(Polynomial a, Polynomial b);

/// p / gcd(p, p'): same roots, all simple.
Polynomial square_free(const Polynomial& p);

/// Are a and b equal up to a non-zero rational factor?
bool proportional(const Polynomial& a, const Polynomial& b);

std::vector<Polynomial> sturm_sequence(const Polynomial& p);

/// Number of distinct real roots in the half-open interval (a, b].
int count_real_roots(const std::vector<Polynomial>& sturm, const Rational& a, const Rational& b);

/// Cauchy bound: every real root lies in [-bound, bound].
Rational root_bound(const Polynomial& p);

/// Disjoint isolating intervals (lo, hi] for the distinct real roots, each of
/// width at most `width`, sorted ascending. Exact rational bisection.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Polynomial& p, const Rational& width);

/// Distinct real roots as doubles (midpoints of intervals of width 2^-60 * bound).
std::vector<double> real_roots(const Polynomial& p);

/// Polynomial in y whose coefficients are polynomials in x: coeffs[k] multiplies y^k.
using BivariatePolynomial = std::vector<Polynomial>;

/// Res_y(f, g) via the Sylvester matrix with fraction-free (Bareiss) elimination over Q[x].
Polynomial resultant_y(const BivariatePolynomial& f, const BivariatePolynomial& g);

} // namespace superein
