#include "superein/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace superein {

Polynomial::Polynomial(std::vector<Rational> coeffs) : m_c(std::move(coeffs))
{
  for (auto& c : m_c) {
    c.canonicalize();
  }
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear_root(const Rational& r) { return Polynomial({Rational(-r), Rational(1)}); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim()
{
  while (!m_c.empty() && sgn(m_c.back()) == 0) {
    m_c.pop_back();
  }
}

Rational Polynomial::coeff(int k) const
{
  if (k < 0 || k > degree()) {
    return Rational(0);
  }
  return m_c[static_cast<std::size_t>(k)];
}

Rational Polynomial::leading() const { return m_c.empty() ? Rational(0) : m_c.back(); }

Rational Polynomial::eval(const Rational& x) const
{
  Rational acc = 0;
  for (auto it = m_c.rbegin(); it != m_c.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

double Polynomial::eval(double x) const
{
  double acc = 0.0;
  for (auto it = m_c.rbegin(); it != m_c.rend(); ++it) {
    acc = acc * x + it->get_d();
  }
  return acc;
}

Polynomial Polynomial::derivative() const
{
  if (m_c.size() <= 1) {
    return Polynomial();
  }
  std::vector<Rational> d(m_c.size() - 1);
  for (std::size_t k = 1; k < m_c.size(); ++k) {
    d[k - 1] = m_c[k] * Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
  std::vector<Rational> r(std::max(m_c.size(), o.m_c.size()), Rational(0));
  for (std::size_t k = 0; k < m_c.size(); ++k) {
    r[k] += m_c[k];
  }
  for (std::size_t k = 0; k < o.m_c.size(); ++k) {
    r[k] += o.m_c[k];
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const
{
  if (is_zero() || o.is_zero()) {
    return Polynomial();
  }
  std::vector<Rational> r(m_c.size() + o.m_c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < m_c.size(); ++i) {
    if (sgn(m_c[i]) == 0) {
      continue;
    }
    for (std::size_t j = 0; j < o.m_c.size(); ++j) {
      r[i + j] += m_c[i] * o.m_c[j];
    }
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(const Rational& f) const
{
  std::vector<Rational> r = m_c;
  for (auto& c : r) {
    c *= f;
  }
  return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const
{
  if (d.is_zero()) {
    throw std::domain_error("Polynomial::divmod: division by zero polynomial");
  }
  if (degree() < d.degree()) {
    return {Polynomial(), *this};
  }
  std::vector<Rational> rem = m_c;
  std::vector<Rational> quo(static_cast<std::size_t>(degree() - d.degree() + 1), Rational(0));
  const Rational lead = d.leading();
  for (int k = degree() - d.degree(); k >= 0; --k) {
    const Rational f = rem[static_cast<std::size_t>(k + d.degree())] / lead;
    quo[static_cast<std::size_t>(k)] = f;
    if (sgn(f) == 0) {
      continue;
    }
    for (int j = 0; j <= d.degree(); ++j) {
      rem[static_cast<std::size_t>(k + j)] -= f * d.m_c[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial& d) const
{
  auto [q, r] = divmod(d);
  if (!r.is_zero()) {
    throw std::domain_error("Polynomial::exact_div: non-zero remainder");
  }
  return q;
}

int Polynomial::strip_x_power()
{
  int k = 0;
  while (!m_c.empty() && sgn(m_c.front()) == 0) {
    m_c.erase(m_c.begin());
    ++k;
  }
  return k;
}

Polynomial Polynomial::primitive() const
{
  if (is_zero()) {
    return *this;
  }
  mpz_class den_lcm = 1;
  for (const auto& c : m_c) {
    mpz_class d = c.get_den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (const auto& c : m_c) {
    mpz_class v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(leading()) < 0) {
    factor = -factor;
  }
  return scaled(factor);
}

Polynomial Polynomial::monic() const
{
  if (is_zero()) {
    return *this;
  }
  return scaled(Rational(1) / leading());
}

std::string Polynomial::to_string(const std::string& var) const
{
  if (is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = m_c[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) {
      continue;
    }
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    } else if (sgn(c) < 0) {
      os << "-";
      c = abs(c);
    }
    first = false;
    const bool unit = c == 1;
    if (!unit || k == 0) {
      os << superein::to_string(c);
    }
    if (k > 0) {
      os << (unit ? "" : "*") << var;
      if (k > 1) {
        os << "^" << k;
      }
    }
  }
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b)
{
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Polynomial square_free(const Polynomial& p)
{
  if (p.degree() <= 0) {
    return p;
  }
  return p.exact_div(gcd(p, p.derivative()));
}

bool proportional(const Polynomial& a, const Polynomial& b)
{
  if (a.is_zero() || b.is_zero()) {
    return a.is_zero() && b.is_zero();
  }
  return a.monic() == b.monic();
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p)
{
  std::vector<Polynomial> seq;
  if (p.is_zero()) {
    return seq;
  }
  seq.push_back(p);
  Polynomial d = p.derivative();
  if (d.is_zero()) {
    return seq;
  }
  seq.push_back(d);
  while (true) {
    Polynomial r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) {
      break;
    }
    seq.push_back(-r);
  }
  return seq;
}

namespace {

int sign_changes(const std::vector<Polynomial>& seq, const Rational& x)
{
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sgn(p.eval(x));
    if (s == 0) {
      continue;
    }
    if (last != 0 && s != last) {
      ++changes;
    }
    last = s;
  }
  return changes;
}

} // namespace

int count_real_roots(const std::vector<Polynomial>& sturm, const Rational& a, const Rational& b)
{
  return sign_changes(sturm, a) - sign_changes(sturm, b);
}

Rational root_bound(const Polynomial& p)
{
  if (p.degree() <= 0) {
    return Rational(1);
  }
  Rational worst = 0;
  const Rational lead = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) {
    worst = std::max(worst, Rational(abs(p.coeff(k)) / lead));
  }
  return worst + 1;
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Polynomial& p, const Rational& width)
{
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() <= 0) {
    return out;
  }
  const Polynomial sf = square_free(p);
  const auto seq = sturm_sequence(sf);
  const Rational bound = root_bound(sf);
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const int cnt = count_real_roots(seq, lo, hi);
    if (cnt == 0) {
      continue;
    }
    if (cnt == 1 && hi - lo <= width) {
      out.push_back({lo, hi});
      continue;
    }
    const Rational mid = (lo + hi) / 2;
    stack.push_back({mid, hi});
    stack.push_back({lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<double> real_roots(const Polynomial& p)
{
  std::vector<double> out;
  if (p.degree() <= 0) {
    return out;
  }
  const Rational bound = root_bound(square_free(p));
  Rational width = bound;
  mpz_class two_pow = 1;
  two_pow <<= 60;
  width /= Rational(two_pow);
  for (const auto& [lo, hi] : isolate_real_roots(p, width)) {
    // A root sitting exactly on the upper end is reported exactly.
    if (sgn(p.eval(hi)) == 0) {
      out.push_back(hi.get_d());
    } else {
      out.push_back(Rational((lo + hi) / 2).get_d());
    }
  }
  return out;
}

Polynomial resultant_y(const BivariatePolynomial& f_in, const BivariatePolynomial& g_in)
{
  auto trim = [](BivariatePolynomial p) {
    while (!p.empty() && p.back().is_zero()) {
      p.pop_back();
    }
    return p;
  };
  const BivariatePolynomial f = trim(f_in);
  const BivariatePolynomial g = trim(g_in);
  if (f.empty() || g.empty()) {
    return Polynomial();
  }
  const std::size_t m = f.size() - 1; // deg_y f
  const std::size_t n = g.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) {
    return Polynomial::constant(Rational(1));
  }
  // Sylvester matrix: n shifted rows of f, m shifted rows of g, highest power first.
  std::vector<std::vector<Polynomial>> s(size, std::vector<Polynomial>(size));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) {
      s[r][r + k] = f[m - k];
    }
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) {
      s[n + r][r + k] = g[n - k];
    }
  }
  // Bareiss: every division is exact in Q[x].
  Polynomial prev = Polynomial::constant(Rational(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (s[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && s[swap_row][k].is_zero()) {
        ++swap_row;
      }
      if (swap_row == size) {
        return Polynomial();
      }
      std::swap(s[k], s[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        s[i][j] = (s[i][j] * s[k][k] - s[i][k] * s[k][j]).exact_div(prev);
      }
      s[i][k] = Polynomial();
    }
    prev = s[k][k];
  }
  Polynomial det = s[size - 1][size - 1];
  return sign < 0 ? -det : det;
}

} // namespace superein
