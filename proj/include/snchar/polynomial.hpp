#ifndef SNCHAR_POLYNOMIAL_HPP
#define SNCHAR_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace snchar {

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
template <typename Coeff>
class DensePoly {
public:
  DensePoly() = default;
  DensePoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

  static DensePoly constant(const Coeff& v) { return DensePoly(std::vector<Coeff>{v}); }
  /// a*n + b
  static DensePoly linear(const Coeff& a, const Coeff& b) { return DensePoly(std::vector<Coeff>{b, a}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Coeff>& coeffs() const { return c_; }
  Coeff operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  Coeff leading() const { return c_.empty() ? Coeff(0) : c_.back(); }

  template <typename X>
  X eval(const X& x) const
  {
    X acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = acc * x + X(c_[i]);
    return acc;
  }

  DensePoly operator-() const
  {
    DensePoly r = *this;
    for (auto& v : r.c_)
      v = -v;
    return r;
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b)
  {
    std::vector<Coeff> r(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      r[i] += b.c_[i];
    return DensePoly(std::move(r));
  }

  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b)
  {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] += a.c_[i] * b.c_[j];
    return DensePoly(std::move(r));
  }

  friend DensePoly operator*(const Coeff& s, const DensePoly& a)
  {
    std::vector<Coeff> r = a.c_;
    for (auto& v : r)
      v *= s;
    return DensePoly(std::move(r));
  }

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

private:
  void trim()
  {
    while (!c_.empty() && c_.back() == 0)
      c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPoly = DensePoly<Integer>;
using QPoly = DensePoly<Rational>;

inline QPoly to_qpoly(const IntPoly& p)
{
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs())
    c.emplace_back(v);
  return QPoly(std::move(c));
}

/// Quotient and remainder over Q.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b)
{
  if (b.is_zero())
    throw domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db)
    return {QPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0)
      continue;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<std::size_t>(k + i)] -= q * b.coeffs()[static_cast<std::size_t>(i)];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

/// Monic gcd over Q; gcd(0, 0) = 0.
inline QPoly gcd(QPoly a, QPoly b)
{
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero())
    return a;
  return Rational(1) / a.leading() * a;
}

inline Integer content(const IntPoly& p)
{
  Integer g = 0;
  for (const auto& v : p.coeffs())
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

/// Scales a rational polynomial to an integer one with content 1 and
/// positive leading coefficient. Returns the zero polynomial unchanged.
inline IntPoly primitive_part(const QPoly& p)
{
  if (p.is_zero())
    return {};
  Integer l = 1;
  for (const auto& v : p.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> c;
  for (const auto& v : p.coeffs()) {
    Rational s = v * Rational(l);
    c.push_back(s.get_num());
  }
  IntPoly r(std::move(c));
  Integer g = content(r);
  if (r.leading() < 0)
    g = -g;
  std::vector<Integer> d = r.coeffs();
  for (auto& v : d)
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(d));
}

/// Expanded form in decreasing degree, e.g. "n^2 - 7*n + 18".
template <typename Coeff>
std::string to_string(const DensePoly<Coeff>& p, const std::string& var = "n")
{
  if (p.is_zero())
    return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    Coeff c = p[static_cast<std::size_t>(k)];
    if (c == 0)
      continue;
    const bool neg = c < 0;
    if (neg)
      c = -c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    const bool unit = (c == 1);
    if (k == 0 || !unit)
      s += c.get_str();
    if (k > 0) {
      if (!unit)
        s += "*";
      s += var;
      if (k > 1)
        s += "^" + std::to_string(k);
    }
  }
  return s;
}

} // namespace snchar

#endif // SNCHAR_POLYNOMIAL_HPP
