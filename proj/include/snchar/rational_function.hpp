#ifndef SNCHAR_RATIONAL_FUNCTION_HPP
#define SNCHAR_RATIONAL_FUNCTION_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "polynomial.hpp"

namespace snchar {

/// Rational function of one variable n over Q in canonical form:
/// integer numerator and denominator, coprime over Q, no common integer
/// content, denominator with positive leading coefficient. Two equal
/// functions therefore have identical fields.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(IntPoly::constant(1)) {}
  RationalFunction(const Rational& c) { assign(QPoly::constant(c), QPoly::constant(1)); }
  RationalFunction(const QPoly& num, const QPoly& den) { assign(num, den); }
  RationalFunction(const IntPoly& num, const IntPoly& den) { assign(to_qpoly(num), to_qpoly(den)); }

  static RationalFunction polynomial(const IntPoly& p) { return RationalFunction(p, IntPoly::constant(1)); }

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Value at an integer point; throws domain_error at a pole.
  Rational eval(long n) const
  {
    const Integer x = n;
    const Integer d = den_.eval(x);
    if (d == 0)
      throw domain_error("rational function has a pole at n=" + std::to_string(n));
    return make_rational(num_.eval(x), d);
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
  {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
  {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
  {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
  {
    if (b.is_zero())
      throw domain_error("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
  void assign(const QPoly& num, const QPoly& den)
  {
    if (den.is_zero())
      throw domain_error("rational function with zero denominator");
    if (num.is_zero()) {
      num_ = IntPoly{};
      den_ = IntPoly::constant(1);
      return;
    }
    const QPoly g = gcd(num, den);
    QPoly n = divmod(num, g).first;
    QPoly d = divmod(den, g).first;
    // common scale: clear all denominators, then strip the joint content
    Integer l = 1;
    for (const auto* p : {&n, &d})
      for (const auto& v : p->coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    auto scaled = [&](const QPoly& p) {
      std::vector<Integer> c;
      for (const auto& v : p.coeffs())
        c.push_back(Rational(v * Rational(l)).get_num());
      return IntPoly(std::move(c));
    };
    IntPoly in = scaled(n), id = scaled(d);
    Integer g2 = content(in);
    const Integer cd = content(id);
    mpz_gcd(g2.get_mpz_t(), g2.get_mpz_t(), cd.get_mpz_t());
    if (id.leading() < 0)
      g2 = -g2;
    auto divided = [&](const IntPoly& p) {
      std::vector<Integer> c = p.coeffs();
      for (auto& v : c)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g2.get_mpz_t());
      return IntPoly(std::move(c));
    };
    num_ = divided(in);
    den_ = divided(id);
  }

  IntPoly num_;
  IntPoly den_;
};

/// "(num)/(den)" with both polynomials expanded in decreasing degree.
inline std::string to_string(const RationalFunction& r, const std::string& var = "n")
{
  return "(" + to_string(r.numerator(), var) + ")/(" + to_string(r.denominator(), var) + ")";
}

/// Upper bound on |root| (Fujiwara), in floating point with a safety margin.
inline double root_magnitude_bound(const IntPoly& p)
{
  const int d = p.degree();
  if (d <= 0)
    return 0.0;
  const double lead = std::fabs(p.leading().get_d());
  double best = 0.0;
  for (int i = 1; i <= d; ++i) {
    const double c = std::fabs(p[static_cast<std::size_t>(d - i)].get_d()) / lead;
    double t = std::pow(c, 1.0 / i);
    if (i == d)
      t = std::pow(c / 2.0, 1.0 / i);
    best = std::max(best, t);
  }
  return 2.0 * best + 1.0;
}

/// Integer roots of p that are >= from, ascending.
inline std::vector<long> integer_roots_from(const IntPoly& p, long from)
{
  std::vector<long> roots;
  if (p.degree() <= 0)
    return roots;
  const long hi = static_cast<long>(std::ceil(root_magnitude_bound(p))) + 1;
  for (long x = std::max(from, -hi); x <= hi; ++x)
    if (p.eval(Integer(x)) == 0)
      roots.push_back(x);
  return roots;
}

/// Splits an integer polynomial as c * prod (q_i n - p_i) * rest, pulling
/// out rational roots with small denominators. Used for display only.
struct LinearFactorization {
  Integer scalar; // 0 when the split is not integral
  std::vector<std::pair<long, long>> factors; // (q, p): q*n - p, gcd(p,q)=1, q>0
  IntPoly rest;
};

inline LinearFactorization factor_linear(const IntPoly& p, long max_root_den = 64)
{
  LinearFactorization out{0, {}, {}};
  if (p.is_zero())
    return out;
  QPoly rest = to_qpoly(p);
  const long bound = static_cast<long>(std::ceil(root_magnitude_bound(p))) + 1;
  const Integer lead = abs(p.leading());
  // a rational root num/q of an integer polynomial has q | leading coefficient
  for (long q = 1; q <= max_root_den && rest.degree() > 0; ++q) {
    if (!mpz_divisible_ui_p(lead.get_mpz_t(), static_cast<unsigned long>(q)))
      continue;
    for (long num = -bound * q; num <= bound * q && rest.degree() > 0; ++num) {
      if (std::gcd(num, q) != 1)
        continue;
      while (rest.degree() > 0 && rest.eval(Rational(num, q)) == 0) {
        rest = divmod(rest, QPoly::linear(Rational(q), Rational(-num))).first;
        out.factors.emplace_back(q, num);
      }
    }
  }
  out.rest = primitive_part(rest);
  const Rational s = rest.leading() / Rational(out.rest.leading());
  out.scalar = s.get_den() == 1 ? Integer(s.get_num()) : Integer(0);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first)
      return a.first > b.first;
    return a.second < b.second;
  });
  return out;
}

/// Denominator-factored display, e.g. "(n^2 - 7*n + 18)/(4*(2*n - 3)*(2*n - 5))".
inline std::string to_pretty_string(const RationalFunction& r, const std::string& var = "n")
{
  const LinearFactorization f = factor_linear(r.denominator());
  if (f.scalar == 0 || f.rest.degree() > 0)
    return to_string(r, var);
  const Integer& scalar = f.scalar;
  std::string den;
  auto append = [&](const std::string& piece) {
    if (!den.empty())
      den += "*";
    den += piece;
  };
  if (scalar != 1)
    append(scalar.get_str());
  for (auto [q, p] : f.factors)
    append("(" + to_string(IntPoly::linear(Integer(q), Integer(-p)), var) + ")");
  if (den.empty())
    return to_string(r.numerator(), var);
  const std::string num = to_string(r.numerator(), var);
  const bool wrap = r.numerator().degree() > 0 && num.find_first_of("+-", 1) != std::string::npos;
  return (wrap ? "(" + num + ")" : num) + "/" + (f.factors.size() + (scalar != 1) > 1 ? "(" + den + ")" : den);
}

} // namespace snchar

#endif // SNCHAR_RATIONAL_FUNCTION_HPP
