#ifndef SNCHAR_CLOSEDFORM_HPP
#define SNCHAR_CLOSEDFORM_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "character.hpp"
#include "charsums.hpp"
#include "errors.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "rational_function.hpp"

// Closed forms R(n) * C(2n, n) for two-row sums and R(n) * C(2n-2, n-1) for
// hook sums. Every derived factor is point-checked against the direct sums
// before it is returned.

namespace snchar {

/// The central binomial a closed form is a multiple of.
enum class CentralBase {
  central_2n,         ///< C(2n, n)
  central_2n_minus_2, ///< C(2n-2, n-1)
};

/// base(n) = C(2n - shift, n - shift/2)
inline int base_shift(CentralBase b) { return b == CentralBase::central_2n ? 0 : 2; }

inline std::string to_string(CentralBase b)
{
  return b == CentralBase::central_2n ? "C(2n,n)" : "C(2n-2,n-1)";
}

inline Integer eval_base(CentralBase b, long n)
{
  const long c = base_shift(b);
  return binomial(2 * n - c, n - c / 2);
}

struct ClosedForm {
  CentralBase base = CentralBase::central_2n;
  RationalFunction factor;
  long valid_from = 0;

  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

/// coeff * C(n - alpha, j - beta), zero outside 0 <= j - beta <= n - alpha.
struct BinomialTerm {
  Integer coeff;
  int alpha = 0;
  int beta = 0;

  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

/// coeff * C(2n - top, n - bottom)
struct CentralShift {
  Integer coeff;
  int top = 0;
  int bottom = 0;
};

/// Laurent polynomial in one variable with q_{-j} = q_j.
class SymLaurent {
public:
  SymLaurent() { coeffs_[0] = 1; }

  /// Multiplies by (x^a - (-1)^a)(x^{-a} - (-1)^a).
  void multiply_hook_factor(int a)
  {
    const Integer s = (a % 2) ? -1 : 1; // (-1)^a
    // (x^a - s)(x^-a - s) = 1 + s^2 - s x^a - s x^-a = 2 - s x^a - s x^-a
    std::map<int, Integer> out;
    for (const auto& [e, c] : coeffs_) {
      out[e] += 2 * c;
      out[e + a] -= s * c;
      out[e - a] -= s * c;
    }
    coeffs_.clear();
    for (auto& [e, c] : out)
      if (c != 0)
        coeffs_.emplace(e, std::move(c));
  }

  const std::map<int, Integer>& coeffs() const { return coeffs_; }

  bool is_symmetric() const
  {
    for (const auto& [e, c] : coeffs_) {
      auto it = coeffs_.find(-e);
      if (it == coeffs_.end() || it->second != c)
        return false;
    }
    return true;
  }

private:
  std::map<int, Integer> coeffs_;
};

/// prod_i (x^{a_i} - (-1)^{a_i})(x^{-a_i} - (-1)^{a_i}) over the parts of mu0.
inline SymLaurent hook_square_kernel(const Partition& mu0)
{
  SymLaurent q;
  for (int a : mu0.parts())
    q.multiply_hook_factor(a);
  return q;
}

namespace detail {

/// (k n + hi)! / (k n + lo)! as a product (hi >= lo) or reciprocal product.
inline RationalFunction factorial_ratio(long k, long hi, long lo)
{
  IntPoly prod = IntPoly::constant(1);
  const long from = std::min(hi, lo) + 1;
  const long to = std::max(hi, lo);
  for (long i = from; i <= to; ++i)
    prod = prod * IntPoly::linear(Integer(k), Integer(i));
  if (hi >= lo)
    return RationalFunction::polynomial(prod);
  return RationalFunction(IntPoly::constant(1), prod);
}

} // namespace detail

/// rho(n) with C(2n - a, n - b) = rho(n) * base(n), read off factorials:
///   (2n-a)!/(2n-c)! * (n-c/2)!/(n-b)! * (n-c/2)!/(n-a+b)!,   c = base shift.
inline RationalFunction binomial_ratio(int a, int b, CentralBase base)
{
  if (a < 0)
    throw domain_error("binomial_ratio: negative upper shift");
  const long c = base_shift(base);
  const long d = c / 2;
  return detail::factorial_ratio(2, -a, -c) * detail::factorial_ratio(1, -d, -b) *
         detail::factorial_ratio(1, -c + d, -a + b);
}

/// sum_j C(n-alpha, j-beta) C(n-alpha', j-beta') = C(2n-alpha-alpha', n+beta'-alpha'-beta)
inline CentralShift vc_sum(const BinomialTerm& t1, const BinomialTerm& t2)
{
  return CentralShift{t1.coeff * t2.coeff, t1.alpha + t2.alpha, t2.alpha + t1.beta - t2.beta};
}

/// chi^{(n-j, j)}(mu0 1^{n-|mu0|}) = sum_t coeff_t C(n - |mu0|, j - beta_t).
///
/// Each monomial x1^{e1} x2^{e2} of (1 - x2/x1) prod_i (x1^{a_i} + x2^{a_i})
/// gives the term (coeff, |mu0|, e2); equal beta are merged, ascending beta.
inline std::vector<BinomialTerm> two_row_expansion(const Partition& mu0)
{
  require_no_unit_parts(mu0);
  const LaurentPoly pre = expand_prefactor(2, mu0.vec());
  std::map<int, Integer> by_beta;
  for (const auto& [e, c] : pre) {
    if (e[0] + e[1] != mu0.weight())
      throw inconsistency_error("two-row prefactor term of wrong degree");
    by_beta[e[1]] += c;
  }
  std::vector<BinomialTerm> out;
  for (const auto& [beta, c] : by_beta)
    if (c != 0)
      out.push_back(BinomialTerm{c, mu0.weight(), beta});
  return out;
}

/// Evaluates sum_t coeff_t C(n - alpha_t, j - beta_t) at integer j.
inline Integer eval_binomial_combination(const std::vector<BinomialTerm>& terms, long n, long j)
{
  Integer total = 0;
  for (const auto& t : terms)
    total += t.coeff * binomial(n - t.alpha, j - t.beta);
  return total;
}

/// True iff the coefficient at beta equals minus the one at |mu0| + 1 - beta,
/// i.e. c(n+1-j) = -c(j) for the expanded two-row character.
inline bool is_two_row_antisymmetric(const std::vector<BinomialTerm>& terms, int mu0_weight)
{
  std::map<int, Integer> by_beta;
  for (const auto& t : terms)
    by_beta[t.beta] += t.coeff;
  for (const auto& [beta, c] : by_beta) {
    auto it = by_beta.find(mu0_weight + 1 - beta);
    if (c != 0 && (it == by_beta.end() || it->second != -c))
      return false;
  }
  return true;
}

/// Point-check range [valid_from, valid_from + 4|mu0| + 10].
struct CertificationWindow {
  long lo = 0;
  long hi = 0;
};

inline CertificationWindow certification_window(const ClosedForm& cf, const Partition& mu0)
{
  return {cf.valid_from, cf.valid_from + 4L * mu0.weight() + 10};
}

inline Rational eval_closed_form(const ClosedForm& cf, long n)
{
  if (n < cf.valid_from)
    throw domain_error("closed form evaluated at n=" + std::to_string(n) + " below valid_from=" +
                       std::to_string(cf.valid_from));
  return cf.factor.eval(n) * Rational(eval_base(cf.base, n));
}

namespace detail {

inline long first_point_past_poles(const RationalFunction& f, long from)
{
  const auto roots = integer_roots_from(f.denominator(), from);
  return roots.empty() ? from : roots.back() + 1;
}

template <typename DirectSum>
void certify(const ClosedForm& cf, const Partition& mu0, const char* kind, DirectSum&& direct)
{
  const CertificationWindow w = certification_window(cf, mu0);
  for (long n = w.lo; n <= w.hi; ++n) {
    const Rational closed = eval_closed_form(cf, n);
    const Integer brute = direct(static_cast<int>(n));
    if (closed != Rational(brute))
      throw certification_error(std::string(kind) + " closed form for mu0=(" + mu0.to_string() + ") gives " +
                                closed.get_str() + " at n=" + std::to_string(n) + ", direct sum is " +
                                brute.get_str());
  }
}

} // namespace detail

/// Two-row sum as R(n) * C(2n, n).
///
/// The squared expansion is summed over all integers j: the terms of
/// two_row_expansion are antisymmetric under j -> n+1-j, so the bilateral sum
/// is exactly twice the sum over 0 <= j <= n/2, and each product of two
/// terms closes by Vandermonde-Chu.
inline ClosedForm derive_psi2(const Partition& mu0)
{
  const std::vector<BinomialTerm> terms = two_row_expansion(mu0);
  if (!is_two_row_antisymmetric(terms, mu0.weight()))
    throw certification_error("two-row expansion for mu0=(" + mu0.to_string() + ") is not antisymmetric");

  std::map<std::pair<int, int>, Integer> collected;
  for (const auto& t1 : terms)
    for (const auto& t2 : terms) {
      const CentralShift s = vc_sum(t1, t2);
      collected[{s.top, s.bottom}] += s.coeff;
    }

  RationalFunction bilateral;
  for (const auto& [shift, coeff] : collected)
    if (coeff != 0)
      bilateral += RationalFunction(Rational(coeff)) * binomial_ratio(shift.first, shift.second, CentralBase::central_2n);

  ClosedForm cf;
  cf.base = CentralBase::central_2n;
  cf.factor = bilateral * RationalFunction(Rational(1, 2));
  cf.valid_from = detail::first_point_past_poles(cf.factor, mu0.weight());
  detail::certify(cf, mu0, "psi2", [&](int n) { return psi2(mu0, n); });
  return cf;
}

/// Hook sum as R(n) * C(2n-2, n-1): the constant term of F(x) F(1/x) is
/// sum_j q_j C(2(n-1-|mu0|), n-1-|mu0|-j) over the monomials q_j x^j of
/// hook_square_kernel(mu0).
inline ClosedForm derive_phi2(const Partition& mu0)
{
  require_no_unit_parts(mu0);
  const SymLaurent q = hook_square_kernel(mu0);
  const int w = mu0.weight();

  RationalFunction total;
  for (const auto& [j, c] : q.coeffs())
    total += RationalFunction(Rational(c)) * binomial_ratio(2 + 2 * w, 1 + w + j, CentralBase::central_2n_minus_2);

  ClosedForm cf;
  cf.base = CentralBase::central_2n_minus_2;
  cf.factor = total;
  cf.valid_from = detail::first_point_past_poles(cf.factor, w + 1);
  detail::certify(cf, mu0, "phi2", [&](int n) { return phi2(mu0, n); });
  return cf;
}

/// `R(n) = (num)/(den); base = C(2n,n); valid_from = n0`
inline std::string format_closed_form(const ClosedForm& cf)
{
  return "R(n) = " + to_string(cf.factor) + "; base = " + to_string(cf.base) +
         "; valid_from = " + std::to_string(cf.valid_from);
}

} // namespace snchar

#endif // SNCHAR_CLOSEDFORM_HPP
