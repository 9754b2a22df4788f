#ifndef SNCHAR_BIGINT_HPP
#define SNCHAR_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace snchar {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned long k)
{
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

// C(n, k) with C(n, k) = 0 for k < 0 or k > n; n must be >= 0.
inline Integer binomial(long n, long k)
{
  if (n < 0 || k < 0 || k > n)
    return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Integer ipow(const Integer& base, unsigned long e)
{
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational make_rational(const Integer& num, const Integer& den = 1)
{
  Rational q(num, den);
  q.canonicalize();
  return q;
}

} // namespace snchar

#endif // SNCHAR_BIGINT_HPP
