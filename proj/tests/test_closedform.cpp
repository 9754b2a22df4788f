#include <gtest/gtest.h>

#include <snchar/closedform.hpp>

#include "support.hpp"

using namespace snchar;

namespace {

IntPoly lin(long a, long b) { return IntPoly::linear(Integer(a), Integer(b)); }

std::vector<Partition> fixed_parts_up_to(int max_weight)
{
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w)
    for (const auto& p : partitions_of(w))
      if (p.empty() || p.smallest_part() >= 2)
        out.push_back(p);
  return out;
}

} // namespace

TEST(BinomialRatio, Examples)
{
  EXPECT_EQ(binomial_ratio(0, 0, CentralBase::central_2n), RationalFunction(Rational(1)));
  EXPECT_EQ(binomial_ratio(2, 1, CentralBase::central_2n), RationalFunction(lin(1, 0), lin(4, -2)));
  EXPECT_EQ(binomial_ratio(2, 0, CentralBase::central_2n_minus_2), RationalFunction(lin(1, -1), lin(1, 0)));
  EXPECT_THROW(binomial_ratio(-1, 0, CentralBase::central_2n), domain_error);
}

TEST(BinomialRatio, PointwiseRatioProperty)
{
  for (CentralBase base : {CentralBase::central_2n, CentralBase::central_2n_minus_2})
    for (int a = 0; a <= 10; ++a)
      for (int b = -2; b <= a + 2; ++b) {
        const RationalFunction r = binomial_ratio(a, b, base);
        for (long n = a + 3; n <= a + 15; ++n) {
          const Integer target = binomial(2 * n - a, n - b);
          EXPECT_EQ(r.eval(n) * Rational(eval_base(base, n)), Rational(target))
              << "a=" << a << " b=" << b << " n=" << n;
        }
      }
}

TEST(VcSum, ClosesTheConvolution)
{
  const CentralShift s = vc_sum({1, 0, 0}, {1, 0, 0});
  EXPECT_EQ(s.top, 0);
  EXPECT_EQ(s.bottom, 0);
  const CentralShift t = vc_sum({1, 2, 0}, {1, 2, 1});
  EXPECT_EQ(t.top, 4);
  EXPECT_EQ(t.bottom, 1);

  for (int a1 = 0; a1 <= 3; ++a1)
    for (int a2 = 0; a2 <= 3; ++a2)
      for (int b1 = 0; b1 <= 4; ++b1)
        for (int b2 = 0; b2 <= 4; ++b2)
          for (long n = 5; n <= 15; ++n) {
            Integer direct = 0;
            for (long j = -10; j <= n + 10; ++j)
              direct += binomial(n - a1, j - b1) * binomial(n - a2, j - b2);
            const CentralShift c = vc_sum({1, a1, b1}, {1, a2, b2});
            const CentralShift swapped = vc_sum({1, a2, b2}, {1, a1, b1});
            EXPECT_EQ(binomial(2 * n - c.top, n - c.bottom), direct);
            EXPECT_EQ(binomial(2 * n - swapped.top, n - swapped.bottom), direct);
          }
}

TEST(TwoRowExpansion, SmallCases)
{
  EXPECT_EQ(two_row_expansion({}), (std::vector<BinomialTerm>{{1, 0, 0}, {-1, 0, 1}}));
  for (const Partition& mu0 : {Partition{}, Partition{2}, Partition{3}, Partition{2, 2}})
    for (int n = std::max(4, mu0.weight()); n <= 10; ++n) {
      const auto terms = two_row_expansion(mu0);
      for (int j = 0; 2 * j <= n; ++j) {
        const Partition lambda = j ? Partition{n - j, j} : Partition{n};
        EXPECT_EQ(eval_binomial_combination(terms, n, j), character_padded(lambda, mu0));
      }
      for (int j = -3; j < 0; ++j)
        EXPECT_EQ(eval_binomial_combination(terms, n, j), 0);
    }
  EXPECT_THROW(two_row_expansion({2, 1}), domain_error);
}

TEST(TwoRowExpansion, AntisymmetryAndHalving)
{
  for (const auto& mu0 : fixed_parts_up_to(8)) {
    const auto terms = two_row_expansion(mu0);
    EXPECT_TRUE(is_two_row_antisymmetric(terms, mu0.weight())) << mu0.to_string();
    const int w = mu0.weight();
    for (int n = w + 2; n <= w + 12; ++n) {
      Integer bilateral = 0;
      for (int j = -2; j <= n + 3; ++j) {
        const Integer c = eval_binomial_combination(terms, n, j);
        EXPECT_EQ(eval_binomial_combination(terms, n, n + 1 - j), -c);
        bilateral += c * c;
      }
      if (w <= 5)
        EXPECT_EQ(bilateral, 2 * psi2(mu0, n)) << mu0.to_string() << " n=" << n;
    }
  }
}

TEST(HookKernel, IsSymmetric)
{
  for (const auto& mu0 : fixed_parts_up_to(8))
    EXPECT_TRUE(hook_square_kernel(mu0).is_symmetric());
  // (x^2 - 1)(x^-2 - 1) = 2 - x^2 - x^-2
  const auto q = hook_square_kernel({2}).coeffs();
  EXPECT_EQ(q.size(), 3u);
  EXPECT_EQ(q.at(0), 2);
  EXPECT_EQ(q.at(2), -1);
}

TEST(DerivePsi2, Examples)
{
  const ClosedForm empty = derive_psi2({});
  EXPECT_EQ(empty.base, CentralBase::central_2n);
  EXPECT_EQ(empty.factor, RationalFunction(IntPoly{1}, lin(1, 1)));
  EXPECT_EQ(eval_closed_form(empty, 0), 1);

  const ClosedForm two = derive_psi2({2});
  EXPECT_EQ(two.factor, RationalFunction(IntPoly{9, -5, 1}, lin(2, -1) * lin(2, -3) * lin(1, 1)));
  EXPECT_EQ(eval_closed_form(two, 4), 2);

  const ClosedForm twotwo = derive_psi2({2, 2});
  EXPECT_EQ(twotwo.factor, RationalFunction(IntPoly{525, -316, 89, -14, 1},
                                            lin(2, -1) * lin(2, -3) * lin(2, -5) * lin(2, -7) * lin(1, 1)));
}

TEST(DerivePhi2, Examples)
{
  const ClosedForm empty = derive_phi2({});
  EXPECT_EQ(empty.base, CentralBase::central_2n_minus_2);
  EXPECT_EQ(empty.factor, RationalFunction(Rational(1)));
  EXPECT_EQ(eval_closed_form(empty, 3), 6);

  EXPECT_EQ(derive_phi2({2}).factor, RationalFunction(IntPoly{1}, lin(2, -3)));
  EXPECT_EQ(derive_phi2({2, 2}).factor, RationalFunction(IntPoly{3}, lin(2, -3) * lin(2, -5)));
}

TEST(DerivePhi2, PowersOfTwoProduct)
{
  for (int r = 0; r <= 4; ++r) {
    const ClosedForm cf = derive_phi2(Partition(std::vector<int>(static_cast<std::size_t>(r), 2)));
    for (long n = std::max<long>(cf.valid_from, 2L * r + 1); n <= 20; ++n) {
      const Rational product = Rational(factorial(2 * r) * factorial(static_cast<unsigned long>(2 * n - 2 * r - 2))) /
                               Rational(factorial(r) * factorial(static_cast<unsigned long>(n - 1)) *
                                        factorial(static_cast<unsigned long>(n - r - 1)));
      EXPECT_EQ(eval_closed_form(cf, n), product) << "r=" << r << " n=" << n;
    }
  }
}

TEST(ClosedForm, ValidFromAvoidsPolesAndGuardsEvaluation)
{
  for (const auto& mu0 : fixed_parts_up_to(6))
    for (const ClosedForm& cf : {derive_phi2(mu0), derive_psi2(mu0)}) {
      EXPECT_GE(cf.valid_from, mu0.weight());
      EXPECT_TRUE(integer_roots_from(cf.factor.denominator(), cf.valid_from).empty());
      EXPECT_THROW(eval_closed_form(cf, cf.valid_from - 1), domain_error);
      const auto w = certification_window(cf, mu0);
      EXPECT_EQ(w.hi - w.lo, 4L * mu0.weight() + 10);
    }
}

TEST(ClosedForm, RemarkableIdentityOfFactors)
{
  const ClosedForm psi = derive_psi2({3});
  const ClosedForm phi = derive_phi2({3, 2});
  for (long n = 5; n <= 30; ++n)
    EXPECT_EQ(eval_closed_form(psi, n), eval_closed_form(phi, n + 2) / 2);
}

TEST(ClosedForm, Formatting)
{
  const ClosedForm cf = derive_phi2({3});
  EXPECT_EQ(format_closed_form(cf), "R(n) = (n^2 - 7*n + 18)/(16*n^2 - 64*n + 60); base = C(2n-2,n-1); valid_from = 4");
  EXPECT_EQ(to_pretty_string(derive_psi2({2}).factor), "(n^2 - 5*n + 9)/((2*n - 1)*(2*n - 3)*(n + 1))");
}
