#include <gtest/gtest.h>

#include <snchar/charsums.hpp>
#include <snchar/oracle.hpp>

#include "support.hpp"

using namespace snchar;
using snchar::testing::catalan;
using snchar::testing::motzkin;

namespace {

SumRequest rows_req(int r, int s, int n, Partition mu0 = {})
{
  return SumRequest{SumFamily::rows_bounded, r, std::nullopt, std::nullopt, s, std::move(mu0), n};
}

Integer oracle_hook_square(const Partition& mu0, int n)
{
  Integer s = 0;
  for (int j = 1; j <= n; ++j) {
    std::vector<int> hook(static_cast<std::size_t>(n - j + 1), 1);
    hook[0] = j;
    const Integer c = mn_character(Partition(hook), pad_with_ones(mu0, n));
    s += c * c;
  }
  return s;
}

Integer oracle_two_row_square(const Partition& mu0, int n)
{
  Integer s = 0;
  for (int j = 0; 2 * j <= n; ++j) {
    const Partition lambda = j ? Partition{n - j, j} : (n ? Partition{n} : Partition{});
    const Integer c = mn_character(lambda, pad_with_ones(mu0, n));
    s += c * c;
  }
  return s;
}

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

TEST(MnCharacter, Examples)
{
  EXPECT_EQ(mn_character({2, 2}, {3, 1}), -1);
  EXPECT_EQ(mn_character({6}, {4, 2}), 1);
  EXPECT_EQ(mn_character({1, 1, 1, 1, 1}, {3, 1, 1}), 1);
  EXPECT_EQ(mn_character({1, 1, 1, 1}, {2, 1, 1}), -1);
  EXPECT_THROW(mn_character({3}, {2}), domain_error);
}

TEST(MnCharacter, SignTwistAndDegree)
{
  for (int n = 1; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) {
      EXPECT_EQ(mn_character(lambda, pad_with_ones({}, n)), f_lambda(lambda));
      for (const auto& mu : partitions_of(n)) {
        const Integer sign = ((n - static_cast<int>(mu.length())) % 2) ? -1 : 1;
        EXPECT_EQ(mn_character(conjugate(lambda), mu), sign * mn_character(lambda, mu));
      }
    }
}

TEST(SumPowersBrute, Examples)
{
  EXPECT_EQ(sum_powers_brute(2, 2, {1, 1, 1, 1}), 14);
  EXPECT_EQ(sum_powers_brute(3, 1, {1, 1, 1, 1}), 9);
  EXPECT_EQ(sum_powers_brute(4, 2, {2, 1, 1}), 4);
  EXPECT_THROW(sum_powers_brute(0, 1, {1}), domain_error);
}

TEST(PowerSum, Examples)
{
  EXPECT_EQ(power_sum(rows_req(2, 2, 4)), 14);
  EXPECT_EQ(power_sum(rows_req(4, 1, 5)), 25);
  EXPECT_EQ(power_sum(rows_req(2, 1, 5)), 10);
}

TEST(PowerSum, Validation)
{
  EXPECT_THROW(power_sum(rows_req(2, 0, 4)), domain_error);
  EXPECT_THROW(power_sum(rows_req(2, 1, 1, {2})), domain_error);
  EXPECT_THROW(power_sum(rows_req(2, 1, 4, {2, 1})), domain_error);
  EXPECT_THROW(power_sum(SumRequest{SumFamily::rows_bounded, std::nullopt, {}, {}, 1, {}, 3}), domain_error);
  EXPECT_THROW(power_sum(SumRequest{SumFamily::hook, 2, {}, {}, 1, {}, 3}), domain_error);
  EXPECT_THROW(power_sum(SumRequest{SumFamily::meta_hook, {}, 1, {}, 1, {}, 3}), domain_error);
  EXPECT_THROW(parse_sum_family("diagonal"), parse_error);
  EXPECT_EQ(parse_sum_family(to_string(SumFamily::meta_hook)), SumFamily::meta_hook);
}

TEST(PowerSum, SequenceIdentifications)
{
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(power_sum(rows_req(2, 2, n)), catalan(n)) << n;
    EXPECT_EQ(power_sum(rows_req(3, 1, n)), motzkin(n)) << n;
    EXPECT_EQ(power_sum(rows_req(4, 1, n)), catalan((n + 1) / 2) * catalan(n / 2 + 1)) << n;
    EXPECT_EQ(power_sum(rows_req(2, 1, n)), binomial(n, n / 2)) << n;
  }
}

TEST(PowerSum, AllShapesSquaresGiveCentralizer)
{
  for (int n = 0; n <= 8; ++n)
    for (const auto& mu0 : fixed_parts_up_to(n)) {
      const SumRequest req{SumFamily::all_shapes, {}, {}, {}, 2, mu0, n};
      EXPECT_EQ(power_sum(req), centralizer_order(pad_with_ones(mu0, n))) << mu0.to_string() << " n=" << n;
      // r >= n reproduces all shapes
      EXPECT_EQ(power_sum(rows_req(std::max(n, 1), 2, n, mu0)), power_sum(req));
    }
}

TEST(PowerSum, MetaHookMatchesDirectFilter)
{
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= 2; ++k)
      for (int l = 0; l <= 2; ++l) {
        Integer direct = 0;
        for (const auto& lambda : partitions_of(n))
          if (in_meta_hook(lambda, k, l))
            direct += f_lambda(lambda);
        const SumRequest req{SumFamily::meta_hook, {}, k, l, 1, {}, n};
        EXPECT_EQ(power_sum(req), direct);
      }
}

TEST(ShapeCharacter, TallAndWideShapesUseTheSameValues)
{
  for (const Partition& lambda : {Partition{3, 1, 1, 1, 1, 1, 1, 1, 1, 1}, Partition{9, 1, 1, 1},
                                  Partition{2, 2, 2, 2, 1, 1, 1, 1, 1, 1}})
    for (const Partition& mu0 : {Partition{}, Partition{2}, Partition{3, 2}, Partition{2, 2, 2}})
      EXPECT_EQ(shape_character(lambda, mu0), mn_character(lambda, pad_with_ones(mu0, lambda.weight())))
          << lambda.to_string() << " / " << mu0.to_string();
}

TEST(SquareSums, Examples)
{
  EXPECT_EQ(phi2({}, 3), 6);
  EXPECT_EQ(phi2({2}, 4), 4);
  EXPECT_EQ(phi2({}, 1), 1);
  EXPECT_EQ(psi2({}, 4), 14);
  EXPECT_EQ(psi2({2}, 4), 2);
  EXPECT_EQ(psi2({3}, 4), 2);
  EXPECT_EQ(psi2({}, 0), 1);
  EXPECT_THROW(phi2({}, 0), domain_error);
  EXPECT_THROW(phi2({3}, 2), domain_error);
  EXPECT_THROW(psi2({2, 1}, 5), domain_error);
}

TEST(SquareSums, AgreeWithMurnaghanNakayama)
{
  for (const auto& mu0 : fixed_parts_up_to(4))
    for (int n = std::max(1, mu0.weight()); n <= 10; ++n) {
      EXPECT_EQ(phi2(mu0, n), oracle_hook_square(mu0, n)) << mu0.to_string() << " n=" << n;
      EXPECT_EQ(psi2(mu0, n), oracle_two_row_square(mu0, n)) << mu0.to_string() << " n=" << n;
    }
}

TEST(HookGf, Examples)
{
  using Coeffs = std::vector<std::pair<int, Integer>>;
  EXPECT_EQ(hook_gf_coeffs({}, 4), (Coeffs{{1, 1}, {2, 3}, {3, 3}, {4, 1}}));
  EXPECT_EQ(hook_gf_coeffs({2}, 3), (Coeffs{{1, -1}, {3, 1}}));
  EXPECT_THROW(hook_gf_coeffs({3}, 3), domain_error);
}

TEST(HookGf, CoefficientsAreHookCharacters)
{
  for (const auto& mu0 : fixed_parts_up_to(5))
    for (int n = mu0.weight() + 1; n <= 12; ++n) {
      std::map<int, Integer> gf;
      Integer sq = 0;
      for (const auto& [j, c] : hook_gf_coeffs(mu0, n)) {
        gf[j] = c;
        sq += c * c;
      }
      for (int j = 1; j <= n; ++j) {
        std::vector<int> hook(static_cast<std::size_t>(n - j + 1), 1);
        hook[0] = j;
        EXPECT_EQ(gf.count(j) ? gf[j] : Integer(0), character_padded(Partition(hook), mu0));
      }
      EXPECT_EQ(sq, phi2(mu0, n));
    }
}
