#ifndef SNCHAR_TESTS_SUPPORT_HPP
#define SNCHAR_TESTS_SUPPORT_HPP

// Independent reference computations and small random generators shared by
// the test binaries. Nothing here calls into the engines under test except
// for Partition itself.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include <snchar/bigint.hpp>
#include <snchar/partition.hpp>

namespace snchar::testing {

// ---- reference numbers ------------------------------------------------------

inline Integer catalan(long n) { return binomial(2 * n, n) / (n + 1); }

/// Motzkin numbers from M_n = sum_k C(n, 2k) C_k.
inline Integer motzkin(long n)
{
  Integer s = 0;
  for (long k = 0; 2 * k <= n; ++k)
    s += binomial(n, 2 * k) * catalan(k);
  return s;
}

// ---- standard Young tableaux by corner removal -----------------------------

inline Integer count_syt(const Partition& lambda)
{
  std::map<std::vector<int>, Integer> memo;
  std::function<Integer(std::vector<int>)> go = [&](std::vector<int> rows) -> Integer {
    while (!rows.empty() && rows.back() == 0)
      rows.pop_back();
    if (rows.empty())
      return 1;
    if (auto it = memo.find(rows); it != memo.end())
      return it->second;
    Integer total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const int below = i + 1 < rows.size() ? rows[i + 1] : 0;
      if (rows[i] > below) {
        auto smaller = rows;
        --smaller[i];
        total += go(smaller);
      }
    }
    memo.emplace(rows, total);
    return total;
  };
  return go(lambda.vec());
}

// ---- characters via Young's rule -------------------------------------------
//
// eta^nu(mu): number of ways to distribute the cycles of mu among rows so that
// row i receives total length nu_i (the permutation character on tabloids).
// chi^lambda = sum_{pi in S_m} sgn(pi) eta^{lambda + delta - pi(delta)}.

inline Integer tabloid_character(const std::vector<int>& nu, const std::vector<int>& cycles)
{
  for (int v : nu)
    if (v < 0)
      return 0;
  std::vector<int> left = nu;
  std::function<Integer(std::size_t)> go = [&](std::size_t k) -> Integer {
    if (k == cycles.size()) {
      for (int v : left)
        if (v != 0)
          return 0;
      return 1;
    }
    Integer total = 0;
    for (auto& v : left) {
      if (v >= cycles[k]) {
        v -= cycles[k];
        total += go(k + 1);
        v += cycles[k];
      }
    }
    return total;
  };
  return go(0);
}

inline Integer young_rule_character(const Partition& lambda, const Partition& mu)
{
  const std::size_t m = lambda.length();
  if (m == 0)
    return mu.empty() ? 1 : 0;
  std::vector<int> perm(m);
  for (std::size_t i = 0; i < m; ++i)
    perm[i] = static_cast<int>(i);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (perm[i] > perm[j])
          ++inversions;
    std::vector<int> nu(m);
    for (std::size_t i = 0; i < m; ++i)
      nu[i] = lambda[i] - static_cast<int>(i) + perm[i];
    const Integer eta = tabloid_character(nu, mu.vec());
    total += (inversions % 2) ? Integer(-eta) : eta;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// ---- generators ------------------------------------------------------------

/// Deterministic generator seeded per test.
class Gen {
public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Random partition of n: repeatedly peel off a random part.
  Partition partition(int n, int min_part = 1)
  {
    std::vector<int> parts;
    int left = n;
    while (left > 0) {
      if (left < min_part) {
        if (parts.empty())
          break;
        parts.back() += left; // absorb the remainder
        break;
      }
      const int p = uniform(min_part, left);
      parts.push_back(p);
      left -= p;
    }
    return Partition(std::move(parts));
  }

  /// Partition with all parts >= 2 and weight exactly w (w != 1).
  Partition fixed_part(int w) { return partition(w, 2); }

  std::vector<Integer> integers(std::size_t count, long bound)
  {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < count; ++i)
      out.emplace_back(uniform(static_cast<int>(-bound), static_cast<int>(bound)));
    return out;
  }

private:
  std::mt19937 rng_;
};

} // namespace snchar::testing

#endif // SNCHAR_TESTS_SUPPORT_HPP
