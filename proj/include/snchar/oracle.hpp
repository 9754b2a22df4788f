#ifndef SNCHAR_ORACLE_HPP
#define SNCHAR_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "partition.hpp"

// Murnaghan-Nakayama rule, kept independent of the constant-term engine so
// that it can cross-check it.

namespace snchar {

/// chi^lambda(mu) by rim-hook removal.
///
/// lambda is held as a beta-set (first-column hook lengths). Removing a rim
/// hook of size k moves a bead from b to b-k onto an empty position; the
/// height sign is (-1)^{beads strictly between}. Parts of mu are consumed
/// largest first. The memo lives for this call only.
inline Integer mn_character(const Partition& lambda, const Partition& mu)
{
  if (lambda.weight() != mu.weight())
    throw domain_error("mn_character: |lambda|=" + std::to_string(lambda.weight()) + " but |mu|=" +
                       std::to_string(mu.weight()));
  const std::size_t len = lambda.length();
  std::vector<int> beads(len);
  for (std::size_t i = 0; i < len; ++i)
    beads[i] = lambda[i] + static_cast<int>(len - 1 - i);
  std::sort(beads.begin(), beads.end());

  const auto& parts = mu.vec();
  std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;

  std::function<Integer(const std::vector<int>&, std::size_t)> rec = [&](const std::vector<int>& set,
                                                                        std::size_t idx) -> Integer {
    if (idx == parts.size())
      return 1;
    auto key = std::make_pair(set, idx);
    if (auto it = memo.find(key); it != memo.end())
      return it->second;

    const int k = parts[idx];
    Integer total = 0;
    for (std::size_t b = 0; b < set.size(); ++b) {
      const int to = set[b] - k;
      if (to < 0 || std::binary_search(set.begin(), set.end(), to))
        continue;
      const auto first = std::upper_bound(set.begin(), set.end(), to);
      const auto between = (set.begin() + static_cast<std::ptrdiff_t>(b)) - first;
      std::vector<int> next = set;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(b));
      next.insert(std::upper_bound(next.begin(), next.end(), to), to);
      Integer sub = rec(next, idx + 1);
      if (between % 2)
        total -= sub;
      else
        total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
  };
  return rec(beads, 0);
}

/// sum over lambda |- |mu| with at most r rows of mn_character(lambda, mu)^s.
inline Integer sum_powers_brute(int r, int s, const Partition& mu)
{
  if (r < 1 || s < 1)
    throw domain_error("sum_powers_brute: r and s must be positive");
  Integer total = 0;
  for_each_partition(mu.weight(), r, [&](const Partition& lambda) {
    total += ipow(mn_character(lambda, mu), static_cast<unsigned long>(s));
  });
  return total;
}

} // namespace snchar

#endif // SNCHAR_ORACLE_HPP
