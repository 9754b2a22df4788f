#ifndef SNCHAR_CHARACTER_HPP
#define SNCHAR_CHARACTER_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "partition.hpp"

// Characters of S_n as constant terms:
//
//   chi^lambda(mu) = [x^lambda]  prod_{i<j} (1 - x_j/x_i) * prod_k p_{mu_k}(x_1..x_m)
//
// with p_a the power sum x_1^a + ... + x_m^a and m >= length(lambda).

namespace snchar {

/// Terms of prod_{0<=i<j<m} (1 - x_j/x_i) whose exponent lies in `window`.
///
/// The product equals x^{-rho} det(x_i^{rho_j}), rho = (m-1, ..., 0), so its
/// monomials are x^{e} with e_i = i - pi(i) and coefficient sgn(pi) for each
/// permutation pi. They are enumerated depth-first with per-position bounds
/// instead of multiplying out the m(m-1)/2 binomial factors.
inline LaurentPoly vandermonde_expansion(std::size_t m, const ExponentWindow* window = nullptr)
{
  LaurentPoly out(m);
  if (m == 0) {
    out.add_term({}, 1);
    return out;
  }
  std::vector<char> used(m, 0);
  Exponent e(m, 0);
  const int mi = static_cast<int>(m);

  std::function<void(int, bool)> place = [&](int pos, bool odd) {
    if (pos == mi) {
      out.add_term(e, odd ? -1 : 1);
      return;
    }
    int smaller_unused = 0;
    for (int col = 0; col < mi; ++col) {
      if (used[static_cast<std::size_t>(col)])
        continue;
      const int shift = pos - col;
      const bool ok = !window || (shift >= window->lo[static_cast<std::size_t>(pos)] &&
                                  shift <= window->hi[static_cast<std::size_t>(pos)]);
      if (ok) {
        used[static_cast<std::size_t>(col)] = 1;
        e[static_cast<std::size_t>(pos)] = shift;
        place(pos + 1, odd != (smaller_unused % 2 == 1));
        used[static_cast<std::size_t>(col)] = 0;
      }
      ++smaller_unused;
    }
  };
  place(0, false);
  return out;
}

/// prod_{i<j}(1 - x_j/x_i) * prod_k p_{parts_k} in m variables.
///
/// When `target` is given, terms that cannot end inside it are dropped at
/// every stage: the factors still to be multiplied are power sums, which add
/// between 0 and their remaining total degree to each variable. Power sums
/// are folded in decreasing part size.
inline LaurentPoly expand_prefactor(std::size_t m, std::vector<int> parts, const ExponentWindow* target = nullptr)
{
  std::sort(parts.begin(), parts.end(), std::greater<>());
  int remaining = std::accumulate(parts.begin(), parts.end(), 0);

  auto stage_window = [&](int still_to_add) {
    ExponentWindow w{target->lo, target->hi};
    for (auto& lo : w.lo)
      lo -= still_to_add;
    return w;
  };

  LaurentPoly acc(m);
  if (target) {
    ExponentWindow w = stage_window(remaining);
    acc = vandermonde_expansion(m, &w);
  } else {
    acc = vandermonde_expansion(m);
  }
  for (int part : parts) {
    remaining -= part;
    if (target) {
      ExponentWindow w = stage_window(remaining);
      acc = multiply(acc, power_sum_poly(m, part), &w);
    } else {
      acc = multiply(acc, power_sum_poly(m, part));
    }
    if (acc.is_zero())
      break;
  }
  return acc;
}

/// chi^lambda(mu) by coefficient extraction. `num_vars` = 0 means length(lambda);
/// a larger value pads lambda with zero rows.
inline Integer character_ct(const Partition& lambda, const Partition& mu, std::size_t num_vars = 0)
{
  if (lambda.weight() != mu.weight())
    throw domain_error("character: |lambda|=" + std::to_string(lambda.weight()) + " but |mu|=" +
                       std::to_string(mu.weight()));
  const std::size_t m = num_vars == 0 ? lambda.length() : num_vars;
  if (m < lambda.length())
    throw domain_error("character: fewer variables than rows of lambda");
  if (m == 0)
    return 1;
  Exponent target(m);
  for (std::size_t v = 0; v < m; ++v)
    target[v] = lambda[v];
  ExponentWindow w{target, target};
  return expand_prefactor(m, mu.vec(), &w).coefficient(target);
}

/// chi^lambda(mu0 1^{n-|mu0|}), n = |lambda|, without expanding (x_1+...+x_m)^{n-|mu0|}:
/// every prefactor monomial x^e contributes coeff * (n-|mu0|)! / prod_i (lambda_i - e_i)!.
inline Integer character_padded(const Partition& lambda, const Partition& mu0)
{
  require_no_unit_parts(mu0);
  const int n = lambda.weight();
  const int free_cells = n - mu0.weight();
  if (free_cells < 0)
    throw domain_error("character_padded: |mu0|=" + std::to_string(mu0.weight()) + " exceeds |lambda|=" +
                       std::to_string(n));
  const std::size_t m = lambda.length();
  if (m == 0)
    return 1;

  ExponentWindow w{Exponent(m), Exponent(m)};
  for (std::size_t v = 0; v < m; ++v) {
    w.hi[v] = lambda[v];
    w.lo[v] = lambda[v] - free_cells;
  }
  const LaurentPoly pre = expand_prefactor(m, mu0.vec(), &w);

  std::vector<Integer> fact(static_cast<std::size_t>(free_cells) + 1);
  fact[0] = 1;
  for (int k = 1; k <= free_cells; ++k)
    fact[static_cast<std::size_t>(k)] = fact[static_cast<std::size_t>(k - 1)] * k;

  Integer total = 0;
  for (const auto& [e, c] : pre) {
    Integer denom = 1;
    int residual_sum = 0;
    for (std::size_t v = 0; v < m; ++v) {
      const int r = lambda[v] - e[v];
      residual_sum += r;
      denom *= fact[static_cast<std::size_t>(r)];
    }
    if (residual_sum != free_cells)
      continue;
    Integer q;
    mpz_divexact(q.get_mpz_t(), fact[static_cast<std::size_t>(free_cells)].get_mpz_t(), denom.get_mpz_t());
    total += c * q;
  }
  return total;
}

} // namespace snchar

#endif // SNCHAR_CHARACTER_HPP
