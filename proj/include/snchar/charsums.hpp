#ifndef SNCHAR_CHARSUMS_HPP
#define SNCHAR_CHARSUMS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "character.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "partition.hpp"

namespace snchar {

enum class SumFamily { rows_bounded, hook, two_row, meta_hook, all_shapes };

inline std::string to_string(SumFamily f)
{
  switch (f) {
  case SumFamily::rows_bounded: return "rows_bounded";
  case SumFamily::hook: return "hook";
  case SumFamily::two_row: return "two_row";
  case SumFamily::meta_hook: return "meta_hook";
  case SumFamily::all_shapes: return "all_shapes";
  }
  return "?";
}

inline SumFamily parse_sum_family(const std::string& s)
{
  if (s == "rows_bounded") return SumFamily::rows_bounded;
  if (s == "hook") return SumFamily::hook;
  if (s == "two_row") return SumFamily::two_row;
  if (s == "meta_hook") return SumFamily::meta_hook;
  if (s == "all_shapes") return SumFamily::all_shapes;
  throw parse_error("unknown sum family '" + s + "'");
}

/// sum over a shape family of chi^lambda(mu0 1^{n-|mu0|})^s.
/// `rows` (r) is used by rows_bounded only, `meta_rows`/`meta_cols` (k, l) by meta_hook only.
struct SumRequest {
  SumFamily family = SumFamily::all_shapes;
  std::optional<int> rows;
  std::optional<int> meta_rows;
  std::optional<int> meta_cols;
  int power = 1;
  Partition mu0;
  int n = 0;
};

inline void validate(const SumRequest& req)
{
  if (req.power < 1)
    throw domain_error("power s must be >= 1");
  require_no_unit_parts(req.mu0);
  if (req.n < req.mu0.weight())
    throw domain_error("n=" + std::to_string(req.n) + " is below |mu0|=" + std::to_string(req.mu0.weight()));
  const bool wants_rows = req.family == SumFamily::rows_bounded;
  const bool wants_meta = req.family == SumFamily::meta_hook;
  if (wants_rows != req.rows.has_value())
    throw domain_error(wants_rows ? "rows_bounded needs r" : "r is only meaningful for rows_bounded");
  if (wants_rows && *req.rows < 1)
    throw domain_error("r must be >= 1");
  if (wants_meta != (req.meta_rows.has_value() && req.meta_cols.has_value()) ||
      (!wants_meta && (req.meta_rows || req.meta_cols)))
    throw domain_error(wants_meta ? "meta_hook needs k and l" : "k, l are only meaningful for meta_hook");
  if (wants_meta && (*req.meta_rows < 0 || *req.meta_cols < 0))
    throw domain_error("k and l must be >= 0");
}

/// Shapes with at most this many rows (or columns, via conjugation) are
/// evaluated by constant-term extraction; the expansion grows roughly like
/// 2^rows for hooks, so taller and wider shapes go to rim-hook removal.
inline constexpr std::size_t kConstantTermMaxRows = 8;

/// chi^lambda(mu0 1^{|lambda|-|mu0|}).
inline Integer shape_character(const Partition& lambda, const Partition& mu0)
{
  if (lambda.length() <= kConstantTermMaxRows)
    return character_padded(lambda, mu0);
  if (static_cast<std::size_t>(lambda[0]) <= kConstantTermMaxRows) {
    // chi^{lambda'}(mu) = sgn(mu) chi^lambda(mu), sgn(mu) = (-1)^{n - length(mu)}
    const int n = lambda.weight();
    const int cycles = static_cast<int>(mu0.length()) + (n - mu0.weight());
    Integer v = character_padded(conjugate(lambda), mu0);
    return (n - cycles) % 2 ? Integer(-v) : v;
  }
  return mn_character(lambda, pad_with_ones(mu0, lambda.weight()));
}

/// Hook shapes (j, 1^{n-j}) for j = n down to 1; n = 0 gives the empty shape.
template <typename Visitor>
void for_each_hook(int n, Visitor&& visit)
{
  if (n == 0) {
    visit(Partition{});
    return;
  }
  for (int j = n; j >= 1; --j) {
    std::vector<int> parts(static_cast<std::size_t>(n - j + 1), 1);
    parts[0] = j;
    visit(Partition(std::move(parts)));
  }
}

template <typename Visitor>
void for_each_shape_in_family(const SumRequest& req, Visitor&& visit)
{
  switch (req.family) {
  case SumFamily::rows_bounded:
    for_each_partition(req.n, *req.rows, visit);
    break;
  case SumFamily::two_row:
    for_each_partition(req.n, 2, visit);
    break;
  case SumFamily::hook:
    for_each_hook(req.n, visit);
    break;
  case SumFamily::meta_hook:
    for_each_partition(req.n, std::nullopt, [&](const Partition& lambda) {
      if (in_meta_hook(lambda, *req.meta_rows, *req.meta_cols))
        visit(lambda);
    });
    break;
  case SumFamily::all_shapes:
    for_each_partition(req.n, std::nullopt, visit);
    break;
  }
}

inline Integer power_sum(const SumRequest& req)
{
  validate(req);
  Integer total = 0;
  for_each_shape_in_family(req, [&](const Partition& lambda) {
    total += ipow(shape_character(lambda, req.mu0), static_cast<unsigned long>(req.power));
  });
  return total;
}

namespace detail {
inline void require_square_sum_domain(const Partition& mu0, int n, int min_n, const char* who)
{
  require_no_unit_parts(mu0);
  if (n < min_n || n < mu0.weight())
    throw domain_error(std::string(who) + ": need n >= max(" + std::to_string(min_n) + ", |mu0|), got n=" +
                       std::to_string(n));
}
} // namespace detail

/// sum_{j=1}^{n} chi^{(j,1^{n-j})}(mu0 1^{n-|mu0|})^2
inline Integer phi2(const Partition& mu0, int n)
{
  detail::require_square_sum_domain(mu0, n, 1, "phi2");
  SumRequest req{SumFamily::hook, std::nullopt, std::nullopt, std::nullopt, 2, mu0, n};
  return power_sum(req);
}

/// sum_{j=0}^{floor(n/2)} chi^{(n-j,j)}(mu0 1^{n-|mu0|})^2; psi2((), 0) = 1.
inline Integer psi2(const Partition& mu0, int n)
{
  detail::require_square_sum_domain(mu0, n, 0, "psi2");
  SumRequest req{SumFamily::two_row, std::nullopt, std::nullopt, std::nullopt, 2, mu0, n};
  return power_sum(req);
}

/// Nonzero coefficients (j, c_j) of x (1+x)^{n-1-|mu0|} prod_i (x^{a_i} - (-1)^{a_i}),
/// ascending in j. c_j is the hook character chi^{(j,1^{n-j})}(mu0 1^{n-|mu0|}).
inline std::vector<std::pair<int, Integer>> hook_gf_coeffs(const Partition& mu0, int n)
{
  require_no_unit_parts(mu0);
  const int free_cells = n - 1 - mu0.weight();
  if (free_cells < 0)
    throw domain_error("hook_gf_coeffs: need n >= |mu0| + 1, got n=" + std::to_string(n));

  std::vector<Integer> poly{0, 1};
  auto times = [&](const std::vector<Integer>& f) {
    std::vector<Integer> r(poly.size() + f.size() - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      if (poly[i] != 0)
        for (std::size_t k = 0; k < f.size(); ++k)
          r[i + k] += poly[i] * f[k];
    poly = std::move(r);
  };
  for (int i = 0; i < free_cells; ++i)
    times({1, 1});
  for (int a : mu0.parts()) {
    std::vector<Integer> f(static_cast<std::size_t>(a) + 1, 0);
    f[0] = (a % 2) ? 1 : -1;
    f[static_cast<std::size_t>(a)] = 1;
    times(f);
  }
  std::vector<std::pair<int, Integer>> out;
  for (std::size_t j = 0; j < poly.size(); ++j)
    if (poly[j] != 0)
      out.emplace_back(static_cast<int>(j), poly[j]);
  return out;
}

} // namespace snchar

#endif // SNCHAR_CHARSUMS_HPP
