#ifndef SNCHAR_PARTITION_HPP
#define SNCHAR_PARTITION_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace snchar {

/// An integer partition: strictly positive parts in non-increasing order.
///
/// Used both for shapes (lambda) and for cycle types (mu). Parts are stored
/// without trailing zeros; code that needs a fixed number of rows pads locally.
class Partition {
public:
  Partition() = default;

  /// Sorts `parts` into non-increasing order. Throws domain_error on a part <= 0.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
  {
    for (int p : parts_)
      if (p <= 0)
        throw domain_error("non-positive part " + std::to_string(p));
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Part i (0-based); 0 past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  int smallest_part() const { return parts_.empty() ? 0 : parts_.back(); }

  /// Comma form, e.g. "3,2,1"; the empty partition prints as "".
  std::string to_string() const
  {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Frequency notation 1^{a_1} 2^{a_2} ...; only positive counts are stored.
class CycleType {
public:
  CycleType() = default;

  explicit CycleType(const Partition& mu)
  {
    for (int p : mu.parts())
      ++mult_[p];
  }

  explicit CycleType(std::map<int, int> multiplicities)
  {
    for (auto [part, count] : multiplicities) {
      if (part <= 0 || count < 0)
        throw domain_error("invalid multiplicity " + std::to_string(part) + "^" + std::to_string(count));
      if (count > 0)
        mult_[part] = count;
    }
  }

  const std::map<int, int>& multiplicities() const { return mult_; }

  int multiplicity(int part) const
  {
    auto it = mult_.find(part);
    return it == mult_.end() ? 0 : it->second;
  }

  Partition to_partition() const
  {
    std::vector<int> parts;
    for (auto [part, count] : mult_)
      parts.insert(parts.end(), static_cast<std::size_t>(count), part);
    return Partition(std::move(parts));
  }

private:
  std::map<int, int> mult_;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline std::optional<long> parse_long(std::string_view s)
{
  if (s.empty())
    return std::nullopt;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size())
    return std::nullopt;
  long v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return std::nullopt;
    v = v * 10 + (s[i] - '0');
    if (v > 1000000000L)
      return std::nullopt;
  }
  return neg ? -v : v;
}

inline int parse_part(std::string_view token)
{
  auto v = parse_long(trim(token));
  if (!v)
    throw parse_error("malformed token '" + std::string(token) + "'");
  if (*v <= 0)
    throw parse_error("non-positive part '" + std::string(trim(token)) + "'");
  return static_cast<int>(*v);
}

} // namespace detail

/// Reads "3,2,1" or frequency form "3^1 2^1 1^1". "" and "()" give the empty partition.
inline Partition parse_partition(std::string_view text)
{
  text = detail::trim(text);
  if (text.empty() || text == "()")
    return Partition{};
  if (text.front() == '(' && text.back() == ')')
    text = detail::trim(text.substr(1, text.size() - 2));

  std::vector<int> parts;
  if (text.find('^') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (pos == text.size())
        break;
      std::size_t end = pos;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
        ++end;
      std::string_view token = text.substr(pos, end - pos);
      auto caret = token.find('^');
      if (caret == std::string_view::npos)
        throw parse_error("malformed token '" + std::string(token) + "'");
      int part = detail::parse_part(token.substr(0, caret));
      auto count = detail::parse_long(token.substr(caret + 1));
      if (!count || *count < 0)
        throw parse_error("malformed token '" + std::string(token) + "'");
      parts.insert(parts.end(), static_cast<std::size_t>(*count), part);
      pos = end;
    }
  } else {
    std::size_t pos = 0;
    while (true) {
      auto comma = text.find(',', pos);
      std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
      parts.push_back(detail::parse_part(token));
      if (comma == std::string_view::npos)
        break;
      pos = comma + 1;
    }
  }
  return Partition(std::move(parts));
}

/// Calls `visit(const Partition&)` for every partition of n with at most
/// `max_parts` parts, in reverse-lexicographic order. n = 0 yields ().
template <typename Visitor>
void for_each_partition(int n, std::optional<int> max_parts, Visitor&& visit)
{
  if (n < 0)
    throw domain_error("partitions_of: negative n");
  int rows = max_parts ? *max_parts : n;
  if (n == 0) {
    visit(Partition{});
    return;
  }
  if (rows <= 0)
    return;
  std::vector<int> current;
  current.reserve(static_cast<std::size_t>(std::min(n, rows)));
  std::function<void(int, int, int)> rec = [&](int remaining, int cap, int slots) {
    if (remaining == 0) {
      visit(Partition(current));
      return;
    }
    if (slots == 0)
      return;
    int lowest = (remaining + slots - 1) / slots;
    for (int p = std::min(remaining, cap); p >= lowest; --p) {
      current.push_back(p);
      rec(remaining - p, p, slots - 1);
      current.pop_back();
    }
  };
  rec(n, n, rows);
}

inline std::vector<Partition> partitions_of(int n, std::optional<int> max_parts = std::nullopt)
{
  std::vector<Partition> out;
  for_each_partition(n, max_parts, [&](const Partition& p) { out.push_back(p); });
  return out;
}

inline Partition conjugate(const Partition& lambda)
{
  std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
  for (int row : lambda.parts())
    for (int c = 0; c < row; ++c)
      ++cols[static_cast<std::size_t>(c)];
  return Partition(std::move(cols));
}

/// Number of standard Young tableaux, by the Young-Frobenius product
///   n! * prod_{i<j} (l_i - l_j) / prod_i l_i!,   l_i = lambda_i + r - i.
/// l_1 <= n always, so n!/l_1! is taken as a falling product first.
inline Integer f_lambda(const Partition& lambda)
{
  const auto r = static_cast<int>(lambda.length());
  if (r == 0)
    return 1;
  std::vector<long> l(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    l[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + r - 1 - i;

  Integer num = 1;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      num *= l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)];
  for (long k = l[0] + 1; k <= lambda.weight(); ++k)
    num *= k;
  Integer den = 1;
  for (int i = 1; i < r; ++i)
    den *= factorial(static_cast<unsigned long>(l[static_cast<std::size_t>(i)]));
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

/// prod_i i^{a_i} a_i!
inline Integer centralizer_order(const CycleType& mu)
{
  Integer r = 1;
  for (auto [part, count] : mu.multiplicities())
    r *= ipow(part, static_cast<unsigned long>(count)) * factorial(static_cast<unsigned long>(count));
  return r;
}

inline Integer centralizer_order(const Partition& mu) { return centralizer_order(CycleType(mu)); }

/// Throws unless every part of mu0 is at least 2.
inline void require_no_unit_parts(const Partition& mu0)
{
  if (!mu0.empty() && mu0.smallest_part() < 2)
    throw domain_error("mu0 must have all parts >= 2, got (" + mu0.to_string() + ")");
}

/// mu0 followed by n - |mu0| ones.
inline Partition pad_with_ones(const Partition& mu0, int n)
{
  require_no_unit_parts(mu0);
  if (n < mu0.weight())
    throw domain_error("pad_with_ones: n=" + std::to_string(n) + " is below |mu0|=" + std::to_string(mu0.weight()));
  std::vector<int> parts = mu0.vec();
  parts.insert(parts.end(), static_cast<std::size_t>(n - mu0.weight()), 1);
  return Partition(std::move(parts));
}

/// True iff lambda has no cell at (row k+1, column l+1).
inline bool in_meta_hook(const Partition& lambda, int k, int l)
{
  if (k < 0 || l < 0)
    throw domain_error("in_meta_hook: negative bound");
  return lambda[static_cast<std::size_t>(k)] <= l;
}

inline bool is_hook(const Partition& lambda) { return in_meta_hook(lambda, 1, 1); }

} // namespace snchar

#endif // SNCHAR_PARTITION_HPP
