#ifndef SNCHAR_LAURENT_HPP
#define SNCHAR_LAURENT_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace snchar {

using Exponent = std::vector<int>;

/// Per-variable inclusive exponent bounds. Terms of a product falling
/// outside the box are discarded by `multiply`.
struct ExponentWindow {
  Exponent lo;
  Exponent hi;

  bool contains(const Exponent& e) const
  {
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] < lo[v] || e[v] > hi[v])
        return false;
    return true;
  }
};

/// Sparse Laurent polynomial in a fixed number of variables with
/// arbitrary-precision integer coefficients. Zero coefficients are never stored.
class LaurentPoly {
public:
  using Terms = std::map<Exponent, Integer>;

  explicit LaurentPoly(std::size_t num_vars = 0) : nvars_(num_vars) {}

  static LaurentPoly constant(std::size_t num_vars, const Integer& c)
  {
    LaurentPoly p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
  }

  static LaurentPoly monomial(std::size_t num_vars, Exponent e, const Integer& c = 1)
  {
    LaurentPoly p(num_vars);
    p.add_term(std::move(e), c);
    return p;
  }

  std::size_t num_vars() const { return nvars_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  void add_term(Exponent e, const Integer& c)
  {
    if (e.size() != nvars_)
      throw domain_error("exponent vector has " + std::to_string(e.size()) + " entries, expected " +
                         std::to_string(nvars_));
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  Integer coefficient(const Exponent& e) const
  {
    if (e.size() != nvars_)
      throw domain_error("coefficient: exponent length mismatch");
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  LaurentPoly operator-() const
  {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_)
      c = -c;
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
  {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

private:
  std::size_t nvars_;
  Terms terms_;
};

inline void require_same_vars(const LaurentPoly& p, const LaurentPoly& q)
{
  if (p.num_vars() != q.num_vars())
    throw domain_error("variable count mismatch: " + std::to_string(p.num_vars()) + " vs " +
                       std::to_string(q.num_vars()));
}

inline LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q)
{
  require_same_vars(p, q);
  LaurentPoly r = p;
  for (const auto& [e, c] : q)
    r.add_term(e, c);
  return r;
}

/// Exact product. With a window, only product terms inside it are kept.
inline LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q, const ExponentWindow* prune = nullptr)
{
  require_same_vars(p, q);
  const std::size_t m = p.num_vars();
  if (prune && (prune->lo.size() != m || prune->hi.size() != m))
    throw domain_error("prune window length mismatch");
  LaurentPoly r(m);
  Exponent e(m);
  for (const auto& [ep, cp] : p) {
    for (const auto& [eq, cq] : q) {
      for (std::size_t v = 0; v < m; ++v)
        e[v] = ep[v] + eq[v];
      if (prune && !prune->contains(e))
        continue;
      r.add_term(e, cp * cq);
    }
  }
  return r;
}

inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) { return add(p, q); }
inline LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return add(p, -q); }
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return multiply(p, q); }

inline Integer coefficient(const LaurentPoly& p, const Exponent& e) { return p.coefficient(e); }

inline Integer constant_term(const LaurentPoly& p) { return p.coefficient(Exponent(p.num_vars(), 0)); }

/// x_1^k + ... + x_m^k
inline LaurentPoly power_sum_poly(std::size_t m, int k)
{
  LaurentPoly p(m);
  for (std::size_t v = 0; v < m; ++v) {
    Exponent e(m, 0);
    e[v] = k;
    p.add_term(std::move(e), 1);
  }
  return p;
}

/// 1 - x_j / x_i (0-based variable indices).
inline LaurentPoly vandermonde_ratio_factor(std::size_t m, std::size_t i, std::size_t j)
{
  LaurentPoly p = LaurentPoly::constant(m, 1);
  Exponent e(m, 0);
  e[i] = -1;
  e[j] = 1;
  p.add_term(std::move(e), -1);
  return p;
}

} // namespace snchar

#endif // SNCHAR_LAURENT_HPP
