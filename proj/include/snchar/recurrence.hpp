#ifndef SNCHAR_RECURRENCE_HPP
#define SNCHAR_RECURRENCE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "polynomial.hpp"

namespace snchar {

struct SequenceTerm {
  long n = 0;
  Integer value;
};

using Sequence = std::vector<SequenceTerm>;

/// sum_{i=0}^{L} p_i(n) a(n+i) = 0
///
/// Normalized: integer coefficients with no common content, no common
/// polynomial factor where removing it keeps the fit, leading coefficient
/// of p_L positive.
struct Recurrence {
  int order = 0;
  int degree = 0;
  std::vector<IntPoly> coeffs; // p_0 .. p_L

  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

namespace detail {

inline void require_consecutive(const Sequence& terms)
{
  for (std::size_t k = 1; k < terms.size(); ++k)
    if (terms[k].n != terms[k - 1].n + 1)
      throw domain_error("sequence terms are not consecutive at n=" + std::to_string(terms[k].n));
}

inline int max_degree(const std::vector<IntPoly>& ps)
{
  int d = 0;
  for (const auto& p : ps)
    d = std::max(d, p.degree());
  return d;
}

/// Minimum holdout (terms never used for fitting) for a given (L, d).
inline std::size_t holdout_size(int order, int degree)
{
  return static_cast<std::size_t>(std::max(order + degree + 5, 8));
}

inline std::size_t terms_needed(int order, int degree)
{
  return static_cast<std::size_t>((order + 1) * (degree + 1) + order) + holdout_size(order, degree);
}

/// Basis of the right nullspace of `rows`, one vector per free column, via
/// reduced row echelon form over Q. Vectors are listed by free column.
inline std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, std::size_t cols)
{
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0)
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = Rational(1) / rows[r][c];
    for (std::size_t k = c; k < cols; ++k)
      rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0)
        continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k)
        rows[i][k] -= f * rows[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivot_col)
    is_pivot[c] = 1;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Recurrence from_kernel_vector(const std::vector<Rational>& v, int order, int degree)
{
  Integer l = 1;
  for (const auto& x : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<IntPoly> ps;
  for (int i = 0; i <= order; ++i) {
    std::vector<Integer> c;
    for (int k = 0; k <= degree; ++k)
      c.push_back(Rational(v[static_cast<std::size_t>(i * (degree + 1) + k)] * Rational(l)).get_num());
    ps.emplace_back(std::move(c));
  }
  return Recurrence{order, max_degree(ps), std::move(ps)};
}

/// Scales rational polynomials by one common factor so all become integral.
inline Recurrence common_scale(const std::vector<QPoly>& ps)
{
  Integer l = 1;
  for (const auto& p : ps)
    for (const auto& x : p.coeffs())
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<IntPoly> out;
  for (const auto& p : ps) {
    std::vector<Integer> c;
    for (const auto& x : p.coeffs())
      c.push_back(Rational(x * Rational(l)).get_num());
    out.emplace_back(std::move(c));
  }
  return Recurrence{static_cast<int>(out.size()) - 1, max_degree(out), std::move(out)};
}

} // namespace detail

/// Divides out the joint integer content and fixes the sign of lc(p_L).
inline Recurrence normalized(Recurrence rec)
{
  Integer g = 0;
  for (const auto& p : rec.coeffs) {
    const Integer c = content(p);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g == 0)
    throw domain_error("recurrence with all-zero coefficients");
  if (rec.coeffs.back().leading() < 0)
    g = -g;
  for (auto& p : rec.coeffs) {
    std::vector<Integer> c = p.coeffs();
    for (auto& x : c)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    p = IntPoly(std::move(c));
  }
  rec.order = static_cast<int>(rec.coeffs.size()) - 1;
  rec.degree = detail::max_degree(rec.coeffs);
  return rec;
}

/// True iff every window of L+1 consecutive terms is annihilated.
inline bool verify_recurrence(const Recurrence& rec, const Sequence& terms)
{
  detail::require_consecutive(terms);
  const auto L = static_cast<std::size_t>(rec.order);
  for (std::size_t k = 0; k + L < terms.size(); ++k) {
    const Integer n = terms[k].n;
    Integer s = 0;
    for (std::size_t i = 0; i <= L; ++i)
      s += rec.coeffs[i].eval(n) * terms[k + i].value;
    if (s != 0)
      return false;
  }
  return true;
}

/// Finds the (L, d)-lexicographically smallest recurrence fitting `terms`.
///
/// For each (L, d), all but the last holdout_size(L, d) terms are used to set
/// up the homogeneous system for the (L+1)(d+1) unknown coefficients; a
/// kernel vector is accepted only if the recurrence also annihilates the
/// held-out suffix. Returns nullopt when nothing within the bounds fits;
/// throws insufficient_terms_error when not even (1, 0) can be attempted.
inline std::optional<Recurrence> guess_recurrence(const Sequence& terms, int max_order, int max_degree)
{
  detail::require_consecutive(terms);
  if (terms.size() < detail::terms_needed(1, 0))
    throw insufficient_terms_error("guess_recurrence: need at least " + std::to_string(detail::terms_needed(1, 0)) +
                                   " terms, got " + std::to_string(terms.size()));

  for (int L = 1; L <= max_order; ++L) {
    for (int d = 0; d <= max_degree; ++d) {
      if (terms.size() < detail::terms_needed(L, d))
        continue;
      const std::size_t fit = terms.size() - detail::holdout_size(L, d);
      const std::size_t unknowns = static_cast<std::size_t>((L + 1) * (d + 1));
      std::vector<std::vector<Rational>> rows;
      for (std::size_t k = 0; k + static_cast<std::size_t>(L) < fit; ++k) {
        std::vector<Rational> row(unknowns);
        const Integer n = terms[k].n;
        for (int i = 0; i <= L; ++i) {
          Integer pw = 1;
          for (int e = 0; e <= d; ++e) {
            row[static_cast<std::size_t>(i * (d + 1) + e)] = Rational(pw * terms[k + static_cast<std::size_t>(i)].value);
            pw *= n;
          }
        }
        rows.push_back(std::move(row));
      }
      const auto basis = detail::nullspace(std::move(rows), unknowns);
      // prefer the vector pinned at the highest free column; it sets p_L when possible
      for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
        Recurrence cand = detail::from_kernel_vector(*it, L, d);
        if (cand.coeffs.back().is_zero())
          continue;
        cand = normalized(std::move(cand));
        if (!verify_recurrence(cand, terms))
          continue;

        QPoly g;
        for (const auto& p : cand.coeffs)
          g = gcd(g, to_qpoly(p));
        if (g.degree() > 0) {
          std::vector<QPoly> quotients;
          for (const auto& p : cand.coeffs)
            quotients.push_back(divmod(to_qpoly(p), g).first);
          Recurrence reduced = normalized(detail::common_scale(quotients));
          if (verify_recurrence(reduced, terms))
            cand = std::move(reduced);
        }
        return cand;
      }
    }
  }
  return std::nullopt;
}

/// Appends `count` terms after `seed` using the recurrence solved for a(n+L).
inline Sequence extend_sequence(const Recurrence& rec, const Sequence& seed, int count)
{
  detail::require_consecutive(seed);
  const auto L = static_cast<std::size_t>(rec.order);
  if (seed.size() < L)
    throw domain_error("extend_sequence: need at least " + std::to_string(L) + " seed terms");
  Sequence window(seed.end() - static_cast<std::ptrdiff_t>(L), seed.end());
  long next_n = seed.empty() ? 0 : seed.back().n + 1;
  Sequence out;
  for (int step = 0; step < count; ++step) {
    const Integer n = next_n - static_cast<long>(L);
    const Integer lead = rec.coeffs[L].eval(n);
    if (lead == 0)
      throw singular_point_error("leading coefficient vanishes at n=" + n.get_str());
    Integer s = 0;
    for (std::size_t i = 0; i < L; ++i)
      s += rec.coeffs[i].eval(n) * window[i].value;
    s = -s;
    if (!mpz_divisible_p(s.get_mpz_t(), lead.get_mpz_t()))
      throw inconsistency_error("recurrence step at n=" + std::to_string(next_n) + " is not integral");
    Integer v;
    mpz_divexact(v.get_mpz_t(), s.get_mpz_t(), lead.get_mpz_t());
    SequenceTerm t{next_n, v};
    out.push_back(t);
    if (L > 0) {
      window.erase(window.begin());
      window.push_back(std::move(t));
    }
    ++next_n;
  }
  return out;
}

/// "(-4*n - 2)*a(n) + (n + 2)*a(n+1) = 0"
inline std::string to_string(const Recurrence& rec)
{
  std::string s;
  for (std::size_t i = 0; i < rec.coeffs.size(); ++i) {
    if (rec.coeffs[i].is_zero())
      continue;
    if (!s.empty())
      s += " + ";
    s += "(" + to_string(rec.coeffs[i]) + ")*a(n" + (i ? "+" + std::to_string(i) : std::string()) + ")";
  }
  return s + " = 0";
}

} // namespace snchar

#endif // SNCHAR_RECURRENCE_HPP
