#ifndef SNCHAR_SERIALIZE_HPP
#define SNCHAR_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "bigint.hpp"
#include "closedform.hpp"
#include "partition.hpp"
#include "polynomial.hpp"
#include "recurrence.hpp"

namespace snchar {

using json = nlohmann::ordered_json;

/// JSON integer when the value fits in 64 bits, otherwise its decimal string.
inline json to_json(const Integer& z)
{
  if (mpz_fits_slong_p(z.get_mpz_t()))
    return json(static_cast<long long>(z.get_si()));
  return json(z.get_str());
}

/// Coefficients low to high.
inline json to_json(const IntPoly& p)
{
  json arr = json::array();
  for (const auto& c : p.coeffs())
    arr.push_back(to_json(c));
  if (arr.empty())
    arr.push_back(0);
  return arr;
}

inline json to_json(const Partition& p)
{
  json arr = json::array();
  for (int v : p.parts())
    arr.push_back(v);
  return arr;
}

inline json closed_form_json(const ClosedForm& cf)
{
  return json{{"num", to_json(cf.factor.numerator())},
              {"den", to_json(cf.factor.denominator())},
              {"base", to_string(cf.base)},
              {"valid_from", cf.valid_from}};
}

inline json to_json(const Recurrence& rec)
{
  json coeffs = json::array();
  for (const auto& p : rec.coeffs)
    coeffs.push_back(to_json(p));
  return json{{"order", rec.order}, {"degree", rec.degree}, {"coefficients", coeffs}};
}

/// One certified closed form, as listed in a catalog.
struct CatalogEntry {
  std::string kind; // "phi2" or "psi2"
  Partition mu0;
  ClosedForm closed_form;
  CertificationWindow checked;
};

inline json to_json(const CatalogEntry& e)
{
  return json{{"kind", e.kind},
              {"mu0", to_json(e.mu0)},
              {"formula", closed_form_json(e.closed_form)},
              {"certified_range", json::array({e.checked.lo, e.checked.hi})}};
}

/// `<kind> | mu0=<parts> | R(n) = <num>/<den> | base=<base> | valid_from=<n0> | checked=<lo>..<hi>`
inline std::string to_catalog_line(const CatalogEntry& e)
{
  return e.kind + " | mu0=" + e.mu0.to_string() + " | R(n) = " + to_string(e.closed_form.factor) +
         " | base=" + to_string(e.closed_form.base) + " | valid_from=" + std::to_string(e.closed_form.valid_from) +
         " | checked=" + std::to_string(e.checked.lo) + ".." + std::to_string(e.checked.hi);
}

/// Partitions with all parts >= 2 and weight <= max_weight, by weight, then
/// reverse-lexicographic within a weight.
inline std::vector<Partition> catalog_shapes(int max_weight)
{
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w)
    for_each_partition(w, std::nullopt, [&](const Partition& p) {
      if (p.empty() || p.smallest_part() >= 2)
        out.push_back(p);
    });
  return out;
}

inline CatalogEntry catalog_entry(const std::string& kind, const Partition& mu0)
{
  ClosedForm cf;
  if (kind == "phi2")
    cf = derive_phi2(mu0);
  else if (kind == "psi2")
    cf = derive_psi2(mu0);
  else
    throw parse_error("unknown closed-form kind '" + kind + "'");
  return CatalogEntry{kind, mu0, cf, certification_window(cf, mu0)};
}

inline std::vector<CatalogEntry> build_catalog(const std::string& kind, int max_weight)
{
  if (max_weight < 0)
    throw domain_error("max_weight must be >= 0");
  std::vector<CatalogEntry> out;
  for (const auto& mu0 : catalog_shapes(max_weight))
    out.push_back(catalog_entry(kind, mu0));
  return out;
}

inline std::string render_catalog(const std::vector<CatalogEntry>& entries, bool as_json)
{
  if (as_json) {
    json arr = json::array();
    for (const auto& e : entries)
      arr.push_back(to_json(e));
    return arr.dump(2) + "\n";
  }
  std::string s;
  for (const auto& e : entries)
    s += to_catalog_line(e) + "\n";
  return s;
}

} // namespace snchar

#endif // SNCHAR_SERIALIZE_HPP
