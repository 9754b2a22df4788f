#ifndef SNCHAR_CLI_HPP
#define SNCHAR_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "character.hpp"
#include "charsums.hpp"
#include "closedform.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "rational_function.hpp"
#include "recurrence.hpp"
#include "serialize.hpp"

// snchar char|f|sum|phi2|psi2|closedform|catalog|guess [flags]

namespace snchar::cli {

enum ExitCode : int {
  ok = 0,
  usage = 2,
  certification_failed = 3,
  guess_failed = 4,
  internal_mismatch = 5,
};

/// "7" or "3..9" (inclusive).
inline std::pair<int, int> parse_range(const std::string& text)
{
  const auto dots = text.find("..");
  auto num = [&](const std::string& s) {
    auto v = detail::parse_long(detail::trim(s));
    if (!v)
      throw parse_error("malformed range '" + text + "'");
    return static_cast<int>(*v);
  };
  if (dots == std::string::npos) {
    int v = num(text);
    return {v, v};
  }
  int lo = num(text.substr(0, dots));
  int hi = num(text.substr(dots + 2));
  if (hi < lo)
    throw parse_error("empty range '" + text + "'");
  return {lo, hi};
}

struct Options {
  std::string lambda, mu, mu0;
  std::string n = "";
  std::optional<int> rows, meta_rows, meta_cols;
  int power = 1;
  std::string engine = "ct";
  std::string format = "text";
  std::string out;
  std::string family = "rows_bounded";
  std::string kind;
  int max_weight = 8;
  int max_order = 8;
  int max_degree = 8;
};

inline SumRequest make_request(const Options& o, SumFamily family, int n)
{
  SumRequest req;
  req.family = family;
  req.rows = o.rows;
  req.meta_rows = o.meta_rows;
  req.meta_cols = o.meta_cols;
  req.power = o.power;
  req.mu0 = parse_partition(o.mu0);
  req.n = n;
  return req;
}

inline void print_table(std::ostream& out, const std::vector<std::pair<int, Integer>>& rows, bool as_json)
{
  if (as_json) {
    json arr = json::array();
    for (const auto& [n, v] : rows)
      arr.push_back(json{{"n", n}, {"value", to_json(v)}});
    out << arr.dump(2) << "\n";
    return;
  }
  for (const auto& [n, v] : rows)
    out << n << "\t" << v.get_str() << "\n";
}

inline int cmd_char(const Options& o, std::ostream& out, std::ostream& err)
{
  const Partition lambda = parse_partition(o.lambda);
  const Partition mu = parse_partition(o.mu);
  if (o.engine == "ct") {
    out << character_ct(lambda, mu).get_str() << "\n";
  } else if (o.engine == "mn") {
    out << mn_character(lambda, mu).get_str() << "\n";
  } else {
    const Integer a = character_ct(lambda, mu);
    const Integer b = mn_character(lambda, mu);
    out << "ct " << a.get_str() << "\n"
        << "mn " << b.get_str() << "\n";
    if (a != b) {
      err << "engine mismatch for lambda=(" << lambda.to_string() << ") mu=(" << mu.to_string() << ")\n";
      return internal_mismatch;
    }
  }
  return ok;
}

inline int cmd_sum(const Options& o, std::ostream& out)
{
  const SumFamily family = parse_sum_family(o.family);
  const auto [lo, hi] = parse_range(o.n);
  std::vector<std::pair<int, Integer>> rows;
  for (int n = lo; n <= hi; ++n)
    rows.emplace_back(n, power_sum(make_request(o, family, n)));
  print_table(out, rows, o.format == "json");
  return ok;
}

template <typename SquareSum>
int cmd_square_sum(const Options& o, std::ostream& out, SquareSum&& sum)
{
  const Partition mu0 = parse_partition(o.mu0);
  const auto [lo, hi] = parse_range(o.n);
  std::vector<std::pair<int, Integer>> rows;
  for (int n = lo; n <= hi; ++n)
    rows.emplace_back(n, sum(mu0, n));
  print_table(out, rows, o.format == "json");
  return ok;
}

inline int cmd_closedform(const Options& o, std::ostream& out)
{
  const CatalogEntry e = catalog_entry(o.kind, parse_partition(o.mu0));
  if (o.format == "json") {
    out << to_json(e).dump(2) << "\n";
  } else {
    out << format_closed_form(e.closed_form) << "\n";
    out << "factored: " << to_pretty_string(e.closed_form.factor) << " * " << to_string(e.closed_form.base) << "\n";
    out << "checked: n = " << e.checked.lo << ".." << e.checked.hi << "\n";
  }
  return ok;
}

inline int cmd_catalog(const Options& o, std::ostream& out, std::ostream& err)
{
  const std::string body = render_catalog(build_catalog(o.kind, o.max_weight), o.format == "json");
  if (o.out.empty() || o.out == "-") {
    out << body;
    return ok;
  }
  std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "cannot open '" << o.out << "' for writing\n";
    return usage;
  }
  file << body;
  if (!file.flush()) {
    err << "write to '" << o.out << "' failed\n";
    return usage;
  }
  return ok;
}

inline int cmd_guess(const Options& o, std::ostream& out, std::ostream& err)
{
  const SumFamily family = parse_sum_family(o.family);
  const int first = parse_partition(o.mu0).weight();
  const auto [lo, hi] = [&]() -> std::pair<int, int> {
    const auto r = parse_range(o.n.empty() ? "60" : o.n);
    // a single number is a term count starting at n = |mu0|
    return r.first == r.second ? std::pair{first, first + r.first - 1} : r;
  }();
  Sequence terms;
  for (int n = lo; n <= hi; ++n)
    terms.push_back({n, power_sum(make_request(o, family, n))});
  const auto rec = guess_recurrence(terms, o.max_order, o.max_degree);
  if (!rec) {
    err << "no recurrence with order <= " << o.max_order << " and degree <= " << o.max_degree << " fits n = " << lo
        << ".." << hi << "\n";
    return guess_failed;
  }
  const auto holdout = detail::holdout_size(rec->order, rec->degree);
  if (o.format == "json") {
    json j = to_json(*rec);
    j["terms"] = json::array({lo, hi});
    j["holdout"] = holdout;
    j["status"] = "empirically certified";
    out << j.dump(2) << "\n";
  } else {
    out << to_string(*rec) << "\n";
    out << "order " << rec->order << ", degree " << rec->degree << "; fitted on n = " << lo << ".."
        << hi - static_cast<long>(holdout) << ", held out " << holdout
        << " further terms; verified on all " << terms.size() << " terms (empirically certified)\n";
  }
  return ok;
}

/// Runs one command line. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
  CLI::App app{"Exact symmetric-group character sums and their closed forms", "snchar"};
  app.require_subcommand(1);
  Options o;

  auto* c_char = app.add_subcommand("char", "chi^lambda(mu)");
  c_char->add_option("--lambda", o.lambda, "shape, e.g. 3,1")->required();
  c_char->add_option("--mu", o.mu, "cycle type, e.g. 2,1,1")->required();
  c_char->add_option("--engine", o.engine, "ct | mn | both")->check(CLI::IsMember({"ct", "mn", "both"}));

  auto* c_f = app.add_subcommand("f", "number of standard Young tableaux");
  c_f->add_option("--lambda", o.lambda)->required();

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_mu0 = [&](CLI::App* c) { c->add_option("--mu0", o.mu0, "fixed part, all parts >= 2 (empty = 1^n)"); };

  auto* c_sum = app.add_subcommand("sum", "restricted sums of character powers, one line per n");
  c_sum->add_option("--family", o.family, "rows_bounded | hook | two_row | meta_hook | all_shapes");
  c_sum->add_option("--r", o.rows, "row bound (rows_bounded)");
  c_sum->add_option("--k", o.meta_rows, "meta-hook rows");
  c_sum->add_option("--l", o.meta_cols, "meta-hook columns");
  c_sum->add_option("--s,--power", o.power, "power");
  c_sum->add_option("--n", o.n, "n or lo..hi")->required();
  add_mu0(c_sum);
  add_format(c_sum);

  auto* c_phi = app.add_subcommand("phi2", "hook sum of squared characters");
  auto* c_psi = app.add_subcommand("psi2", "two-row sum of squared characters");
  for (auto* c : {c_phi, c_psi}) {
    c->add_option("--n", o.n, "n or lo..hi")->required();
    add_mu0(c);
    add_format(c);
  }

  auto* c_cf = app.add_subcommand("closedform", "derive and certify a closed form");
  c_cf->add_option("kind", o.kind, "phi2 | psi2")->required()->check(CLI::IsMember({"phi2", "psi2"}));
  add_mu0(c_cf);
  add_format(c_cf);

  auto* c_cat = app.add_subcommand("catalog", "closed forms for every mu0 up to a weight");
  c_cat->add_option("kind", o.kind, "phi2 | psi2")->required()->check(CLI::IsMember({"phi2", "psi2"}));
  c_cat->add_option("--max-weight", o.max_weight, "largest |mu0| (default 8)")->check(CLI::NonNegativeNumber);
  c_cat->add_option("--out", o.out, "output file (default stdout)");
  add_format(c_cat);

  auto* c_guess = app.add_subcommand("guess", "guess a P-recurrence for a restricted sum");
  c_guess->add_option("--family", o.family);
  c_guess->add_option("--r", o.rows);
  c_guess->add_option("--k", o.meta_rows);
  c_guess->add_option("--l", o.meta_cols);
  c_guess->add_option("--s,--power", o.power);
  c_guess->add_option("--n", o.n, "number of terms (from n=|mu0|, default 60) or lo..hi");
  c_guess->add_option("--max-order", o.max_order);
  c_guess->add_option("--max-degree", o.max_degree);
  add_mu0(c_guess);
  add_format(c_guess);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return usage;
  }

  try {
    if (c_char->parsed())
      return cmd_char(o, out, err);
    if (c_f->parsed()) {
      out << f_lambda(parse_partition(o.lambda)).get_str() << "\n";
      return ok;
    }
    if (c_sum->parsed())
      return cmd_sum(o, out);
    if (c_phi->parsed())
      return cmd_square_sum(o, out, [](const Partition& m, int n) { return phi2(m, n); });
    if (c_psi->parsed())
      return cmd_square_sum(o, out, [](const Partition& m, int n) { return psi2(m, n); });
    if (c_cf->parsed())
      return cmd_closedform(o, out);
    if (c_cat->parsed())
      return cmd_catalog(o, out, err);
    if (c_guess->parsed())
      return cmd_guess(o, out, err);
  } catch (const certification_error& e) {
    err << "certification failed: " << e.what() << "\n";
    return certification_failed;
  } catch (const inconsistency_error& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return internal_mismatch;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return usage;
  } catch (const std::domain_error& e) {
    err << e.what() << "\n";
    return usage;
  }
  return usage;
}

} // namespace snchar::cli

#endif // SNCHAR_CLI_HPP
