// Command-line interface: reverse machines, print the result tables, apply
// the closed-form size formulas, and run brute-force or random searches.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "revsc/complexity.hpp"
#include "revsc/dfao.hpp"
#include "revsc/monoid.hpp"
#include "revsc/search.hpp"

using json = nlohmann::ordered_json;
using namespace revsc;

namespace {

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text, const char* flag) {
  const auto dash = text.find('-');
  try {
    if (dash == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    const int lo = std::stoi(text.substr(0, dash));
    const int hi = std::stoi(text.substr(dash + 1));
    if (lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(flag) +
                                " expects a value 'a' or a range 'a-b', got '" +
                                text + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << content;
}

json int_array(const Transformation& t) {
  json a = json::array();
  for (int q = 1; q <= t.degree(); ++q) a.push_back(t(q));
  return a;
}

json int_array(const OutputMap& f) {
  json a = json::array();
  for (int q = 1; q <= f.degree(); ++q) a.push_back(f(q));
  return a;
}

// ---- reverse -------------------------------------------------------------

int cmd_reverse(const std::string& input, std::optional<std::string> output) {
  Dfao d = parse_dfao(read_file(input));
  const int original = d.state_count();
  if (!d.is_trim()) {
    d = trim(d);
    std::cerr << "notice: input machine is not trim; using its reachable part ("
              << original << " -> " << d.state_count() << " states)\n";
  }
  const auto rev = reverse(d);
  const std::string out_path = output.value_or(input + ".rev");
  write_file(out_path, format_dfao(rev.machine()));
  std::cout << "input states: " << d.state_count() << "\n"
            << "reversal states: " << rev.machine().state_count() << "\n"
            << "wrote: " << out_path << "\n";
  return 0;
}

// ---- tables ---------------------------------------------------------------

std::uint64_t m2_value(int n) {
  if (n <= 6) {
    const auto [alpha, beta] = v_n_generators(n);
    return close({Transformation(alpha), beta}).size();
  }
  // Degree 7: the best 2-generated monoids are U_{2,5} and U_{3,4}.
  return std::max(u_lm_size(2, 5), u_lm_size(3, 4));
}

int cmd_table1(Range nr, const std::string& format) {
  nr.lo = std::max(nr.lo, 2);
  nr.hi = std::min(nr.hi, 7);
  if (nr.lo > nr.hi) throw std::invalid_argument("table 1 covers n = 2..7");
  json rows = json::array();
  std::ostringstream tsv;
  tsv << "n\tm2\tn^n\n";
  for (int n = nr.lo; n <= nr.hi; ++n) {
    const std::uint64_t m2 = m2_value(n);
    const BigInt nn = boost::multiprecision::pow(BigInt(n), unsigned(n));
    tsv << n << '\t' << m2 << '\t' << nn.str() << '\n';
    rows.push_back({{"n", n}, {"m2", m2}, {"nn", nn.str()}});
  }
  std::cout << (format == "json" ? rows.dump() + "\n" : tsv.str());
  return 0;
}

int cmd_table2(Range kr, Range nr, const std::string& format) {
  kr.lo = std::max(kr.lo, 2);
  kr.hi = std::min(kr.hi, 6);
  nr.lo = std::max(nr.lo, 5);
  nr.hi = std::min(nr.hi, 9);
  if (kr.lo > kr.hi || nr.lo > nr.hi)
    throw std::invalid_argument("table 2 covers k = 2..6, n = 5..9");
  json cells = json::array();
  std::ostringstream tsv;
  tsv << 'k';
  for (int n = nr.lo; n <= nr.hi; ++n) tsv << "\tn=" << n;
  tsv << '\n';
  for (int k = kr.lo; k <= kr.hi; ++k) {
    tsv << k;
    for (int n = nr.lo; n <= nr.hi; ++n) {
      if (n == 6 || k >= n) {
        tsv << "\t-";
        continue;
      }
      const auto bound = corollary_lower_bound(k, n);
      tsv << '\t' << bound.value.str();
      cells.push_back({{"k", k},
                       {"n", n},
                       {"value", bound.value.str()},
                       {"l", bound.l},
                       {"m", bound.m}});
    }
    tsv << '\n';
  }
  std::cout << (format == "json" ? cells.dump() + "\n" : tsv.str());
  return 0;
}

int cmd_table3(Range kr, Range nr, std::uint64_t budget, std::uint64_t iters,
               std::uint64_t seed, int workers, const std::string& format) {
  kr.lo = std::max(kr.lo, 2);
  nr.lo = std::max(nr.lo, 2);
  if (kr.lo > kr.hi || nr.lo > nr.hi)
    throw std::invalid_argument("table 3 needs k >= 2 and n >= 2");
  json cells = json::array();
  std::ostringstream tsv;
  tsv << 'k';
  for (int n = nr.lo; n <= nr.hi; ++n) tsv << "\tn=" << n;
  tsv << '\n';
  for (int k = kr.lo; k <= kr.hi; ++k) {
    tsv << k;
    for (int n = nr.lo; n <= nr.hi; ++n) {
      if (k > n) {
        tsv << "\t-";
        continue;
      }
      SearchConfig config;
      config.n = n;
      config.k = k;
      config.budget = budget;
      config.workers = workers;
      try {
        const auto r = brute_force(config);
        tsv << '\t' << r.max_size << '*';
        cells.push_back(
            {{"k", k}, {"n", n}, {"value", r.max_size}, {"exact", true}});
      } catch (const BudgetExceeded&) {
        if (iters == 0) {
          tsv << "\tskipped";
          cells.push_back(
              {{"k", k}, {"n", n}, {"value", nullptr}, {"exact", false}});
          continue;
        }
        config.mode = SearchMode::random;
        config.iterations = iters;
        config.seed = seed;
        const auto r = random_search(config);
        tsv << '\t' << r.max_size;
        cells.push_back(
            {{"k", k}, {"n", n}, {"value", r.max_size}, {"exact", false}});
      }
    }
    tsv << '\n';
  }
  std::cout << (format == "json" ? cells.dump() + "\n" : tsv.str());
  return 0;
}

// ---- formula ----------------------------------------------------------------

int cmd_formula(int k, std::optional<int> l, std::optional<int> m,
                std::optional<int> n, const std::string& format) {
  if (l.has_value() != m.has_value())
    throw std::invalid_argument("formula: -l and -m must be given together");
  if (l.has_value() == n.has_value())
    throw std::invalid_argument("formula: give either -l and -m, or -n");
  if (l) {
    const int nn = *l + *m;
    const BigInt kn = boost::multiprecision::pow(BigInt(k), unsigned(nn));
    const BigInt f = formula_F(k, *l, *m);
    const std::uint64_t g = formula_G(k, *l, *m);
    const BigInt size = tau_ulm_size(k, *l, *m);
    if (format == "json") {
      const json out = {{"k", k},      {"l", *l},          {"m", *m},
                        {"n", nn},     {"k^n", kn.str()},  {"F", f.str()},
                        {"G", g},      {"size", size.str()}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "k^n = " << kn.str() << "\n"
                << "F = " << f.str() << "\n"
                << "G = " << g << "\n"
                << "size = " << size.str() << "\n";
    }
    return 0;
  }
  const auto bound = corollary_lower_bound(k, *n);
  if (format == "json") {
    const json out = {{"k", k},
                      {"n", *n},
                      {"l", bound.l},
                      {"m", bound.m},
                      {"size", bound.value.str()}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "best split: l=" << bound.l << " m=" << bound.m << "\n"
              << "size = " << bound.value.str() << "\n";
  }
  return 0;
}

// ---- search -----------------------------------------------------------------

int cmd_search(const std::string& mode, int k, int n, std::uint64_t iters,
               std::uint64_t seed, int workers, std::uint64_t budget) {
  SearchConfig config;
  config.n = n;
  config.k = k;
  config.workers = workers;
  config.budget = budget;
  SearchResult r = [&] {
    if (mode == "brute") return brute_force(config);
    config.mode = SearchMode::random;
    config.iterations = iters;
    config.seed = seed;
    return random_search(config);
  }();
  const json record = {{"k", k},
                       {"n", n},
                       {"mode", mode},
                       {"max", r.max_size},
                       {"alpha", int_array(r.witness_alpha)},
                       {"beta", int_array(r.witness_beta)},
                       {"tau", int_array(r.witness_tau)},
                       {"examined", r.triples_examined},
                       {"seed", mode == "random" ? seed : 0}};
  std::cout << record.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State complexity of reversal for automata with output"};
  app.require_subcommand(1);

  // reverse
  auto* sub_reverse =
      app.add_subcommand("reverse", "Reverse a machine read from a file");
  std::string input;
  std::string output_path;
  sub_reverse->add_option("input", input, "machine file")->required();
  sub_reverse->add_option("-o,--output", output_path,
                          "output path (default: <input>.rev)");

  // table
  auto* sub_table =
      app.add_subcommand("table", "Print one of the three result tables");
  int which_table = 0;
  std::string k_range_text, n_range_text, format = "tsv";
  std::uint64_t iters = 2000, seed = 0, budget_table = 100'000'000;
  int workers = 1;
  sub_table->add_option("which", which_table, "table number (1, 2 or 3)")
      ->required();
  sub_table->add_option("-k", k_range_text, "row filter: 'a' or 'a-b'");
  sub_table->add_option("-n", n_range_text, "column filter: 'a' or 'a-b'");
  sub_table->add_option("--format", format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));
  sub_table->add_option("--iters", iters,
                        "random iterations for over-budget cells (0: skip)");
  sub_table->add_option("--seed", seed, "random seed for over-budget cells");
  sub_table->add_option("--budget", budget_table,
                        "max triples for exhaustive cells");
  sub_table->add_option("--workers", workers, "worker threads");

  // formula
  auto* sub_formula = app.add_subcommand(
      "formula", "Closed-form reversal bound k^n - F + G");
  int fk = 0;
  std::optional<int> fl, fm, fn;
  std::string fformat = "text";
  sub_formula->add_option("-k", fk, "output alphabet size")->required();
  sub_formula->add_option("-l", fl, "first part size");
  sub_formula->add_option("-m", fm, "second part size");
  sub_formula->add_option("-n", fn, "state count (best coprime split mode)");
  sub_formula->add_option("--format", fformat, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // search
  auto* sub_search = app.add_subcommand(
      "search", "Search 2-generated monoids for large reversal complexity");
  std::string mode;
  int sk = 0, sn = 0, sworkers = 1;
  std::uint64_t siters = 1000, sseed = 0, sbudget = 1'000'000'000;
  sub_search->add_option("mode", mode, "brute or random")
      ->required()
      ->check(CLI::IsMember({"brute", "random"}));
  sub_search->add_option("-k", sk, "output alphabet size")->required();
  sub_search->add_option("-n", sn, "state count")->required();
  sub_search->add_option("--iters", siters, "random mode iterations");
  sub_search->add_option("--seed", sseed, "random mode seed");
  sub_search->add_option("--workers", sworkers, "worker threads");
  sub_search->add_option("--budget", sbudget, "max triples for brute mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sub_reverse->parsed()) {
      return cmd_reverse(input, sub_reverse->count("-o")
                                    ? std::optional<std::string>(output_path)
                                    : std::nullopt);
    }
    if (sub_table->parsed()) {
      const Range kr = k_range_text.empty() ? Range{2, 9}
                                            : parse_range(k_range_text, "-k");
      Range nr = n_range_text.empty() ? Range{2, 9}
                                      : parse_range(n_range_text, "-n");
      switch (which_table) {
        case 1:
          if (n_range_text.empty()) nr = {2, 7};
          return cmd_table1(nr, format);
        case 2:
          return cmd_table2(kr, nr, format);
        case 3: {
          const Range kr3 =
              k_range_text.empty() ? Range{3, 4} : parse_range(k_range_text, "-k");
          const Range nr3 =
              n_range_text.empty() ? Range{3, 8} : parse_range(n_range_text, "-n");
          return cmd_table3(kr3, nr3, budget_table, iters, seed, workers,
                            format);
        }
        default:
          throw std::invalid_argument("table number must be 1, 2 or 3");
      }
    }
    if (sub_formula->parsed()) return cmd_formula(fk, fl, fm, fn, fformat);
    if (sub_search->parsed())
      return cmd_search(mode, sk, sn, siters, sseed, sworkers, sbudget);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
