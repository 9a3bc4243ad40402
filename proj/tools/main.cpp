// Command-line front end: runs a census, renders the report, and optionally
// cross-checks the engine against the brute-force oracle.
//
// Exit codes: 0 ok, 2 bad arguments, 3 resource-cap refusal,
// 4 internal consistency failure, 5 verification mismatch.

#include "gcensus/census.hpp"
#include "gcensus/oracle.hpp"
#include "gcensus/report.hpp"

#include <CLI11.hpp>

#include <bit>
#include <fstream>
#include <iostream>
#include <random>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_bad_args = 2;
constexpr int exit_cap = 3;
constexpr int exit_inconsistent = 4;
constexpr int exit_verify_mismatch = 5;

using namespace gcensus;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

int debug_permutation(order n, const std::string& cycles) {
  const permutation a = parse_cycles(n.n(), cycles);
  const pair_decomposition d = decompose_pairs(n, a);

  std::cout << "permutation: " << format_cycles(a) << "\n";
  std::cout << "cycle type:";
  for (int k = 1; k <= n.n(); ++k)
    if (d.type.cycles_of_length(k) > 0)
      std::cout << ' ' << k << '^' << d.type.cycles_of_length(k);
  std::cout << "\n";

  const bool sc_applicable = n.n() % 4 <= 1;
  const bool admissible = sc_applicable && is_sc_admissible(n, a);
  if (sc_applicable)
    std::cout << "sc-admissible: " << (admissible ? "yes" : "no") << "\n";

  std::cout << "pair cycles (" << d.cycles.size() << ", leading weight first):\n";
  for (const pair_cycle& z : d.cycles) {
    std::cout << "  (";
    for (std::size_t t = 0; t < z.elements.size(); ++t) {
      if (t > 0) std::cout << ' ';
      const edge_pair e = z.elements[t];
      if (n.n() <= 9)
        std::cout << e.i << e.j;
      else
        std::cout << e.i << ',' << e.j;
    }
    const cycle_weights w = weights_of(n, z);
    std::cout << ")  W=" << to_decimal(w.full) << "  W_odd=" << to_decimal(w.odd)
              << "  W_even=" << to_decimal(w.even) << "\n";
  }

  if (n.pair_count() > 63) {
    std::cout << "term expansion skipped (indices wider than 64 bits)\n";
    return exit_ok;
  }
  const auto print_terms = [&](const char* label,
                               std::vector<std::uint64_t> terms) {
    std::sort(terms.begin(), terms.end());
    std::cout << label << " (" << terms.size() << "):";
    if (terms.size() > 4096) {
      std::cout << " not printed\n";
      return;
    }
    for (std::uint64_t x : terms) std::cout << ' ' << x;
    std::cout << "\n";
  };
  print_terms("graph terms", expand_graph_terms(n, a));
  if (admissible) print_terms("sc terms", expand_sc_terms(n, a));
  return exit_ok;
}

// Exhaustive engine-vs-oracle comparison over every index; n <= 5.
int verify_exhaustive(order n, census_mode mode, const census_accumulator& acc) {
  const auto records = oracle::full_oracle_census(n);
  std::uint64_t compared = 0;
  for (std::uint64_t L = 0; L < records.size(); ++L) {
    const oracle::oracle_record& rec = records[L];
    const std::uint64_t expected = mode == census_mode::graphs
                                       ? rec.aut_order
                                       : rec.sc_witnesses.size();
    const std::uint64_t got = acc.coefficient(L);
    if (got != expected) {
      std::cerr << "verify mismatch at index " << L << " ("
                << to_binary_string(n, L) << "): engine " << got << ", oracle "
                << expected << "\n";
      return exit_verify_mismatch;
    }
    if (expected != 0) ++compared;
  }
  std::cout << "verify: mode " << (mode == census_mode::graphs ? "graphs" : "sc")
            << ", n = " << n.n() << ": " << records.size()
            << " indices compared (" << compared
            << " nonzero), 0 mismatches\n";
  return exit_ok;
}

// Spot-sample comparison for sc n = 8: stride through the engine's keys and
// check each against a full brute-force scan; also probe half-edge-count
// non-keys for absent self-complementarity.
int verify_sc_spot(order n, const census_accumulator& acc) {
  constexpr std::size_t key_samples = 32;
  constexpr std::size_t nonkey_samples = 16;

  const std::size_t step = std::max<std::size_t>(
      1, acc.sparse_counts.size() / key_samples);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < acc.sparse_counts.size(); i += step) {
    const auto [L, coeff] = acc.sparse_counts[i];
    const labelled_graph g = decode(n, L);
    const auto witnesses = oracle::sc_witnesses_bruteforce(g);
    if (witnesses.size() != coeff) {
      std::cerr << "verify mismatch at index " << L << " ("
                << to_binary_string(n, L) << "): engine " << coeff
                << ", oracle " << witnesses.size() << "\n";
      return exit_verify_mismatch;
    }
    ++checked;
  }

  std::mt19937_64 rng(0x5eedu);
  const int half = n.pair_count() / 2;
  std::size_t probed = 0;
  while (probed < nonkey_samples) {
    const std::uint64_t L =
        rng() & ((std::uint64_t{1} << n.pair_count()) - 1);
    if (std::popcount(L) != half || acc.coefficient(L) != 0) continue;
    if (!oracle::sc_witnesses_bruteforce(decode(n, L)).empty()) {
      std::cerr << "verify mismatch at index " << L << " ("
                << to_binary_string(n, L)
                << "): engine says not self-complementary, oracle disagrees\n";
      return exit_verify_mismatch;
    }
    ++probed;
  }
  std::cout << "verify: mode sc, n = 8 spot-sample: " << checked
            << " keys and " << probed << " non-keys checked, 0 mismatches\n";
  return exit_ok;
}

int run(int argc, char** argv) {
  CLI::App app{
      "graph-census: exact counts of labelled and unlabelled graphs, plain "
      "or self-complementary, classified by automorphism group order"};

  int n_arg = 0;
  std::string mode_arg = "graphs";
  std::string format_arg = "table";
  std::string out_path;
  std::string debug_cycles;
  std::string dump_path;
  bool verify = false;
  bool allow_large = false;
  bool timestamp = false;
  int workers = 0;

  app.add_option("--n", n_arg, "number of vertices (3..16)")->required();
  app.add_option("--mode", mode_arg, "census mode: graphs | sc")
      ->check(CLI::IsMember({"graphs", "sc"}));
  app.add_option("--format", format_arg, "output format: table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--out", out_path, "write the report to this file");
  app.add_flag("--verify", verify,
               "cross-check the engine against the brute-force oracle "
               "(graphs: n <= 5; sc: n <= 5 exhaustive, n = 8 spot-sample)");
  app.add_option("--workers", workers,
                 "worker count for the sweep (default: all hardware threads; "
                 "1 = reference sequential sweep)");
  app.add_flag("--allow-large", allow_large,
               "override the default caps (graphs n <= 7, sc n <= 9)");
  app.add_option("--debug-permutation", debug_cycles,
                 "print one permutation's pair decomposition, weights and "
                 "expanded terms, then exit (cycle notation, e.g. "
                 "\"(1 2 3 4)(5)\")");
  app.add_option("--dump-coefficients", dump_path,
                 "write an index,coefficient CSV of the raw census");
  app.add_flag("--timestamp", timestamp,
               "add a generated_at field to JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_bad_args;
  }

  const order n(n_arg);
  const census_mode mode =
      mode_arg == "graphs" ? census_mode::graphs : census_mode::sc;

  if (!debug_cycles.empty()) return debug_permutation(n, debug_cycles);

  if (verify) {
    const bool within_guard = mode == census_mode::graphs
                                  ? n.n() <= 5
                                  : n.n() <= 5 || n.n() == 8;
    if (!within_guard)
      throw std::invalid_argument("--verify is limited to the oracle guards "
                                  "(graphs n <= 5; sc n <= 5 or n = 8)");
  }

  census_options opt;
  opt.workers = workers;
  opt.allow_large = allow_large;
  opt.check_distinct_terms = verify;

  const census_accumulator acc = run_census(n, mode, opt);
  const census_report rep = make_report(acc);

  std::string text;
  if (format_arg == "table") text = render_table(rep);
  else if (format_arg == "csv") text = render_csv(rep);
  else text = render_json(rep, timestamp);
  write_output(text, out_path);

  if (!dump_path.empty()) {
    std::ofstream out(dump_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + dump_path);
    out << "index,coefficient\n";
    acc.for_each([&](std::uint64_t L, std::uint64_t c) {
      out << L << ',' << c << '\n';
    });
  }

  if (verify) {
    if (mode == census_mode::sc && n.n() == 8) return verify_sc_spot(n, acc);
    return verify_exhaustive(n, mode, acc);
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gcensus::consistency_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return exit_inconsistent;
  } catch (const gcensus::resource_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return exit_cap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return exit_bad_args;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return exit_bad_args;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_inconsistent;
  }
}
