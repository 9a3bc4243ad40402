// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Expected values are the published group-order censuses
// for small orders, frozen below.

#include "gcensus/census.hpp"
#include "gcensus/oracle.hpp"
#include "gcensus/report.hpp"

#include <array>
#include <bit>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace gcensus;

namespace {

using rows_t = std::map<std::uint64_t, std::uint64_t>;

// Labelled graphs by group order (lg(n; xi)); totals are 2^lambda.
const std::map<int, rows_t> table1 = {
    {3, {{2, 6}, {6, 2}}},
    {4, {{2, 36}, {4, 12}, {6, 8}, {8, 6}, {24, 2}}},
    {5,
     {{2, 660},
      {4, 180},
      {6, 40},
      {8, 60},
      {10, 12},
      {12, 60},
      {24, 10},
      {120, 2}}},
    {6,
     {{1, 5760},
      {2, 16560},
      {4, 6480},
      {6, 960},
      {8, 1260},
      {10, 144},
      {12, 1080},
      {16, 270},
      {24, 60},
      {36, 40},
      {48, 120},
      {72, 20},
      {120, 12},
      {720, 2}}},
    {7,
     {{1, 766080},
      {2, 892080},
      {4, 312480},
      {6, 31920},
      {8, 46620},
      {10, 1008},
      {12, 29400},
      {14, 720},
      {16, 6300},
      {20, 1008},
      {24, 5040},
      {36, 840},
      {48, 2940},
      {72, 280},
      {120, 84},
      {144, 210},
      {240, 126},
      {720, 14},
      {5040, 2}}},
};

// Unlabelled graphs by group order (g_xi); totals g(n).
const std::map<int, rows_t> table2 = {
    {3, {{2, 2}, {6, 2}}},
    {4, {{2, 3}, {4, 2}, {6, 2}, {8, 2}, {24, 2}}},
    {5, {{2, 11}, {4, 6}, {6, 2}, {8, 4}, {10, 1}, {12, 6}, {24, 2}, {120, 2}}},
    {6,
     {{1, 8},
      {2, 46},
      {4, 36},
      {6, 8},
      {8, 14},
      {10, 2},
      {12, 18},
      {16, 6},
      {24, 2},
      {36, 2},
      {48, 8},
      {72, 2},
      {120, 2},
      {720, 2}}},
    {7,
     {{1, 152},
      {2, 354},
      {4, 248},
      {6, 38},
      {8, 74},
      {10, 2},
      {12, 70},
      {14, 2},
      {16, 20},
      {20, 4},
      {24, 24},
      {36, 6},
      {48, 28},
      {72, 4},
      {120, 2},
      {144, 6},
      {240, 6},
      {720, 2},
      {5040, 2}}},
};
const std::map<int, std::uint64_t> unlabelled_totals = {
    {3, 4}, {4, 11}, {5, 34}, {6, 156}, {7, 1044}};

// Labelled self-complementary graphs by group order (lsc(n; xi)).
const std::map<int, rows_t> table3 = {
    {4, {{2, 12}}},
    {5, {{2, 60}, {10, 12}}},
    {8, {{2, 60480}, {4, 20160}, {8, 15120}, {32, 2520}}},
    {9,
     {{2, 3265920},
      {4, 544320},
      {8, 226800},
      {20, 36288},
      {32, 45360},
      {72, 5040}}},
};
const std::map<int, std::uint64_t> lsc_totals = {
    {4, 12}, {5, 72}, {8, 98280}, {9, 4123728}};
const std::map<int, std::uint64_t> sc_column_sums = {{8, 403200},
                                                     {9, 13063680}};

// Unlabelled self-complementary graphs by group order (s_xi).
const std::map<int, rows_t> table4 = {
    {4, {{2, 1}}},
    {5, {{2, 1}, {10, 1}}},
    {8, {{2, 3}, {4, 2}, {8, 3}, {32, 2}}},
    {9, {{2, 18}, {4, 6}, {8, 5}, {20, 2}, {32, 4}, {72, 1}}},
};
const std::map<int, std::uint64_t> sc_totals = {{4, 1}, {5, 2}, {8, 10}, {9, 36}};

int failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool(std::ostream&)>& body) {
  std::ostringstream detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  std::cout << "criterion " << number << " (" << name << "): "
            << (ok ? "PASS" : "FAIL");
  if (!ok) {
    std::cout << " -- " << detail.str();
    ++failures;
  }
  std::cout << "\n" << std::flush;
}

template <class T>
bool expect_eq(std::ostream& out, const std::string& what, const T& got,
               const T& want) {
  if (got == want) return true;
  out << what << " differs; ";
  return false;
}

// Cached sweeps, each run once with default (all-thread) parallelism.
std::map<int, census_accumulator> graph_runs;
std::map<int, census_accumulator> sc_runs;

}  // namespace

int main() {
  for (int n = 3; n <= 7; ++n)
    graph_runs.emplace(n, run_census(order(n), census_mode::graphs, {}));
  for (int n : {4, 5, 8, 9})
    sc_runs.emplace(n, run_census(order(n), census_mode::sc, {}));

  criterion(1, "labelled graph histograms, n = 3..7", [](std::ostream& out) {
    bool ok = true;
    for (const auto& [n, expected] : table1) {
      const census_accumulator& acc = graph_runs.at(n);
      ok &= expect_eq(out, "n=" + std::to_string(n) + " histogram",
                      histogram(acc).rows, expected);
      ok &= expect_eq(out, "n=" + std::to_string(n) + " labelled total",
                      make_report(acc).labelled_total,
                      std::uint64_t{1} << acc.lambda);
    }
    ok &= expect_eq(out, "n=7 row count", histogram(graph_runs.at(7)).rows.size(),
                    table1.at(7).size());
    return ok;
  });

  criterion(2, "unlabelled graph counts, n = 3..7", [](std::ostream& out) {
    bool ok = true;
    for (const auto& [n, expected] : table2) {
      const census_report rep = make_report(graph_runs.at(n));
      rows_t got;
      for (const census_report::row& w : rep.rows)
        got[w.group_order] = w.unlabelled;
      ok &= expect_eq(out, "n=" + std::to_string(n) + " rows", got, expected);
      ok &= expect_eq(out, "g(" + std::to_string(n) + ")", rep.unlabelled_total,
                      unlabelled_totals.at(n));
    }
    return ok;
  });

  criterion(3, "labelled self-complementary histograms, n = 4, 5, 8, 9",
            [](std::ostream& out) {
              bool ok = true;
              for (const auto& [n, expected] : table3) {
                const census_accumulator& acc = sc_runs.at(n);
                ok &= expect_eq(out, "n=" + std::to_string(n) + " histogram",
                                histogram(acc).rows, expected);
                ok &= expect_eq(out, "lsc(" + std::to_string(n) + ")",
                                acc.key_count(), lsc_totals.at(n));
              }
              for (const auto& [n, total] : sc_column_sums)
                ok &= expect_eq(out, "n=" + std::to_string(n) + " column sum",
                                sc_runs.at(n).burnside_total(), total);
              return ok;
            });

  criterion(4, "unlabelled self-complementary counts, n = 4, 5, 8, 9",
            [](std::ostream& out) {
              bool ok = true;
              for (const auto& [n, expected] : table4) {
                const census_report rep = make_report(sc_runs.at(n));
                rows_t got;
                for (const census_report::row& w : rep.rows)
                  got[w.group_order] = w.unlabelled;
                ok &= expect_eq(out, "n=" + std::to_string(n) + " rows", got,
                                expected);
                ok &= expect_eq(out, "sc(" + std::to_string(n) + ")",
                                rep.unlabelled_total, sc_totals.at(n));
              }
              return ok;
            });

  criterion(5, "per-index oracle equivalence", [](std::ostream& out) {
    for (int n : {3, 4, 5}) {
      const auto records = oracle::full_oracle_census(order(n));
      const census_accumulator& acc = graph_runs.at(n);
      for (std::uint64_t L = 0; L < records.size(); ++L)
        if (acc.coefficient(L) != records[L].aut_order) {
          out << "graphs n=" << n << " index " << L << " ("
              << to_binary_string(order(n), L) << "): engine "
              << acc.coefficient(L) << ", oracle " << records[L].aut_order;
          return false;
        }
    }
    for (int n : {4, 5}) {
      const auto records = oracle::full_oracle_census(order(n));
      const census_accumulator& acc = sc_runs.at(n);
      std::uint64_t keys = 0;
      for (std::uint64_t L = 0; L < records.size(); ++L) {
        if (!records[L].sc_witnesses.empty()) ++keys;
        if (acc.coefficient(L) != records[L].sc_witnesses.size()) {
          out << "sc n=" << n << " index " << L << " ("
              << to_binary_string(order(n), L) << "): engine "
              << acc.coefficient(L) << ", oracle "
              << records[L].sc_witnesses.size();
          return false;
        }
      }
      if (keys != acc.key_count()) {
        out << "sc n=" << n << " key count";
        return false;
      }
    }
    return true;
  });

  criterion(6, "property suites", [](std::ostream& out) {
    // encode/decode round trip and complement involution, exhaustive n <= 5
    for (int nn = 3; nn <= 5; ++nn) {
      const order n(nn);
      const graph_index total = graph_index{1} << n.pair_count();
      for (graph_index L = 0; L < total; ++L) {
        if (encode(decode(n, L)) != L) {
          out << "round trip failed at n=" << nn;
          return false;
        }
        if (complement_index(n, complement_index(n, L)) != L) {
          out << "complement involution failed at n=" << nn;
          return false;
        }
      }
    }
    // sampled round trips, n = 6 and 7
    std::mt19937_64 rng(7);
    for (int nn : {6, 7}) {
      const order n(nn);
      const std::uint64_t mask = (std::uint64_t{1} << n.pair_count()) - 1;
      for (int s = 0; s < 100000; ++s) {
        const graph_index L = rng() & mask;
        if (encode(decode(n, L)) != L ||
            complement_index(n, complement_index(n, L)) != L) {
          out << "sampled round trip failed at n=" << nn;
          return false;
        }
      }
    }
    // per-permutation term distinctness, exhaustive n <= 5
    census_options strict;
    strict.check_distinct_terms = true;
    for (int nn : {3, 4, 5}) run_census(order(nn), census_mode::graphs, strict);
    for (int nn : {4, 5}) run_census(order(nn), census_mode::sc, strict);

    // divisibility for every row of every run in this suite
    const auto rows_divisible = [](const census_accumulator& acc) {
      const census_report rep = make_report(acc);
      for (const census_report::row& w : rep.rows)
        if (w.group_order * w.labelled % factorial(acc.n) != 0) return false;
      return true;
    };
    for (const auto& [n, acc] : graph_runs)
      if (!rows_divisible(acc)) {
        out << "divisibility failed, graphs n=" << n;
        return false;
      }
    for (const auto& [n, acc] : sc_runs)
      if (!rows_divisible(acc)) {
        out << "divisibility failed, sc n=" << n;
        return false;
      }

    // every sc key has exactly lambda/2 edge bits
    for (const auto& [n, acc] : sc_runs) {
      bool half = true;
      acc.for_each([&](std::uint64_t L, std::uint64_t) {
        half &= std::popcount(L) == acc.lambda / 2;
      });
      if (!half) {
        out << "popcount failed, sc n=" << n;
        return false;
      }
    }

    // witness count = group order and the coset identity, every sc graph
    // at n = 4 and 5
    for (int nn : {4, 5}) {
      const order n(nn);
      const auto records = oracle::full_oracle_census(n);
      for (std::uint64_t L = 0; L < records.size(); ++L) {
        if (records[L].sc_witnesses.empty()) continue;
        if (records[L].sc_witnesses.size() != records[L].aut_order) {
          out << "witness count != group order at n=" << nn << " L=" << L;
          return false;
        }
        if (!oracle::verify_coset_theorem(decode(n, L))) {
          out << "coset identity failed at n=" << nn << " L=" << L;
          return false;
        }
      }
    }
    return true;
  });

  criterion(7, "worker-count determinism, sc n = 8", [](std::ostream& out) {
    std::array<census_accumulator, 3> runs;
    std::array<std::string, 3> rendered;
    const int counts[] = {1, 2, 8};
    for (int i = 0; i < 3; ++i) {
      census_options o;
      o.workers = counts[i];
      runs[i] = run_census(order(8), census_mode::sc, o);
      rendered[i] = render_json(make_report(runs[i]));
    }
    if (!(runs[0] == runs[1] && runs[0] == runs[2])) {
      out << "accumulators differ across worker counts";
      return false;
    }
    if (rendered[0] != rendered[1] || rendered[0] != rendered[2]) {
      out << "rendered reports differ across worker counts";
      return false;
    }
    return true;
  });

  criterion(8, "mutation sensitivity", [](std::ostream& out) {
    const order n(4);
    const auto records = oracle::full_oracle_census(n);
    const auto matches_oracle = [&](const rows_t& counts) {
      for (std::uint64_t L = 0; L < records.size(); ++L) {
        const auto it = counts.find(L);
        const std::uint64_t got = it == counts.end() ? 0 : it->second;
        if (got != records[L].sc_witnesses.size()) return false;
      }
      return true;
    };

    // Test-local expansion: per cycle pick one of the two given weight
    // sums, every combination once, accumulate by plain addition.
    const auto accumulate_choices =
        [](const std::vector<std::array<std::uint64_t, 2>>& choices,
           rows_t& counts) {
          for (std::uint64_t pick = 0;
               pick < std::uint64_t{1} << choices.size(); ++pick) {
            std::uint64_t exponent = 0;
            for (std::size_t h = 0; h < choices.size(); ++h)
              exponent += choices[h][pick >> h & 1];
            ++counts[exponent];
          }
        };

    // Mutation (a): off-by-one rotation when computing the even-position
    // sum. The even positions of the listing rotated by one are the odd
    // positions of the canonical listing, so both choices collapse onto
    // the odd sum.
    rows_t mutated_even;
    for (const permutation& a : sc_permutations(n)) {
      std::vector<std::array<std::uint64_t, 2>> choices;
      for (const pair_cycle& z : decompose_pairs(n, a).cycles) {
        pair_cycle rotated = z;
        std::rotate(rotated.elements.begin(), rotated.elements.begin() + 1,
                    rotated.elements.end());
        choices.push_back(
            {static_cast<std::uint64_t>(weights_of(n, z).odd),
             static_cast<std::uint64_t>(weights_of(n, rotated).even)});
      }
      accumulate_choices(choices, mutated_even);
    }
    if (matches_oracle(mutated_even)) {
      out << "even-sum rotation mutation was not detected";
      return false;
    }

    // Mutation (b): admissibility that also accepts 2-cycles.
    rows_t mutated_filter;
    for_each_permutation(n, [&](const permutation& a) {
      const cycle_type t = cycle_type_of(a);
      if (t.cycles_of_length(1) > 1) return;
      if (t.cycles_of_length(3) > 0) return;  // 2-cycles admitted, 3-cycles not
      std::vector<std::array<std::uint64_t, 2>> choices;
      for (const pair_cycle& z : decompose_pairs(n, a).cycles) {
        const cycle_weights w = weights_of(n, z);
        choices.push_back({static_cast<std::uint64_t>(w.odd),
                           static_cast<std::uint64_t>(w.even)});
      }
      accumulate_choices(choices, mutated_filter);
    });
    if (matches_oracle(mutated_filter)) {
      out << "2-cycle admissibility mutation was not detected";
      return false;
    }

    // The unmutated test-local route must agree with the oracle, otherwise
    // the two detections above are vacuous.
    rows_t straight;
    for (const permutation& a : sc_permutations(n)) {
      std::vector<std::array<std::uint64_t, 2>> choices;
      for (const pair_cycle& z : decompose_pairs(n, a).cycles) {
        const cycle_weights w = weights_of(n, z);
        choices.push_back({static_cast<std::uint64_t>(w.odd),
                           static_cast<std::uint64_t>(w.even)});
      }
      accumulate_choices(choices, straight);
    }
    if (!matches_oracle(straight)) {
      out << "unmutated expansion disagrees with the oracle";
      return false;
    }
    return true;
  });

  if (failures == 0) {
    std::cout << "acceptance: all 8 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}
