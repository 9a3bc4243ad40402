#pragma once

#include "gcensus/pair_group.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace gcensus {

enum class census_mode { graphs, sc };

struct census_options {
  int workers = 0;           // 0 = one worker per available hardware thread
  bool allow_large = false;  // override the default order caps (see run_census)
  bool check_distinct_terms = false;  // per-permutation distinctness assert
  bool force_sparse = false;          // testing knob: sparse storage in graphs mode
};

// Exponent -> coefficient map produced by one census sweep. Graphs mode is
// dense (one slot per index, every coefficient >= 1); sc mode keeps only
// the touched keys, sorted by index.
struct census_accumulator {
  int n = 0;
  census_mode mode = census_mode::graphs;
  int lambda = 0;
  bool dense = false;
  std::vector<std::uint64_t> dense_counts;  // size 2^lambda when dense
  std::vector<std::pair<std::uint64_t, std::uint64_t>> sparse_counts;

  std::uint64_t key_count() const;
  std::uint64_t coefficient(std::uint64_t index) const;  // 0 when absent
  std::uint64_t burnside_total() const;  // sum of all coefficients

  // fn(index, coefficient), ascending index, present keys only.
  template <class Fn>
  void for_each(Fn&& fn) const {
    if (dense) {
      for (std::uint64_t i = 0; i < dense_counts.size(); ++i)
        fn(i, dense_counts[i]);
    } else {
      for (const auto& [k, v] : sparse_counts) fn(k, v);
    }
  }

  friend bool operator==(const census_accumulator&,
                         const census_accumulator&) = default;
};

// Sweeps every permutation (graphs mode) or every admissible permutation
// (sc mode) and accumulates the expanded generating-function terms. The
// coefficient at index L ends up equal to the automorphism group order of
// the graph with index L.
//
// Caps: graphs n <= 7, sc n <= 9 unless opt.allow_large; an over-cap
// graphs run switches to sparse storage and warns about runtime. Runs
// whose sparse keys would not fit 64 bits (n > 11) are refused outright.
census_accumulator run_census(order n, census_mode mode,
                              const census_options& opt = {});

// Reference sequential sweep; what --workers 1 executes.
census_accumulator run_census_serial(order n, census_mode mode,
                                     const census_options& opt = {});

// OpenMP sweep over contiguous rank ranges, one private accumulator per
// worker, merged pointwise. Bit-identical to the serial sweep for every
// worker count.
census_accumulator run_census_parallel(order n, census_mode mode,
                                       const census_options& opt = {});

// Per-permutation expansions, one exponent per term (each exactly once).
// Graphs mode: subset sums of the per-cycle weights W(z).
// SC mode: one of W_odd(z) / W_even(z) from each cycle; requires an
// admissible permutation.
std::vector<std::uint64_t> expand_graph_terms(order n, const permutation& a);
std::vector<std::uint64_t> expand_sc_terms(order n, const permutation& a);

// rows[xi] = number of indices whose coefficient is xi.
struct group_order_histogram {
  std::map<std::uint64_t, std::uint64_t> rows;
};

group_order_histogram histogram(const census_accumulator& acc);

// Number of labelled self-complementary graphs: distinct keys of the
// sc-mode accumulator.
std::uint64_t labelled_sc_total(order n, const census_options& opt = {});

}  // namespace gcensus
