#pragma once

// Internals shared by the serial and OpenMP census sweeps. Not installed.

#include "gcensus/census.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace gcensus::detail {

// Expands one permutation's generating-function factor product and emits
// every term exponent exactly once.
//
// The per-cycle weight masks have pairwise disjoint bit support (the cycles
// partition the pairs), so any subset/choice sum equals the XOR of its
// parts. Terms are therefore enumerated with a Gray-code walk that flips
// one cycle per step: one XOR per emitted term.
//
// graphs mode: every subset of the cycle set, starting from the empty one.
// sc mode:     one of {odd-position sum, even-position sum} per cycle,
//              starting from the all-odd choice; flipping a cycle XORs its
//              full mask (odd ^ even == full).
template <class Emit>
inline void expand_images(const pair_tables& t, const std::uint8_t* img,
                          census_mode mode, Emit&& emit) {
  std::uint64_t w[64];
  int k = 0;
  std::uint64_t x = 0;
  walk_pair_cycles(t, img, [&](std::uint64_t full, std::uint64_t odd) {
    w[k++] = full;
    x ^= odd;
  });
  if (mode == census_mode::graphs) x = 0;

  emit(x);
  for (std::uint64_t s = 1, end = std::uint64_t{1} << k; s < end; ++s) {
    x ^= w[std::countr_zero(s)];
    emit(x);
  }
}

// Per-worker dense tallies; 32 bits suffice for any partial (each
// permutation contributes at most 1 per index and every rank range is
// far below 2^32).
struct dense_partial {
  std::vector<std::uint32_t> counts;

  explicit dense_partial(int lambda)
      : counts(std::size_t{1} << lambda, 0) {}

  void emit(std::uint64_t x) { ++counts[static_cast<std::size_t>(x)]; }
};

// Per-worker sparse tallies: emitted exponents are buffered, sorted and
// run-length folded into a sorted (index, count) list. Bounded memory via
// periodic flushes.
struct sparse_partial {
  static constexpr std::size_t flush_limit = std::size_t{1} << 22;

  std::vector<std::pair<std::uint64_t, std::uint64_t>> merged;
  std::vector<std::uint64_t> pending;

  void emit(std::uint64_t x) {
    pending.push_back(x);
    if (pending.size() >= flush_limit) flush();
  }

  void flush() {
    if (pending.empty()) return;
    std::sort(pending.begin(), pending.end());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> runs;
    for (std::size_t i = 0; i < pending.size();) {
      std::size_t j = i;
      while (j < pending.size() && pending[j] == pending[i]) ++j;
      runs.emplace_back(pending[i], j - i);
      i = j;
    }
    pending.clear();
    merged = merged.empty() ? std::move(runs) : merge_counts(merged, runs);
  }

  static std::vector<std::pair<std::uint64_t, std::uint64_t>> merge_counts(
      const std::vector<std::pair<std::uint64_t, std::uint64_t>>& a,
      const std::vector<std::pair<std::uint64_t, std::uint64_t>>& b) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].first < b[j].first) {
        out.push_back(a[i++]);
      } else if (b[j].first < a[i].first) {
        out.push_back(b[j++]);
      } else {
        out.emplace_back(a[i].first, a[i].second + b[j].second);
        ++i;
        ++j;
      }
    }
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return out;
  }
};

// Sweeps the permutations with lexicographic ranks in [lo, hi) into acc.
// In sc mode inadmissible permutations are skipped. When check_distinct is
// set, each permutation's terms are independently collected and checked
// for duplicates (they are pairwise distinct by construction; the check
// guards the construction). Returns false on a distinctness violation.
template <class Partial>
inline bool sweep_range(const pair_tables& t, census_mode mode,
                        std::uint64_t lo, std::uint64_t hi,
                        bool check_distinct, Partial& acc) {
  if (lo >= hi) return true;
  std::vector<std::uint8_t> img(static_cast<std::size_t>(t.n));
  {
    const permutation start = nth_permutation(t.n, lo);
    std::copy(start.raw(), start.raw() + t.n, img.begin());
  }
  std::vector<std::uint64_t> scratch;
  for (std::uint64_t r = lo; r < hi; ++r) {
    if (mode == census_mode::graphs || sc_admissible_images(t.n, img.data())) {
      if (check_distinct) {
        scratch.clear();
        expand_images(t, img.data(), mode,
                      [&](std::uint64_t x) { scratch.push_back(x); });
        std::vector<std::uint64_t> sorted = scratch;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
          return false;
        for (std::uint64_t x : scratch) acc.emit(x);
      } else {
        expand_images(t, img.data(), mode,
                      [&](std::uint64_t x) { acc.emit(x); });
      }
    }
    std::next_permutation(img.begin(), img.end());
  }
  return true;
}

// Storage selection plus the cap policy; throws on refused runs.
bool plan_dense_storage(order n, census_mode mode, const census_options& opt);

// Number of workers a run resolves to (0 means available parallelism).
int resolve_workers(const census_options& opt);

census_accumulator make_accumulator(order n, census_mode mode, bool dense);

// Invariant checks run after every sweep (cheap, always on): graphs mode
// has every coefficient >= 1 over all 2^lambda indices; sc keys carry
// exactly lambda/2 edge bits. A violated expectation that every sc graph
// has a nontrivial automorphism only warns.
void post_checks(const census_accumulator& acc);

}  // namespace gcensus::detail
