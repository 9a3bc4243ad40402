#pragma once

#include "gcensus/index_codec.hpp"
#include "gcensus/permutation.hpp"

#include <cstdint>

namespace gcensus {

// Action of a vertex permutation on unordered pairs, the cycle structure of
// the induced pair permutation, and the per-cycle weight sums that drive
// the census expansions.

// Image of a pair: {a(i), a(j)}, normalized to i < j.
edge_pair apply_to_pair(const permutation& a, edge_pair e);

// One cycle of the induced pair permutation. elements[t+1] is the image of
// elements[t], wrapping around; the listing starts at the unique
// maximum-weight pair of the cycle (weights are distinct powers of two,
// so there are no ties).
struct pair_cycle {
  std::vector<edge_pair> elements;

  friend bool operator==(const pair_cycle&, const pair_cycle&) = default;
};

struct pair_decomposition {
  permutation alpha;
  cycle_type type;                 // vertex cycle type of alpha
  std::vector<pair_cycle> cycles;  // sorted by leading weight, descending
};

pair_decomposition decompose_pairs(order n, const permutation& a);

// Weight sums over one canonically rotated cycle: every element, the
// elements at odd listing positions (1st, 3rd, ...) and at even positions
// (2nd, 4th, ...). full == odd + even always; odd > even because the
// leading element carries the cycle's maximal weight.
struct cycle_weights {
  graph_index full = 0;
  graph_index odd = 0;
  graph_index even = 0;
};

cycle_weights weights_of(order n, const pair_cycle& z);

// Membership test for the set of permutations mapping some
// self-complementary graph onto its complement: at most one fixed point,
// and every cycle of length >= 2 has length divisible by 4.
// Throws std::invalid_argument unless n = 0, 1 (mod 4).
bool is_sc_admissible(order n, const permutation& a);

// Same test on a raw 0-based image array; no order validation.
bool sc_admissible_images(int n, const std::uint8_t* img0);

template <class Fn>
void for_each_sc_permutation(order n, std::uint64_t rank_lo,
                             std::uint64_t rank_hi, Fn&& fn) {
  for_each_permutation(n, rank_lo, rank_hi, [&](const permutation& a) {
    if (sc_admissible_images(n.n(), a.raw())) fn(a);
  });
}

std::vector<permutation> sc_permutations(order n);

// ---------------------------------------------------------------------------
// Low-level path used by the census sweeps.

// Pair <-> position lookup tables for one order.
struct pair_tables {
  explicit pair_tables(order n);

  int n;
  int lambda;
  std::vector<edge_pair> pair_at;  // 0-based position -> pair
  std::uint8_t pos_at[17][17];     // [i][j], 1-based labels, i < j -> 0-based position
};

// Walks the cycles of the pair permutation induced by the 0-based image
// array img0, without materializing them. Calls fn(full_mask, odd_mask)
// once per cycle, in canonical order (descending leading weight):
// full_mask has the weight bit of every cycle element, odd_mask only the
// bits of the odd-position elements. 64-bit masks; requires lambda <= 63.
template <class Fn>
void walk_pair_cycles(const pair_tables& t, const std::uint8_t* img0, Fn&& fn) {
  std::uint64_t visited = 0;
  for (int p = 0; p < t.lambda; ++p) {
    if (visited >> p & 1u) continue;
    // Starting at the smallest unvisited position puts the maximal weight
    // first: lower position <=> higher weight.
    std::uint64_t full = 0, odd = 0;
    int q = p;
    int step = 0;
    do {
      visited |= std::uint64_t{1} << q;
      const std::uint64_t w = std::uint64_t{1} << (t.lambda - 1 - q);
      full |= w;
      if ((step & 1) == 0) odd |= w;
      const edge_pair e = t.pair_at[q];
      const int a = img0[e.i - 1] + 1;
      const int b = img0[e.j - 1] + 1;
      q = a < b ? t.pos_at[a][b] : t.pos_at[b][a];
      ++step;
    } while (q != p);
    fn(full, odd);
  }
}

}  // namespace gcensus
