#pragma once

#include "gcensus/types.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

namespace gcensus {

// Exact for n <= 20.
std::uint64_t factorial(int n);

// Permutation of {1, ..., n}, stored as its image sequence. API labels are
// 1-based; raw() exposes the 0-based images for hot loops.
class permutation {
 public:
  explicit permutation(int n);  // identity
  static permutation from_images(const std::vector<int>& images_1based);

  int size() const { return static_cast<int>(img_.size()); }
  int image(int v) const { return img_[v - 1] + 1; }
  const std::uint8_t* raw() const { return img_.data(); }

  permutation inverse() const;

  // Steps to the lexicographic successor of the image sequence; returns
  // false (and wraps to the identity) after the last permutation.
  bool advance_lex() { return std::next_permutation(img_.begin(), img_.end()); }

  friend auto operator<=>(const permutation&, const permutation&) = default;

 private:
  explicit permutation(std::vector<std::uint8_t> raw) : img_(std::move(raw)) {}

  std::vector<std::uint8_t> img_;
};

// Function composition: compose(f, g)(x) = f(g(x)).
permutation compose(const permutation& f, const permutation& g);

// Number of cycles of each length in a vertex permutation;
// counts[k-1] is the number of cycles of length k.
struct cycle_type {
  std::vector<int> counts;

  int cycles_of_length(int k) const { return counts[k - 1]; }

  friend bool operator==(const cycle_type&, const cycle_type&) = default;
};

cycle_type cycle_type_of(const permutation& a);

// Lexicographic unranking; rank 0 is the identity, rank n!-1 the reversal.
permutation nth_permutation(int n, std::uint64_t rank);

// Calls fn(const permutation&) for every permutation with lexicographic
// rank in [rank_lo, rank_hi), in rank order. Sweeps are split across
// workers by handing each a contiguous rank range.
template <class Fn>
void for_each_permutation(order n, std::uint64_t rank_lo, std::uint64_t rank_hi,
                          Fn&& fn) {
  if (rank_lo >= rank_hi) return;
  permutation a = nth_permutation(n.n(), rank_lo);
  for (std::uint64_t r = rank_lo; r < rank_hi; ++r) {
    fn(std::as_const(a));
    if (r + 1 < rank_hi) a.advance_lex();
  }
}

template <class Fn>
void for_each_permutation(order n, Fn&& fn) {
  for_each_permutation(n, 0, factorial(n.n()), std::forward<Fn>(fn));
}

// Cycle notation, e.g. "(1 2 3 4)(5)": whitespace-separated 1-based labels.
// The parser accepts omitted fixed points; the printer always writes them,
// each cycle starting at its smallest label, cycles ordered by that label.
permutation parse_cycles(int n, const std::string& text);
std::string format_cycles(const permutation& a);

}  // namespace gcensus
