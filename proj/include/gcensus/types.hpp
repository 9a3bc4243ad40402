#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcensus {

// Index of a labelled graph: its edge-membership bits packed into one
// unsigned integer. 128 bits cover every supported order (n <= 16 gives at
// most n(n-1)/2 = 120 bits); larger n is rejected instead of widening.
using graph_index = unsigned __int128;

// Decimal rendering (no iostream support for 128-bit integers).
std::string to_decimal(graph_index v);

// Thrown when a run would exceed a hard memory or work bound.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an identity that must hold by construction fails.
// Signals an engine bug, never bad user input.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Number of vertices. Valid range is [3, 16].
class order {
 public:
  explicit order(int n) : n_(n) {
    if (n < 3 || n > 16)
      throw std::invalid_argument("order must be in [3, 16], got " +
                                  std::to_string(n));
  }

  int n() const { return n_; }

  // Number of vertex pairs n(n-1)/2, i.e. the bit width of a graph index.
  int pair_count() const { return n_ * (n_ - 1) / 2; }

 private:
  int n_;
};

// Unordered vertex pair {i, j}, stored with 1-based labels and i < j.
struct edge_pair {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const edge_pair&, const edge_pair&) = default;
};

// Normalizes {a, b} so that i < j. Throws if a == b or a label is < 1.
edge_pair make_edge_pair(int a, int b);

// Graph on the fixed vertex set {1, ..., n}. Edges are kept sorted and
// duplicate-free; every pair must satisfy 1 <= i < j <= n.
class labelled_graph {
 public:
  labelled_graph(order n, std::vector<edge_pair> edges);

  order graph_order() const { return n_; }
  const std::vector<edge_pair>& edges() const { return edges_; }
  bool has_edge(edge_pair e) const;
  labelled_graph complement() const;

  friend bool operator==(const labelled_graph& a, const labelled_graph& b) {
    return a.n_.n() == b.n_.n() && a.edges_ == b.edges_;
  }

 private:
  order n_;
  std::vector<edge_pair> edges_;
};

}  // namespace gcensus
