#pragma once

#include "gcensus/types.hpp"

namespace gcensus {

// Bijection between labelled graphs on {1,...,n} and integers in
// [0, 2^lambda - 1], lambda = n(n-1)/2. Pair {i,j} owns bit position
// p = (2n-i)(i-1)/2 + (j-i) counted from the most significant of the
// lambda used bits, so pair 12 is the leading binary digit and printed
// binary strings keep their leading zeros.

// 1-based bit position of a pair, in [1, lambda]. Positions enumerate
// pairs in the row order 12, 13, ..., 1n, 23, ..., (n-1)n.
int edge_position(order n, edge_pair e);

// Inverse of edge_position.
edge_pair pair_at_position(order n, int p);

// Weight of a pair: 2^(lambda - p).
graph_index pair_weight(order n, edge_pair e);

graph_index encode(const labelled_graph& g);

// Throws std::out_of_range when index >= 2^lambda.
labelled_graph decode(order n, graph_index index);

// Index of the complement graph: 2^lambda - 1 - index.
graph_index complement_index(order n, graph_index index);

// The p_ij-th binary digit of index: 1 iff the edge is present.
int edge_bit(order n, graph_index index, edge_pair e);

// Exactly lambda characters '0'/'1', most significant digit (pair 12) first.
std::string to_binary_string(order n, graph_index index);

}  // namespace gcensus
