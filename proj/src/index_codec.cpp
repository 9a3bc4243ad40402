#include "gcensus/index_codec.hpp"

namespace gcensus {

namespace {

void check_pair(order n, edge_pair e) {
  if (e.i < 1 || e.i >= e.j || e.j > n.n())
    throw std::invalid_argument("invalid pair {" + std::to_string(e.i) + "," +
                                std::to_string(e.j) + "} for order " +
                                std::to_string(n.n()));
}

void check_index(order n, graph_index index) {
  if (index >> n.pair_count() != 0)
    throw std::out_of_range("index does not fit " +
                            std::to_string(n.pair_count()) + " bits");
}

}  // namespace

int edge_position(order n, edge_pair e) {
  check_pair(n, e);
  return (2 * n.n() - e.i) * (e.i - 1) / 2 + (e.j - e.i);
}

edge_pair pair_at_position(order n, int p) {
  if (p < 1 || p > n.pair_count())
    throw std::out_of_range("position out of [1, lambda]");
  // Row i holds the n-i positions of pairs {i, i+1} .. {i, n}.
  int i = 1;
  while (p > n.n() - i) {
    p -= n.n() - i;
    ++i;
  }
  return {i, i + p};
}

graph_index pair_weight(order n, edge_pair e) {
  return graph_index{1} << (n.pair_count() - edge_position(n, e));
}

graph_index encode(const labelled_graph& g) {
  graph_index index = 0;
  for (const edge_pair& e : g.edges()) index |= pair_weight(g.graph_order(), e);
  return index;
}

labelled_graph decode(order n, graph_index index) {
  check_index(n, index);
  std::vector<edge_pair> edges;
  for (int p = 1; p <= n.pair_count(); ++p)
    if (index >> (n.pair_count() - p) & 1) edges.push_back(pair_at_position(n, p));
  return labelled_graph(n, std::move(edges));
}

graph_index complement_index(order n, graph_index index) {
  check_index(n, index);
  const graph_index all = (graph_index{1} << n.pair_count()) - 1;
  return all - index;
}

int edge_bit(order n, graph_index index, edge_pair e) {
  check_index(n, index);
  return static_cast<int>(index >> (n.pair_count() - edge_position(n, e)) & 1);
}

std::string to_binary_string(order n, graph_index index) {
  check_index(n, index);
  std::string s(static_cast<std::size_t>(n.pair_count()), '0');
  for (int p = 1; p <= n.pair_count(); ++p)
    if (index >> (n.pair_count() - p) & 1) s[p - 1] = '1';
  return s;
}

}  // namespace gcensus
