#include "gcensus/types.hpp"

#include <algorithm>

namespace gcensus {

std::string to_decimal(graph_index v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

edge_pair make_edge_pair(int a, int b) {
  if (a < 1 || b < 1 || a == b)
    throw std::invalid_argument("edge pair needs two distinct labels >= 1");
  return a < b ? edge_pair{a, b} : edge_pair{b, a};
}

labelled_graph::labelled_graph(order n, std::vector<edge_pair> edges)
    : n_(n), edges_(std::move(edges)) {
  for (const edge_pair& e : edges_) {
    if (e.i < 1 || e.i >= e.j || e.j > n_.n())
      throw std::invalid_argument("edge pair out of range for order " +
                                  std::to_string(n_.n()));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
}

bool labelled_graph::has_edge(edge_pair e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

labelled_graph labelled_graph::complement() const {
  std::vector<edge_pair> rest;
  rest.reserve(static_cast<std::size_t>(n_.pair_count()) - edges_.size());
  for (int i = 1; i <= n_.n(); ++i)
    for (int j = i + 1; j <= n_.n(); ++j)
      if (!has_edge({i, j})) rest.push_back({i, j});
  return labelled_graph(n_, std::move(rest));
}

}  // namespace gcensus
