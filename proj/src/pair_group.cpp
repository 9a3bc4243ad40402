#include "gcensus/pair_group.hpp"

namespace gcensus {

edge_pair apply_to_pair(const permutation& a, edge_pair e) {
  return make_edge_pair(a.image(e.i), a.image(e.j));
}

pair_tables::pair_tables(order ord) : n(ord.n()), lambda(ord.pair_count()) {
  pair_at.reserve(static_cast<std::size_t>(lambda));
  for (int p = 1; p <= lambda; ++p) {
    const edge_pair e = pair_at_position(ord, p);
    pair_at.push_back(e);
    pos_at[e.i][e.j] = static_cast<std::uint8_t>(p - 1);
  }
}

pair_decomposition decompose_pairs(order n, const permutation& a) {
  if (a.size() != n.n()) throw std::invalid_argument("order mismatch");
  pair_decomposition d{a, cycle_type_of(a), {}};
  const int lambda = n.pair_count();
  std::vector<bool> visited(static_cast<std::size_t>(lambda), false);
  // Positions are scanned in increasing order, i.e. decreasing weight, so
  // each cycle starts at its maximum-weight pair and the cycles come out
  // sorted by leading weight.
  for (int p = 1; p <= lambda; ++p) {
    if (visited[static_cast<std::size_t>(p - 1)]) continue;
    pair_cycle z;
    edge_pair e = pair_at_position(n, p);
    do {
      visited[static_cast<std::size_t>(edge_position(n, e) - 1)] = true;
      z.elements.push_back(e);
      e = apply_to_pair(a, e);
    } while (e != z.elements.front());
    d.cycles.push_back(std::move(z));
  }
  return d;
}

cycle_weights weights_of(order n, const pair_cycle& z) {
  cycle_weights w;
  for (std::size_t t = 0; t < z.elements.size(); ++t) {
    const graph_index wt = pair_weight(n, z.elements[t]);
    w.full += wt;
    (t % 2 == 0 ? w.odd : w.even) += wt;
  }
  return w;
}

bool sc_admissible_images(int n, const std::uint8_t* img0) {
  std::uint32_t visited = 0;
  int fixed = 0;
  for (int v = 0; v < n; ++v) {
    if (visited >> v & 1u) continue;
    int len = 0;
    int u = v;
    do {
      visited |= std::uint32_t{1} << u;
      u = img0[u];
      ++len;
    } while (u != v);
    if (len == 1) {
      if (++fixed > 1) return false;
    } else if (len % 4 != 0) {
      return false;
    }
  }
  return true;
}

bool is_sc_admissible(order n, const permutation& a) {
  if (n.n() % 4 > 1)
    throw std::invalid_argument(
        "self-complementary graphs need n = 0, 1 (mod 4), got n = " +
        std::to_string(n.n()));
  if (a.size() != n.n()) throw std::invalid_argument("order mismatch");
  return sc_admissible_images(n.n(), a.raw());
}

std::vector<permutation> sc_permutations(order n) {
  if (n.n() % 4 > 1)
    throw std::invalid_argument(
        "self-complementary graphs need n = 0, 1 (mod 4), got n = " +
        std::to_string(n.n()));
  std::vector<permutation> out;
  for_each_sc_permutation(n, 0, factorial(n.n()),
                          [&](const permutation& a) { out.push_back(a); });
  return out;
}

}  // namespace gcensus
