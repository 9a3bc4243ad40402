#include "gcensus/oracle.hpp"

#include <algorithm>

namespace gcensus::oracle {

namespace {

void check_scan_guard(int n) {
  if (n > 8)
    throw gcensus::resource_error("brute-force scan guarded to n <= 8 (" +
                                  std::to_string(n) +
                                  "! permutations per graph)");
}

std::vector<permutation> sorted_perms(std::vector<permutation> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

labelled_graph apply_permutation(const permutation& a, const labelled_graph& g) {
  if (a.size() != g.graph_order().n()) throw std::invalid_argument("order mismatch");
  std::vector<edge_pair> mapped;
  mapped.reserve(g.edges().size());
  for (const edge_pair& e : g.edges())
    mapped.push_back(make_edge_pair(a.image(e.i), a.image(e.j)));
  return labelled_graph(g.graph_order(), std::move(mapped));
}

std::uint64_t aut_order_bruteforce(const labelled_graph& g) {
  check_scan_guard(g.graph_order().n());
  std::uint64_t count = 0;
  for_each_permutation(g.graph_order(), [&](const permutation& a) {
    if (apply_permutation(a, g) == g) ++count;
  });
  return count;
}

std::vector<permutation> sc_witnesses_bruteforce(const labelled_graph& g) {
  check_scan_guard(g.graph_order().n());
  const labelled_graph comp = g.complement();
  std::vector<permutation> witnesses;
  for_each_permutation(g.graph_order(), [&](const permutation& a) {
    if (apply_permutation(a, g) == comp) witnesses.push_back(a);
  });
  return witnesses;
}

bool verify_coset_theorem(const labelled_graph& g) {
  const std::vector<permutation> witnesses = sc_witnesses_bruteforce(g);
  if (witnesses.empty())
    throw std::invalid_argument("graph is not self-complementary");

  std::vector<permutation> auts;
  for_each_permutation(g.graph_order(), [&](const permutation& a) {
    if (apply_permutation(a, g) == g) auts.push_back(a);
  });
  const std::vector<permutation> auts_sorted = sorted_perms(auts);

  for (const permutation& a : witnesses) {
    const permutation a_inv = a.inverse();
    std::vector<permutation> coset;
    coset.reserve(witnesses.size());
    for (const permutation& b : witnesses) coset.push_back(compose(a_inv, b));
    if (sorted_perms(std::move(coset)) != auts_sorted) return false;
  }
  return true;
}

std::vector<oracle_record> full_oracle_census(order n) {
  if (n.n() > 5)
    throw gcensus::resource_error(
        "exhaustive oracle census guarded to n <= 5 (2^lambda * n! scans)");

  std::vector<permutation> perms;
  perms.reserve(factorial(n.n()));
  for_each_permutation(n, [&](const permutation& a) { perms.push_back(a); });

  const graph_index total = graph_index{1} << n.pair_count();
  std::vector<oracle_record> records(static_cast<std::size_t>(total));
  for (graph_index L = 0; L < total; ++L) {
    const labelled_graph g = decode(n, L);
    const labelled_graph comp = g.complement();
    oracle_record& rec = records[static_cast<std::size_t>(L)];
    for (const permutation& a : perms) {
      const labelled_graph image = apply_permutation(a, g);
      if (image == g) ++rec.aut_order;
      if (image == comp) rec.sc_witnesses.push_back(a);
    }
  }
  return records;
}

}  // namespace gcensus::oracle
