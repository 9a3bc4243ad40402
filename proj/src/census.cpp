#include "gcensus/census.hpp"

#include "census_kernel.hpp"

#include <bit>
#include <iostream>
#include <thread>

namespace gcensus {

std::uint64_t census_accumulator::key_count() const {
  if (dense) return dense_counts.size();
  return sparse_counts.size();
}

std::uint64_t census_accumulator::coefficient(std::uint64_t index) const {
  if (dense) {
    return index < dense_counts.size() ? dense_counts[index] : 0;
  }
  const auto it = std::lower_bound(
      sparse_counts.begin(), sparse_counts.end(), index,
      [](const auto& entry, std::uint64_t key) { return entry.first < key; });
  return it != sparse_counts.end() && it->first == index ? it->second : 0;
}

std::uint64_t census_accumulator::burnside_total() const {
  std::uint64_t total = 0;
  for_each([&](std::uint64_t, std::uint64_t c) { total += c; });
  return total;
}

namespace detail {

bool plan_dense_storage(order n, census_mode mode, const census_options& opt) {
  if (mode == census_mode::sc) {
    if (n.n() % 4 > 1)
      throw std::invalid_argument(
          "self-complementary graphs need n = 0, 1 (mod 4), got n = " +
          std::to_string(n.n()));
    if (n.n() > 9) {
      if (!opt.allow_large)
        throw resource_error(
            "sc census capped at n <= 9 by default; n = " +
            std::to_string(n.n()) + " sweeps " + std::to_string(n.n()) +
            "! = " + std::to_string(factorial(n.n())) +
            " permutations (override with allow_large)");
      if (n.pair_count() > 63)
        throw resource_error(
            "census indices are packed into 64 bits; n = " +
            std::to_string(n.n()) + " needs " +
            std::to_string(n.pair_count()) + " bits (hard bound n <= 11)");
      std::cerr << "warning: sc census at n = " << n.n()
                << " sweeps " << factorial(n.n())
                << " permutations; expect a very long run\n";
    }
    return false;
  }

  if (n.n() > 7) {
    if (!opt.allow_large)
      throw resource_error(
          "graph census capped at n <= 7 by default; n = " +
          std::to_string(n.n()) + " would need 2^" +
          std::to_string(n.pair_count()) + " dense 64-bit counters (" +
          to_decimal((graph_index{8} << n.pair_count()) >> 20) +
          " MiB); override with allow_large to run sparse");
    if (n.pair_count() > 63)
      throw resource_error(
          "census indices are packed into 64 bits; n = " +
          std::to_string(n.n()) + " needs " + std::to_string(n.pair_count()) +
          " bits (hard bound n <= 11)");
    std::cerr << "warning: over-cap graph census at n = " << n.n()
              << " runs with sparse storage; expect a long run and large "
                 "sort buffers\n";
    return false;
  }
  return !opt.force_sparse;
}

int resolve_workers(const census_options& opt) {
  int w = opt.workers;
  if (w == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    w = hw == 0 ? 1 : static_cast<int>(hw);
  }
  if (w < 1 || w > 4096)
    throw std::invalid_argument("workers must be in [1, 4096]");
  return w;
}

census_accumulator make_accumulator(order n, census_mode mode, bool dense) {
  census_accumulator acc;
  acc.n = n.n();
  acc.mode = mode;
  acc.lambda = n.pair_count();
  acc.dense = dense;
  if (dense) acc.dense_counts.assign(std::size_t{1} << acc.lambda, 0);
  return acc;
}

void post_checks(const census_accumulator& acc) {
  if (acc.mode == census_mode::graphs) {
    const std::uint64_t expected_keys = std::uint64_t{1} << acc.lambda;
    if (acc.key_count() != expected_keys)
      throw consistency_error("graph census must touch every index once");
    acc.for_each([&](std::uint64_t index, std::uint64_t c) {
      if (c == 0)
        throw consistency_error("graph census coefficient 0 at index " +
                                std::to_string(index));
    });
    return;
  }
  const int half = acc.lambda / 2;
  std::uint64_t trivial_groups = 0;
  acc.for_each([&](std::uint64_t index, std::uint64_t c) {
    if (std::popcount(index) != half)
      throw consistency_error(
          "sc census key without lambda/2 edge bits: " + std::to_string(index));
    if (c < 2) ++trivial_groups;
  });
  // Tables suggest every sc graph has a nontrivial automorphism, but no
  // theorem pins it; treat a counterexample as news, not as an error.
  if (trivial_groups != 0)
    std::cerr << "warning: " << trivial_groups
              << " sc keys have coefficient 1 (trivial automorphism group)\n";
}

}  // namespace detail

census_accumulator run_census(order n, census_mode mode,
                              const census_options& opt) {
  return detail::resolve_workers(opt) == 1 ? run_census_serial(n, mode, opt)
                                           : run_census_parallel(n, mode, opt);
}

std::vector<std::uint64_t> expand_graph_terms(order n, const permutation& a) {
  if (n.pair_count() > 63)
    throw resource_error("term exponents are packed into 64 bits (n <= 11)");
  if (a.size() != n.n()) throw std::invalid_argument("order mismatch");
  const pair_tables t(n);
  std::vector<std::uint64_t> out;
  detail::expand_images(t, a.raw(), census_mode::graphs,
                        [&](std::uint64_t x) { out.push_back(x); });
  return out;
}

std::vector<std::uint64_t> expand_sc_terms(order n, const permutation& a) {
  if (n.pair_count() > 63)
    throw resource_error("term exponents are packed into 64 bits (n <= 11)");
  if (!is_sc_admissible(n, a))
    throw std::invalid_argument(
        "permutation does not map any self-complementary graph onto its "
        "complement: " +
        format_cycles(a));
  const pair_tables t(n);
  std::vector<std::uint64_t> out;
  detail::expand_images(t, a.raw(), census_mode::sc,
                        [&](std::uint64_t x) { out.push_back(x); });
  return out;
}

group_order_histogram histogram(const census_accumulator& acc) {
  group_order_histogram h;
  acc.for_each([&](std::uint64_t, std::uint64_t c) { ++h.rows[c]; });
  return h;
}

std::uint64_t labelled_sc_total(order n, const census_options& opt) {
  return run_census(n, census_mode::sc, opt).key_count();
}

}  // namespace gcensus
