#include "census_kernel.hpp"

namespace gcensus {

// Reference sweep: one pass over the whole rank range, no partial
// accumulators. The OpenMP sweep must reproduce this bit for bit.
census_accumulator run_census_serial(order n, census_mode mode,
                                     const census_options& opt) {
  const bool dense = detail::plan_dense_storage(n, mode, opt);
  const pair_tables tables(n);
  const std::uint64_t total = factorial(n.n());

  census_accumulator acc = detail::make_accumulator(n, mode, dense);
  bool ok;
  if (dense) {
    struct direct_emitter {
      std::vector<std::uint64_t>& counts;
      void emit(std::uint64_t x) { ++counts[static_cast<std::size_t>(x)]; }
    } into{acc.dense_counts};
    ok = detail::sweep_range(tables, mode, 0, total, opt.check_distinct_terms,
                             into);
  } else {
    detail::sparse_partial partial;
    ok = detail::sweep_range(tables, mode, 0, total, opt.check_distinct_terms,
                             partial);
    partial.flush();
    acc.sparse_counts = std::move(partial.merged);
  }
  if (!ok)
    throw consistency_error(
        "duplicate term within one permutation's expansion");

  detail::post_checks(acc);
  return acc;
}

}  // namespace gcensus
