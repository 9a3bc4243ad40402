#include "census_kernel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <atomic>

namespace gcensus {

// OpenMP sweep. The rank space [0, n!) is split into `workers` contiguous
// ranges; each range is swept into a worker-private accumulator and the
// partials are merged pointwise. Merging is exact integer addition keyed
// by index, so the result never depends on the schedule or the worker
// count — the output is bit-identical to run_census_serial.
census_accumulator run_census_parallel(order n, census_mode mode,
                                       const census_options& opt) {
  const bool dense = detail::plan_dense_storage(n, mode, opt);
  const int workers = detail::resolve_workers(opt);
  const pair_tables tables(n);
  const std::uint64_t total = factorial(n.n());
  const bool check = opt.check_distinct_terms;

  const auto range_lo = [&](int w) {
    return total / static_cast<std::uint64_t>(workers) *
               static_cast<std::uint64_t>(w) +
           std::min<std::uint64_t>(static_cast<std::uint64_t>(w),
                                   total % static_cast<std::uint64_t>(workers));
  };

#ifdef _OPENMP
  const int threads = std::min(workers, omp_get_max_threads());
#else
  const int threads = 1;
#endif
  (void)threads;

  census_accumulator acc = detail::make_accumulator(n, mode, dense);
  std::atomic<bool> ok{true};

  if (dense) {
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#endif
    {
      detail::dense_partial mine(tables.lambda);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
      for (int w = 0; w < workers; ++w) {
        if (!detail::sweep_range(tables, mode, range_lo(w), range_lo(w + 1),
                                 check, mine))
          ok.store(false, std::memory_order_relaxed);
      }
#ifdef _OPENMP
#pragma omp critical(census_merge)
#endif
      {
        for (std::size_t i = 0; i < mine.counts.size(); ++i)
          acc.dense_counts[i] += mine.counts[i];
      }
    }
  } else {
#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#endif
    {
      detail::sparse_partial mine;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
      for (int w = 0; w < workers; ++w) {
        if (!detail::sweep_range(tables, mode, range_lo(w), range_lo(w + 1),
                                 check, mine))
          ok.store(false, std::memory_order_relaxed);
      }
      mine.flush();
#ifdef _OPENMP
#pragma omp critical(census_merge)
#endif
      {
        acc.sparse_counts =
            acc.sparse_counts.empty()
                ? std::move(mine.merged)
                : detail::sparse_partial::merge_counts(acc.sparse_counts,
                                                       mine.merged);
      }
    }
  }

  if (!ok.load())
    throw consistency_error(
        "duplicate term within one permutation's expansion");

  detail::post_checks(acc);
  return acc;
}

}  // namespace gcensus
