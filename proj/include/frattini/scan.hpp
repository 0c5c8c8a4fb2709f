#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frattini::scan {

// Parallelism cap: FRATTINI_LAB_THREADS if set, else the OpenMP default.
inline int thread_limit() {
  static int cached = [] {
    if (const char* env = std::getenv("FRATTINI_LAB_THREADS")) {
      int v = std::atoi(env);
      if (v >= 1) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
  }();
  return cached;
}

// Serial reference kernel: indices i in [0, n) with pred(i), ascending.
template <class Pred>
std::vector<std::uint32_t> filter_indices_serial(std::size_t n, Pred&& pred) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (pred(i)) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

// OpenMP kernel; results are merged and sorted, so the output is
// identical to the serial reference regardless of scheduling.
template <class Pred>
std::vector<std::uint32_t> filter_indices_parallel(std::size_t n, Pred&& pred) {
#ifdef _OPENMP
  std::vector<std::vector<std::uint32_t>> local;
  int nthreads = std::min(thread_limit(), omp_get_max_threads());
#pragma omp parallel num_threads(nthreads)
  {
#pragma omp single
    local.resize(static_cast<std::size_t>(omp_get_num_threads()));
    auto& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
      if (pred(static_cast<std::size_t>(i))) mine.push_back(static_cast<std::uint32_t>(i));
  }
  std::vector<std::uint32_t> out;
  for (auto& v : local) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
#else
  return filter_indices_serial(n, pred);
#endif
}

// Dispatch: small scans are not worth forking threads for.
template <class Pred>
std::vector<std::uint32_t> filter_indices(std::size_t n, Pred&& pred) {
  if (n < 2048 || thread_limit() == 1) return filter_indices_serial(n, pred);
  return filter_indices_parallel(n, pred);
}

}  // namespace frattini::scan
