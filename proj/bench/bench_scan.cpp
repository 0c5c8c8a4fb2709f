// Micro-benchmark comparing the serial reference filter kernel with the
// OpenMP kernel, on a conjugation-commutativity predicate over the element
// list of a moderately large permutation group (the same shape of scan the
// centralizer and normalizer routines perform).

#include <chrono>
#include <cstdio>
#include <vector>

#include "frattini/builtins.hpp"
#include "frattini/scan.hpp"

using namespace frattini;
using clock_type = std::chrono::steady_clock;

namespace {

template <class F>
double time_ms(F&& f, int reps) {
  auto t0 = clock_type::now();
  for (int r = 0; r < reps; ++r) f();
  auto t1 = clock_type::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
  Group g = builtin_group("direct_product(alt(5),alt(5))");
  auto elems = g.elements(10000);
  Perm probe = elems[elems.size() / 3];
  auto pred = [&](std::size_t i) { return elems[i] * probe == probe * elems[i]; };
  const std::size_t n = elems.size();

  auto serial = scan::filter_indices_serial(n, pred);
  auto parallel = scan::filter_indices_parallel(n, pred);
  if (serial != parallel) {
    std::printf("kernel mismatch: serial %zu vs parallel %zu hits\n", serial.size(),
                parallel.size());
    return 1;
  }

  const int reps = 20;
  double ms_serial = time_ms([&] { scan::filter_indices_serial(n, pred); }, reps);
  double ms_parallel = time_ms([&] { scan::filter_indices_parallel(n, pred); }, reps);

  std::printf("scan over %zu elements, %zu hits, threads <= %d\n", n, serial.size(),
              scan::thread_limit());
  std::printf("  serial   %8.3f ms\n", ms_serial);
  std::printf("  parallel %8.3f ms  (speedup %.2fx)\n", ms_parallel, ms_serial / ms_parallel);
  return 0;
}
