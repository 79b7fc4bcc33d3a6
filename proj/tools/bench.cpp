// Times the OpenMP kernels against their serial reference implementations.
// Three columns: the reference (a deliberately simple, independently written
// serial route), the kernel pinned to one thread, and the kernel on the full
// thread count. Outputs are checked for equality while timing, so a kernel
// mismatch aborts the run.

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <functional>

#include "hermeis/restriction.hpp"

using namespace hermeis;

namespace {

double time_ms(const std::function<void()>& fn, int repeat) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    auto start = std::chrono::steady_clock::now();
    fn();
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (ms < best) best = ms;
  }
  return best;
}

double time_with_threads(const std::function<void()>& fn, int repeat, int threads) {
#ifdef _OPENMP
  int saved = omp_get_max_threads();
  omp_set_num_threads(threads);
  double ms = time_ms(fn, repeat);
  omp_set_num_threads(saved);
  return ms;
#else
  (void)threads;
  return time_ms(fn, repeat);
#endif
}

void report(const char* name, double reference_ms, double one_ms, double full_ms) {
  std::printf("%-26s reference %9.1f ms   kernel@1 %9.1f ms   kernel@N %9.1f ms   scaling %5.2fx\n",
              name, reference_ms, one_ms, full_ms, one_ms / full_ms);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hermeis kernel benchmark: serial reference vs OpenMP"};
  Int delta = -47;
  Int bound = 6;
  int repeat = 3;
  int jobs = 0;
  app.add_option("--delta", delta, "fundamental discriminant < 0");
  app.add_option("--trace-bound", bound);
  app.add_option("--repeat", repeat, "take the best of this many runs");
  app.add_option("--jobs", jobs, "OpenMP thread count (0 = default)");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; all columns run serially\n");
#endif

  field::Field f(delta);
  std::printf("field delta = %lld, trace bound = %lld\n\n", delta, bound);

  hermitian::HermitianFourierTable table = hermitian::eisenstein_table(6, f, bound);
  if (!(table == hermitian::eisenstein_table_serial(6, f, bound))) {
    std::fprintf(stderr, "table kernels disagree\n");
    return 1;
  }
  std::printf("table entries: %zu\n\n", table.entries().size());

  report("eisenstein table (k=6)",
         time_ms([&] { hermitian::eisenstein_table_serial(6, f, bound); }, repeat),
         time_with_threads([&] { hermitian::eisenstein_table(6, f, bound); }, repeat, 1),
         time_ms([&] { hermitian::eisenstein_table(6, f, bound); }, repeat));

  hermitian::HermitianFourierTable e4 = hermitian::eisenstein_table(4, f, bound);
  if (!(hermitian::multiply(e4, table) == hermitian::multiply_serial(e4, table))) {
    std::fprintf(stderr, "convolution kernels disagree\n");
    return 1;
  }
  report("hermitian convolution",
         time_ms([&] { hermitian::multiply_serial(e4, table); }, repeat),
         time_with_threads([&] { hermitian::multiply(e4, table); }, repeat, 1),
         time_ms([&] { hermitian::multiply(e4, table); }, repeat));

  if (!(siegel::siegel_table(8, 2 * bound) == siegel::siegel_table_serial(8, 2 * bound))) {
    std::fprintf(stderr, "siegel kernels disagree\n");
    return 1;
  }
  report("siegel table (k=8)",
         time_ms([&] { siegel::siegel_table_serial(8, 2 * bound); }, repeat),
         time_with_threads([&] { siegel::siegel_table(8, 2 * bound); }, repeat, 1),
         time_ms([&] { siegel::siegel_table(8, 2 * bound); }, repeat));

  // the scan has only the parallel build; its reference column is one thread
  double scan_one =
      time_with_threads([&] { restriction::nonvanishing_scan(10, 3, 300); }, repeat, 1);
  report("nonvanishing scan (k=10)", scan_one, scan_one,
         time_ms([&] { restriction::nonvanishing_scan(10, 3, 300); }, repeat));
  return 0;
}
