// Times the tiling aggregation kernels: serial reference against the
// OpenMP path, checking that both produce identical polynomials.
//
//   qfib_bench [min_board [max_board]]      (defaults 24 32, even steps)

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "qfib/tilings.hpp"

namespace {

template <typename Fn>
double timed_ms(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int min_board = 24;
  int max_board = 32;
  if (argc > 1) min_board = std::atoi(argv[1]);
  if (argc > 2) max_board = std::atoi(argv[2]);
  if (argc > 3 || min_board < 0 || max_board < min_board) {
    std::cerr << "usage: qfib_bench [min_board [max_board]]\n";
    return 2;
  }

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif

  std::cout << "total weight of all n-board tilings\n";
  std::cout << "n\ttilings\tserial_ms\tparallel_ms\tspeedup\n";
  for (int n = min_board; n <= max_board; n += 2) {
    qfib::Polynomial serial;
    qfib::Polynomial parallel;
    const double serial_ms =
        timed_ms([&] { serial = qfib::total_weight_serial(n, n); });
    const double parallel_ms =
        timed_ms([&] { parallel = qfib::total_weight(n, n); });
    if (serial != parallel) {
      std::cerr << "mismatch between serial and parallel totals at n = " << n
                << "\n";
      return 1;
    }
    std::printf("%d\t%s\t%.1f\t%.1f\t%.2fx\n", n,
                qfib::tiling_count(n).get_str().c_str(), serial_ms,
                parallel_ms, serial_ms / parallel_ms);
  }

  const int census_n = std::min(12, (max_board - 1) / 2);
  qfib::MedianCensus serial_census;
  qfib::MedianCensus parallel_census;
  const int census_board = 2 * census_n + 1;
  const double census_serial_ms = timed_ms([&] {
    serial_census = qfib::median_square_census_serial(census_n, census_board);
  });
  const double census_parallel_ms = timed_ms([&] {
    parallel_census = qfib::median_square_census(census_n, census_board);
  });
  if (serial_census.cells != parallel_census.cells) {
    std::cerr << "mismatch between serial and parallel census\n";
    return 1;
  }
  std::cout << "\nmedian-square census of the " << census_board << "-board\n";
  std::printf("serial %.1f ms, parallel %.1f ms, speedup %.2fx\n",
              census_serial_ms, census_parallel_ms,
              census_serial_ms / census_parallel_ms);
  return 0;
}
