// Benchmark comparing the serial reference kernels against their
// OpenMP-parallel counterparts: dense Jacobi diagonalization, tensor-trace
// fixed-point counting, and the min-eigenvalue grid sweep.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cayley/chord.hpp"
#include "cayley/kernel.hpp"
#include "cayley/oracle.hpp"

using namespace cayley;

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename Fn>
double time_call(Fn&& fn) {
  const double start = now_seconds();
  fn();
  return now_seconds() - start;
}

void report(const char* name, double serial, double parallel, double max_delta) {
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   max |delta| %.2e\n",
              name, serial, parallel, serial / parallel, max_delta);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP with %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel kernels run serially\n");
#endif

  {
    // dense Jacobi on the Sym(6) kernel matrix (side 720)
    const std::vector<double> matrix = kernel_matrix_numeric(6, 2.0);
    std::vector<double> serial_values, parallel_values;
    const double serial_time =
        time_call([&] { serial_values = jacobi_eigenvalues_serial(matrix, 720); });
    const double parallel_time =
        time_call([&] { parallel_values = jacobi_eigenvalues(matrix, 720); });
    double max_delta = 0;
    for (size_t i = 0; i < serial_values.size(); ++i)
      max_delta = std::max(max_delta, std::abs(serial_values[i] - parallel_values[i]));
    report("jacobi Sym(6) kernel", serial_time, parallel_time, max_delta);
  }

  {
    // tensor-trace counting over 3^14 ~ 4.8M multi-indices
    const int strands = 14, rank = 3;
    std::vector<Chord> chords;
    for (int i = 1; i < strands; ++i) chords.push_back(make_chord(i, i + 1, strands));
    const Permutation sigma = to_permutation(ChordWord(strands, chords));
    std::uint64_t serial_count = 0, parallel_count = 0;
    const double serial_time =
        time_call([&] { serial_count = count_fixed_multi_indices_serial(sigma, rank); });
    const double parallel_time =
        time_call([&] { parallel_count = count_fixed_multi_indices(sigma, rank); });
    report("tensor trace 3^14", serial_time, parallel_time,
           static_cast<double>(serial_count > parallel_count ? serial_count - parallel_count
                                                             : parallel_count - serial_count));
  }

  {
    // numeric min-eigenvalue sweep on Sym(9), 2000 grid points
    const std::vector<double> grid = make_grid(1.0, 20.999, 0.01);
    std::vector<SweepRow> serial_rows, parallel_rows;
    sweep_min_eigenvalue(9, {2.0});  // warm the character cache outside the timings
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    const double serial_time = time_call([&] { serial_rows = sweep_min_eigenvalue(9, grid); });
#ifdef _OPENMP
    omp_set_num_threads(threads);
#endif
    const double parallel_time = time_call([&] { parallel_rows = sweep_min_eigenvalue(9, grid); });
    double max_delta = 0;
    for (size_t i = 0; i < serial_rows.size(); ++i)
      max_delta = std::max(max_delta, std::abs(serial_rows[i].min_eigenvalue -
                                               parallel_rows[i].min_eigenvalue));
    report("sweep Sym(9) x 2000", serial_time, parallel_time, max_delta);
  }

  return 0;
}
