// Times the serial reference elimination against the OpenMP kernel on
// random dense matrices and checks that the outputs stay identical.
// Build target only; not part of the ctest suite.

#include <chrono>
#include <cstdio>
#include <random>

#include "fpd/fp_matrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace fpd;

namespace {

std::vector<std::uint32_t> random_entries(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
  std::vector<std::uint32_t> a(n);
  for (auto& v : a) v = static_cast<std::uint32_t>(rng() % p);
  return a;
}

double time_rref(std::vector<std::uint32_t> data, std::size_t rows, std::size_t cols,
                 std::uint32_t p, ElimMode mode, std::size_t reps,
                 std::vector<std::uint32_t>* out) {
  double best = 1e30;
  for (std::size_t r = 0; r < reps; ++r) {
    std::vector<std::uint32_t> work = data;
    auto start = std::chrono::steady_clock::now();
    rref_inplace(work, rows, cols, p, mode);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (s < best) best = s;
    if (out) *out = work;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t reps = argc > 1 ? static_cast<std::size_t>(std::atoi(argv[1])) : 3;
#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled at build time\n");
#endif
  std::printf("%8s %8s %10s %12s %12s %8s %7s\n", "rows", "cols", "p", "serial[s]",
              "parallel[s]", "speedup", "match");

  std::mt19937_64 rng(42);
  struct Case {
    std::size_t rows, cols;
    std::uint32_t p;
  };
  const Case cases[] = {{128, 128, 3},     {256, 256, 3},     {512, 512, 3},
                        {768, 768, 3},     {512, 512, 65537}, {768, 768, 65537},
                        {1024, 512, 65537}};
  for (const Case& c : cases) {
    std::vector<std::uint32_t> data = random_entries(rng, c.rows * c.cols, c.p);
    std::vector<std::uint32_t> serial_out, parallel_out;
    double ts = time_rref(data, c.rows, c.cols, c.p, ElimMode::Serial, reps, &serial_out);
    double tp = time_rref(data, c.rows, c.cols, c.p, ElimMode::Parallel, reps, &parallel_out);
    bool match = serial_out == parallel_out;
    std::printf("%8zu %8zu %10u %12.4f %12.4f %7.2fx %7s\n", c.rows, c.cols, c.p, ts, tp,
                ts / tp, match ? "yes" : "NO");
    if (!match) return 1;
  }
  return 0;
}
