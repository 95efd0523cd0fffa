#include <doctest.h>

#include <random>

#include "fpd/fp_matrix.hpp"

using namespace fpd;

// The OpenMP elimination kernel must be bit-identical to the serial
// reference: the per-pivot row operations are independent and the
// arithmetic is exact, so there is no tolerance to speak of.

namespace {

std::vector<std::uint32_t> random_entries(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
  std::vector<std::uint32_t> a(n);
  for (auto& v : a) v = static_cast<std::uint32_t>(rng() % p);
  return a;
}

}  // namespace

TEST_CASE("serial and parallel rref agree bit-for-bit") {
  std::mt19937_64 rng(1234);
  const std::uint32_t primes[] = {2, 3, 5, 65537};
  struct Shape {
    std::size_t rows, cols;
  };
  // includes shapes beyond the auto-parallel threshold
  std::vector<Shape> shapes = {{1, 1},  {5, 8},    {16, 16},  {33, 7},
                               {64, 96}, {128, 130}, {200, 150}};
  for (const Shape& s : shapes) {
    for (std::uint32_t p : primes) {
      std::vector<std::uint32_t> base = random_entries(rng, s.rows * s.cols, p);
      std::vector<std::uint32_t> serial = base, parallel = base;
      std::vector<std::size_t> pivots_serial =
          rref_inplace(serial, s.rows, s.cols, p, ElimMode::Serial);
      std::vector<std::size_t> pivots_parallel =
          rref_inplace(parallel, s.rows, s.cols, p, ElimMode::Parallel);
      CHECK(pivots_serial == pivots_parallel);
      CHECK(serial == parallel);
    }
  }
}

TEST_CASE("decompose agrees across kernels") {
  std::mt19937_64 rng(987);
  for (int iter = 0; iter < 10; ++iter) {
    std::size_t rows = 40 + rng() % 120, cols = 40 + rng() % 120;
    FpMatrix m(rows, cols, 3);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<std::int64_t>(rng() % 3));
    }
    Decomposition a = decompose(m, ElimMode::Serial);
    Decomposition b = decompose(m, ElimMode::Parallel);
    CHECK(a.rank == b.rank);
    CHECK(a.kernel == b.kernel);
    CHECK(a.image == b.image);
    CHECK(a.rref == b.rref);
  }
}

TEST_CASE("subspace operations agree across kernels") {
  std::mt19937_64 rng(555);
  const std::size_t n = 96;
  std::vector<Row> va, vb;
  for (int k = 0; k < 40; ++k) {
    va.push_back(random_entries(rng, n, 5));
    vb.push_back(random_entries(rng, n, 5));
  }
  Subspace a_s = Subspace::span(n, 5, va, ElimMode::Serial);
  Subspace a_p = Subspace::span(n, 5, va, ElimMode::Parallel);
  CHECK(a_s == a_p);
  Subspace b_s = Subspace::span(n, 5, vb, ElimMode::Serial);
  CHECK(a_s.sum(b_s) == a_p.sum(b_s));
  CHECK(a_s.intersect(b_s) == a_p.intersect(b_s));
}
