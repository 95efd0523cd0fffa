#include <doctest.h>

#include <random>

#include "fpd/fp_matrix.hpp"

using namespace fpd;

namespace {

FpMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::uint32_t p) {
  FpMatrix m(rows, cols, p);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<std::int64_t>(rng() % p));
  }
  return m;
}

}  // namespace

TEST_CASE("decompose on the stock examples") {
  SUBCASE("identity over F_2") {
    Decomposition d = decompose(FpMatrix::identity(3, 2));
    CHECK(d.rank == 3);
    CHECK(d.kernel.dim() == 0);
    CHECK(d.image.dim() == 3);
  }
  SUBCASE("zero 2x3 over F_3") {
    Decomposition d = decompose(FpMatrix(2, 3, 3));
    CHECK(d.rank == 0);
    CHECK(d.kernel.dim() == 3);
    CHECK(d.image.dim() == 0);
  }
  SUBCASE("all-ones 2x2 over F_2") {
    FpMatrix m = FpMatrix::from_rows({{1, 1}, {1, 1}}, 2, 2);
    Decomposition d = decompose(m);
    CHECK(d.rank == 1);
    CHECK(d.kernel == Subspace::span(2, 2, {{1, 1}}));
    CHECK(d.image == Subspace::span(2, 2, {{1, 1}}));
  }
}

TEST_CASE("degenerate shapes") {
  Decomposition a = decompose(FpMatrix(0, 4, 5));
  CHECK(a.rank == 0);
  CHECK(a.kernel.dim() == 4);
  Decomposition b = decompose(FpMatrix(4, 0, 5));
  CHECK(b.rank == 0);
  CHECK(b.kernel.dim() == 0);
  CHECK(b.image.dim() == 0);
}

TEST_CASE("modulus must be prime and below 2^31") {
  CHECK_THROWS_AS(FpMatrix(1, 1, 4), InvalidModulus);
  CHECK_THROWS_AS(FpMatrix(1, 1, 1), InvalidModulus);
  CHECK_NOTHROW(FpMatrix(1, 1, 2147483647));  // 2^31 - 1 is prime
}

TEST_CASE("subspace_ops on the stock examples") {
  SUBCASE("reflexive") {
    Subspace a = Subspace::span(3, 2, {{1, 0, 1}, {0, 1, 0}});
    SubspaceOps ops = subspace_ops(a, a);
    CHECK(ops.sum == a);
    CHECK(ops.intersection == a);
    CHECK(ops.a_contains_b);
  }
  SUBCASE("complementary axes in F_2^2") {
    Subspace a = Subspace::span(2, 2, {{1, 0}});
    Subspace b = Subspace::span(2, 2, {{0, 1}});
    SubspaceOps ops = subspace_ops(a, b);
    CHECK(ops.sum.dim() == 2);
    CHECK(ops.intersection.dim() == 0);
    CHECK_FALSE(ops.a_contains_b);
  }
  SUBCASE("full plane contains the diagonal") {
    Subspace a = Subspace::span(2, 2, {{1, 0}, {0, 1}});
    Subspace b = Subspace::span(2, 2, {{1, 1}});
    SubspaceOps ops = subspace_ops(a, b);
    CHECK(ops.a_contains_b);
    CHECK(ops.intersection == b);
  }
  SUBCASE("ambient mismatch") {
    Subspace a = Subspace::span(2, 2, {{1, 0}});
    Subspace b = Subspace::span(3, 2, {{1, 0, 0}});
    CHECK_THROWS_AS(subspace_ops(a, b), DimensionMismatch);
  }
}

TEST_CASE("rank-nullity, rref idempotence and kernel annihilation on random matrices") {
  std::mt19937_64 rng(7);
  const std::uint32_t primes[] = {2, 3, 5, 65537};
  for (int iter = 0; iter < 120; ++iter) {
    std::uint32_t p = primes[rng() % 4];
    std::size_t rows = rng() % 7, cols = rng() % 7;
    FpMatrix m = random_matrix(rng, rows, cols, p);
    Decomposition d = decompose(m);
    CHECK(d.rank + d.kernel.dim() == cols);
    CHECK(d.image.dim() == d.rank);
    for (const Row& v : d.kernel.basis()) {
      Row img = m.apply(v);
      CHECK(std::all_of(img.begin(), img.end(), [](std::uint32_t x) { return x == 0; }));
    }
    Decomposition dd = decompose(d.rref);
    CHECK(dd.rref == d.rref);
  }
}

TEST_CASE("modular dimension formula on random subspace pairs") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 120; ++iter) {
    std::uint32_t p = (iter % 2 == 0) ? 2 : 3;
    std::size_t n = 2 + rng() % 4;
    std::vector<Row> va, vb;
    for (std::size_t k = 0; k < 1 + rng() % 3; ++k) {
      Row v(n);
      for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
      va.push_back(v);
    }
    for (std::size_t k = 0; k < 1 + rng() % 3; ++k) {
      Row v(n);
      for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
      vb.push_back(v);
    }
    Subspace a = Subspace::span(n, p, va);
    Subspace b = Subspace::span(n, p, vb);
    SubspaceOps ops = subspace_ops(a, b);
    CHECK(a.dim() + b.dim() == ops.sum.dim() + ops.intersection.dim());
    CHECK(ops.sum.contains(a));
    CHECK(ops.sum.contains(b));
    CHECK(a.contains(ops.intersection));
    CHECK(b.contains(ops.intersection));
    // canonical bases certify equality
    Subspace a2 = Subspace::span(n, p, a.basis());
    CHECK(a2 == a);
  }
}

TEST_CASE("scalar arithmetic") {
  FpScalar a(5, 7), b(4, 7);
  CHECK((a * b).value() == 6);
  CHECK((a + b).value() == 2);
  CHECK((a - b).value() == 1);
  CHECK((-a).value() == 2);
  CHECK((a.inverse() * a).value() == 1);
  CHECK_THROWS_AS(FpScalar(1, 6), InvalidModulus);
  CHECK_THROWS_AS(FpScalar(0, 7).inverse(), Error);
}
