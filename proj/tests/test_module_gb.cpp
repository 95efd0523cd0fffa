#include <doctest.h>

#include "fpd/module_gb.hpp"
#include "fpd/verify.hpp"

using namespace fpd;

namespace {

PolyMatrix row_matrix(const PolyRingPtr& ring, const std::vector<Polynomial>& entries) {
  PolyMatrix m(ring, 1, entries.size());
  for (std::size_t c = 0; c < entries.size(); ++c) m.at(0, c) = entries[c];
  return m;
}

}  // namespace

TEST_CASE("module_kernel on the stock examples") {
  PolyRingPtr rxy = PolyRing::create(2, {"x", "y"});
  SUBCASE("Koszul syzygy of (x y)") {
    PolyMatrix m = row_matrix(rxy, {parse_poly(rxy, "x"), parse_poly(rxy, "y")});
    std::vector<ModuleVector> kernel = module_kernel(m);
    REQUIRE(!kernel.empty());
    ModuleVector syz(rxy, {parse_poly(rxy, "y"), parse_poly(rxy, "x")});
    // generation both ways
    CHECK(submodule_contains(kernel, syz));
    for (const auto& v : kernel) {
      CHECK(submodule_contains({syz}, v));
      CHECK(m.apply(v).is_zero());
    }
  }
  SUBCASE("identity map has zero kernel") {
    PolyMatrix m = row_matrix(rxy, {parse_poly(rxy, "1")});
    CHECK(module_kernel(m).empty());
  }
  SUBCASE("zero map is all kernel") {
    PolyMatrix m = row_matrix(rxy, {Polynomial::zero(rxy)});
    std::vector<ModuleVector> kernel = module_kernel(m);
    ModuleVector one = ModuleVector::unit(rxy, 1, 0);
    CHECK(submodule_contains(kernel, one));
  }
}

TEST_CASE("submodule_contains on the stock examples") {
  PolyRingPtr rxy = PolyRing::create(2, {"x", "y"});
  ModuleVector gen(rxy, {parse_poly(rxy, "y"), parse_poly(rxy, "x")});
  ModuleVector multiple(rxy, {parse_poly(rxy, "x*y"), parse_poly(rxy, "x^2")});
  ModuleVector unit(rxy, {parse_poly(rxy, "1"), parse_poly(rxy, "0")});
  ModuleVector zero(rxy, 2);
  CHECK(submodule_contains({gen}, multiple));
  CHECK_FALSE(submodule_contains({gen}, unit));
  CHECK(submodule_contains({gen}, zero));
  CHECK(submodule_contains({}, zero));
}

TEST_CASE("rank and ring mismatches are rejected") {
  PolyRingPtr rxy = PolyRing::create(2, {"x", "y"});
  PolyRingPtr rx = PolyRing::create(2, {"x"});
  ModuleVector a(rxy, 2);
  ModuleVector b(rxy, 3);
  CHECK_THROWS_AS(a + b, RankMismatch);
  CHECK_THROWS_AS(submodule_contains({a}, b), RankMismatch);
  ModuleVector c(rx, 2);
  CHECK_THROWS_AS(submodule_contains({a}, c), RingMismatch);
}

TEST_CASE("module GB reduction respects positions") {
  PolyRingPtr rxy = PolyRing::create(2, {"x", "y"});
  // e1-leading generator cannot reduce an e2 term
  ModuleVector g1(rxy, {parse_poly(rxy, "x"), Polynomial::zero(rxy)});
  ModuleVector v(rxy, {Polynomial::zero(rxy), parse_poly(rxy, "x^2")});
  CHECK_FALSE(submodule_contains({g1}, v));
  ModuleVector w(rxy, {parse_poly(rxy, "x^2"), Polynomial::zero(rxy)});
  CHECK(submodule_contains({g1}, w));
}

TEST_CASE("kernel over a quotient ring picks up relation syzygies") {
  PolyRingPtr rxy = PolyRing::create(2, {"x", "y"});
  std::vector<Polynomial> rels = {parse_poly(rxy, "x^2"), parse_poly(rxy, "x*y"),
                                  parse_poly(rxy, "y^2")};
  PolyMatrix m = row_matrix(rxy, {parse_poly(rxy, "x"), parse_poly(rxy, "y")});
  std::vector<ModuleVector> kernel = module_kernel(m, rels);
  // over the truncated ring the kernel is m + m (componentwise)
  ModuleVector vx(rxy, {parse_poly(rxy, "x"), Polynomial::zero(rxy)});
  ModuleVector vy(rxy, {Polynomial::zero(rxy), parse_poly(rxy, "y")});
  CHECK(submodule_contains(kernel, vx, rels));
  CHECK(submodule_contains(kernel, vy, rels));
  ModuleVector unit(rxy, {parse_poly(rxy, "1"), Polynomial::zero(rxy)});
  CHECK_FALSE(submodule_contains(kernel, unit, rels));
  // soundness of every generator
  for (const auto& v : kernel) {
    ModuleVector img = m.apply(v);
    for (std::size_t r = 0; r < 1; ++r) {
      CHECK(normal_form(img.component(r), rels).is_zero());
    }
  }
  // capped completeness against the linear solve
  for (const auto& v : capped_kernel_solve(m, rels, 2)) {
    CHECK(submodule_contains(kernel, v, rels));
  }
}

TEST_CASE("kernel of a 2x2 matrix is sound and degree-2 complete") {
  PolyRingPtr rxy = PolyRing::create(3, {"x", "y"});
  PolyMatrix m(rxy, 2, 2);
  m.at(0, 0) = parse_poly(rxy, "x");
  m.at(0, 1) = parse_poly(rxy, "y");
  m.at(1, 0) = parse_poly(rxy, "y");
  m.at(1, 1) = parse_poly(rxy, "x");
  std::vector<ModuleVector> kernel = module_kernel(m);
  for (const auto& v : kernel) CHECK(m.apply(v).is_zero());
  for (const auto& v : capped_kernel_solve(m, {}, 2)) {
    CHECK(submodule_contains(kernel, v));
  }
}
