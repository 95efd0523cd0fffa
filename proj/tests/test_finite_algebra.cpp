#include <doctest.h>

#include "fpd/families.hpp"
#include "fpd/finite_algebra.hpp"

using namespace fpd;

namespace {

AlgebraPtr trunc_ring() { return family_trunc(2, 2, 2); }

}  // namespace

TEST_CASE("structure-constant construction validates the axioms") {
  SUBCASE("the base field") {
    AlgebraPtr f2 = FiniteAlgebra::create(2, {"u"}, {{Row{1}}}, Row{1});
    CHECK(f2->dim() == 1);
    CHECK(f2->mul({1}, {1}) == Row{1});
  }
  SUBCASE("idempotent coordinates for F_2 x F_2") {
    std::vector<std::vector<Row>> tbl = {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}};
    AlgebraPtr a = FiniteAlgebra::create(2, {"e1", "e2"}, tbl, {1, 1});
    CHECK(a->mul({1, 0}, {0, 1}) == Row{0, 0});
  }
  SUBCASE("a non-associative table is rejected") {
    // a*a = b, a*b = 1, b*b = 0: then (a*b)*b = b while a*(b*b) = 0
    std::vector<std::vector<Row>> tbl = {
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
        {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
        {{0, 0, 1}, {1, 0, 0}, {0, 0, 0}}};
    CHECK_THROWS_AS(FiniteAlgebra::create(2, {"one", "a", "b"}, tbl, {1, 0, 0}), NotAssociative);
  }
  SUBCASE("a non-commutative table is rejected") {
    std::vector<std::vector<Row>> tbl = {{{1, 0}, {0, 1}}, {{0, 0}, {0, 0}}};
    CHECK_THROWS_AS(FiniteAlgebra::create(2, {"one", "e"}, tbl, {1, 0}), NotCommutative);
  }
  SUBCASE("a broken unit is rejected") {
    std::vector<std::vector<Row>> tbl = {{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}};
    CHECK_THROWS_AS(FiniteAlgebra::create(2, {"one", "e"}, tbl, {1, 0}), BadUnit);
  }
}

TEST_CASE("algebra_from_zero_dim_quotient on the stock examples") {
  SUBCASE("truncated polynomial square") {
    AlgebraPtr R = trunc_ring();
    CHECK(R->dim() == 3);
    Row x = evaluate_element(R, "x");
    Row y = evaluate_element(R, "y");
    CHECK(R->mul(x, x) == Row(3, 0));
    CHECK(R->mul(x, y) == Row(3, 0));
  }
  SUBCASE("dual numbers") {
    AlgebraPtr R = family_chain(2, 2);
    CHECK(R->dim() == 2);
    Row x = evaluate_element(R, "x");
    CHECK(R->mul(x, x) == Row(2, 0));
  }
  SUBCASE("quotient by the variable is the base field") {
    PolyRingPtr rx = PolyRing::create(2, {"x"});
    AlgebraPtr R = algebra_from_zero_dim_quotient(rx, {parse_poly(rx, "x")});
    CHECK(R->dim() == 1);
  }
  SUBCASE("infinite quotients are rejected") {
    PolyRingPtr rxy = PolyRing::create(2, {"x", "y"});
    CHECK_THROWS_AS(algebra_from_zero_dim_quotient(rxy, {parse_poly(rxy, "x")}),
                    InfiniteDimensional);
  }
}

TEST_CASE("ideal_closure on the stock examples") {
  AlgebraPtr R = trunc_ring();
  CHECK(ideal_closure(R, {R->unit()}).is_whole_ring());
  AlgIdeal ix = ideal_closure(R, {evaluate_element(R, "x")});
  CHECK(ix.dim() == 1);
  CHECK(ideal_closure(R, {}).is_zero());
}

TEST_CASE("annihilator on the stock examples") {
  AlgebraPtr R = trunc_ring();
  AlgIdeal m = ideal_closure(R, {evaluate_element(R, "x"), evaluate_element(R, "y")});
  AlgIdeal ann = annihilator(R, m);
  CHECK(ann.dim() == 2);
  CHECK(ann.space == m.space);
  CHECK(annihilator(R, whole_ring_ideal(R)).is_zero());
  CHECK(annihilator(R, zero_ideal(R)).is_whole_ring());
}

TEST_CASE("quotient_algebra on the stock examples") {
  AlgebraPtr R = family_chain(2, 2);
  SUBCASE("by the zero ideal") {
    QuotientAlgebra q = quotient_algebra(R, zero_ideal(R));
    CHECK(q.algebra->dim() == 2);
    CHECK(q.algebra->table() == R->table());
  }
  SUBCASE("kill the nilpotent") {
    AlgIdeal ix = ideal_closure(R, {evaluate_element(R, "x")});
    QuotientAlgebra q = quotient_algebra(R, ix);
    CHECK(q.algebra->dim() == 1);
    CHECK(q.algebra->mul({1}, {1}) == Row{1});
  }
  SUBCASE("by the whole ring") {
    QuotientAlgebra q = quotient_algebra(R, whole_ring_ideal(R));
    CHECK(q.algebra->dim() == 0);
    CHECK(q.algebra->is_zero_algebra());
    CHECK_THROWS_AS(ideal_closure(q.algebra, {}), Error);
  }
}

TEST_CASE("local_decompose on the stock examples") {
  SUBCASE("product of fields splits") {
    std::vector<LocalFactor> f = local_decompose(family_field_product(2, 2));
    REQUIRE(f.size() == 2);
    CHECK(f[0].socle_dim == 1);
    CHECK(f[1].socle_dim == 1);
    CHECK(f[0].gorenstein);
  }
  SUBCASE("truncated ring is local with a fat socle") {
    std::vector<LocalFactor> f = local_decompose(trunc_ring());
    REQUIRE(f.size() == 1);
    CHECK(f[0].maximal_ideal.dim() == 2);
    CHECK(f[0].socle_dim == 2);
    CHECK_FALSE(f[0].gorenstein);
  }
  SUBCASE("chain ring socle is simple") {
    std::vector<LocalFactor> f = local_decompose(family_chain(3, 3));
    REQUIRE(f.size() == 1);
    CHECK(f[0].maximal_ideal.dim() == 2);
    CHECK(f[0].socle_dim == 1);
    CHECK(f[0].gorenstein);
  }
  SUBCASE("an extension field is one Gorenstein factor") {
    // F_4 = F_2[x]/(x^2+x+1)
    PolyRingPtr rx = PolyRing::create(2, {"x"});
    AlgebraPtr f4 = algebra_from_zero_dim_quotient(rx, {parse_poly(rx, "x^2 + x + 1")});
    REQUIRE(f4->dim() == 2);
    std::vector<LocalFactor> f = local_decompose(f4);
    REQUIRE(f.size() == 1);
    CHECK(f[0].residue_dim == 2);
    CHECK(f[0].socle_dim == 2);  // F_p-dimension of the whole field
    CHECK(f[0].gorenstein);      // one-dimensional over the residue field
  }
}

TEST_CASE("enumerate_ideals on the stock examples") {
  CHECK(enumerate_ideals(family_chain(2, 2)).size() == 3);
  CHECK(enumerate_ideals(trunc_ring()).size() == 6);
  CHECK(enumerate_ideals(family_field_product(2, 1)).size() == 2);
  SUBCASE("budget guard") {
    CHECK_THROWS_AS(enumerate_ideals(family_trunc(2, 2, 3), 8), BudgetExceeded);
  }
  SUBCASE("deterministic order") {
    std::vector<AlgIdeal> a = enumerate_ideals(trunc_ring());
    std::vector<AlgIdeal> b = enumerate_ideals(trunc_ring());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].dim() <= a[i].dim());
  }
}

TEST_CASE("idealization on the stock examples") {
  SUBCASE("the base field by itself gives dual numbers") {
    AlgebraPtr f2 = family_field_product(2, 1);
    AlgebraPtr ext = idealization(f2, FiniteModule::regular(f2));
    AlgebraPtr chain = family_chain(2, 2);
    CHECK(ext->table() == chain->table());
    CHECK(ext->unit() == chain->unit());
  }
  SUBCASE("by the zero module") {
    AlgebraPtr R = family_chain(2, 2);
    AlgebraPtr ext = idealization(R, FiniteModule::zero(R));
    CHECK(ext->dim() == R->dim());
    CHECK(ext->table() == R->table());
  }
  SUBCASE("dual numbers by the residue field") {
    AlgebraPtr R = family_chain(2, 2);
    AlgebraPtr ext = family_idealization(R, IdealizationModule::ResidueField);
    CHECK(ext->dim() == 3);
    std::vector<LocalFactor> f = local_decompose(ext);
    REQUIRE(f.size() == 1);
    CHECK(f[0].maximal_ideal.dim() == 2);
    // x*t = 0 and x^2 = 0, so the square of the maximal ideal vanishes
    CHECK(f[0].socle_dim == 2);
  }
}

TEST_CASE("module validation") {
  AlgebraPtr R = family_chain(2, 2);
  SUBCASE("regular and quotient modules validate") {
    CHECK(FiniteModule::regular(R).dim() == 2);
    AlgIdeal ix = ideal_closure(R, {evaluate_element(R, "x")});
    FiniteModule k = FiniteModule::quotient(R, ix);
    CHECK(k.dim() == 1);
    Row x = evaluate_element(R, "x");
    CHECK(k.act(x).is_zero());
  }
  SUBCASE("an action violating the table is rejected") {
    // let x act as the identity: x*x = 0 would need identity^2 = 0
    std::vector<FpMatrix> bad = {FpMatrix::identity(1, 2), FpMatrix::identity(1, 2)};
    CHECK_THROWS_AS(FiniteModule(R, 1, bad), NotAssociative);
  }
}

TEST_CASE("double annihilator and socle facts across a corpus") {
  for (const NamedRing& nr : builtin_corpus()) {
    const AlgebraPtr& R = nr.ring;
    for (const AlgIdeal& I : enumerate_ideals(R)) {
      AlgIdeal ann = annihilator(R, I);
      CHECK(annihilator(R, ann).space.contains(I.space));
      CHECK(ann.space.contains_vector(R->unit()) == I.is_zero());
    }
    for (const LocalFactor& f : local_decompose(R)) {
      CHECK(f.socle_dim > 0);
      // every proper ideal inside the maximal ideal has an annihilator
      // at least as big as the socle
      AlgIdeal soc = annihilator(R, f.maximal_ideal);
      CHECK(soc.dim() > 0);
    }
  }
}
