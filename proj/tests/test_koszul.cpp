#include <doctest.h>

#include <random>

#include "fpd/families.hpp"
#include "fpd/koszul.hpp"

using namespace fpd;

TEST_CASE("differential entries follow the contraction formula") {
  AlgebraPtr R = family_trunc(2, 2, 2);
  Row x = evaluate_element(R, "x");
  Row y = evaluate_element(R, "y");
  SUBCASE("length one") {
    FiniteKoszul K = build_koszul(R, {x});
    REQUIRE(K.diffs.size() == 1);
    CHECK(K.diff_entry(1, 0, 0) == x);
  }
  SUBCASE("length two") {
    FiniteKoszul K = build_koszul(R, {x, y});
    // d_1 = (x  y)
    CHECK(K.diff_entry(1, 0, 0) == x);
    CHECK(K.diff_entry(1, 0, 1) == y);
    // d_2(e1^e2) = x e2 - y e1 (char 2: signs collapse)
    CHECK(K.diff_entry(2, 0, 0) == y);
    CHECK(K.diff_entry(2, 1, 0) == x);
  }
  SUBCASE("length three signs alternate") {
    AlgebraPtr S = family_chain(3, 3);
    Row a = evaluate_element(S, "x");
    Row b = evaluate_element(S, "x^2");
    Row c = evaluate_element(S, "2*x");
    FiniteKoszul K = build_koszul(S, {a, b, c});
    // d_3(e123) = a e23 - b e13 + c e12; rows are ordered e12, e13, e23
    Row minus_b = b;
    for (auto& v : minus_b) v = fpmod::neg(v, 3);
    CHECK(K.diff_entry(3, 2, 0) == a);
    CHECK(K.diff_entry(3, 1, 0) == minus_b);
    CHECK(K.diff_entry(3, 0, 0) == c);
  }
  SUBCASE("the empty sequence is rejected") {
    CHECK_THROWS_AS(build_koszul(R, {}), EmptySequence);
  }
}

TEST_CASE("koszul_homology on the stock examples") {
  SUBCASE("dual numbers") {
    AlgebraPtr R = family_chain(2, 2);
    FiniteKoszul K = build_koszul(R, {evaluate_element(R, "x")});
    HomologyTable t = koszul_homology(K, FiniteModule::regular(R));
    CHECK(t.homology == std::vector<std::size_t>{1, 1});
    CHECK(t.cohomology == std::vector<std::size_t>{1, 1});
  }
  SUBCASE("truncated ring with its maximal ideal") {
    AlgebraPtr R = family_trunc(2, 2, 2);
    FiniteKoszul K = build_koszul(R, {evaluate_element(R, "x"), evaluate_element(R, "y")});
    HomologyTable t = koszul_homology(K, FiniteModule::regular(R));
    CHECK(t.homology == std::vector<std::size_t>{1, 3, 2});
    CHECK(t.cohomology == std::vector<std::size_t>{2, 3, 1});
  }
  SUBCASE("zero module") {
    AlgebraPtr R = family_chain(2, 2);
    FiniteKoszul K = build_koszul(R, {evaluate_element(R, "x")});
    HomologyTable t = koszul_homology(K, FiniteModule::zero(R));
    CHECK(t.homology == std::vector<std::size_t>{0, 0});
    CHECK(t.cohomology == std::vector<std::size_t>{0, 0});
  }
}

TEST_CASE("poly-backend vanishing on the regular sequence") {
  PolyRingPtr rxy = PolyRing::create(2, {"x", "y"});
  PolyQuotient Rq = make_poly_quotient(rxy);
  PolyKoszul K = build_koszul_poly(Rq, {parse_poly(rxy, "x"), parse_poly(rxy, "y")});
  CHECK(koszul_cohomology_vanishes(K, 0));
  CHECK(koszul_cohomology_vanishes(K, 1));
  CHECK_FALSE(koszul_cohomology_vanishes(K, 2));
  CHECK_THROWS_AS(koszul_cohomology_vanishes(K, 3), IndexOutOfRange);
}

TEST_CASE("koszul_grade on the stock examples") {
  SUBCASE("annihilated maximal ideal has grade zero") {
    AlgebraPtr R = family_trunc(2, 2, 2);
    Extended g = koszul_grade_finite(R, {evaluate_element(R, "x"), evaluate_element(R, "y")},
                                     FiniteModule::regular(R));
    CHECK(g == Extended::finite(0));
  }
  SUBCASE("regular sequences over polynomial rings") {
    PolyRingPtr rxy = PolyRing::create(2, {"x", "y"});
    CHECK(koszul_grade_poly(make_poly_quotient(rxy),
                            {parse_poly(rxy, "x"), parse_poly(rxy, "y")}) == Extended::finite(2));
    PolyRingPtr rx = PolyRing::create(2, {"x"});
    CHECK(koszul_grade_poly(make_poly_quotient(rx), {parse_poly(rx, "x")}) == Extended::finite(1));
  }
  SUBCASE("the unit ideal has infinite grade") {
    AlgebraPtr R = family_chain(2, 2);
    Extended g = koszul_grade_finite(R, {R->unit()}, FiniteModule::regular(R));
    CHECK(g.is_infinite());
    PolyRingPtr rx = PolyRing::create(2, {"x"});
    CHECK(koszul_grade_poly(make_poly_quotient(rx), {parse_poly(rx, "1")}).is_infinite());
  }
}

TEST_CASE("duality, endpoints and Euler characteristic on a sampled corpus") {
  std::vector<AlgebraPtr> corpus = random_algebra_corpus(3, 24);
  std::mt19937_64 rng(4);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const AlgebraPtr& R = corpus[i];
    std::size_t n = 1 + i % 3;
    std::vector<Row> seq;
    for (std::size_t k = 0; k < n; ++k) seq.push_back(random_element(rng, R));
    FiniteModule M = FiniteModule::regular(R);
    FiniteKoszul K = build_koszul(R, seq);
    HomologyTable t = koszul_homology(K, M);
    long chain = 0, homol = 0;
    for (std::size_t p = 0; p <= n; ++p) {
      CHECK(t.homology[p] == t.cohomology[n - p]);
      long sign = (p % 2 == 0) ? 1 : -1;
      chain += sign * static_cast<long>(K.shape.rank(p) * M.dim());
      homol += sign * static_cast<long>(t.homology[p]);
    }
    CHECK(chain == homol);
    CHECK(t.homology[0] == M.dim() - module_image_of(M, seq).dim());
    CHECK(t.homology[n] == module_annihilator_of(M, seq).dim());
  }
}

TEST_CASE("grade does not depend on the generating set (finite backend)") {
  AlgebraPtr R = family_trunc(2, 2, 2);
  FiniteModule reg = FiniteModule::regular(R);
  Row x = evaluate_element(R, "x"), y = evaluate_element(R, "y");
  Row xy = evaluate_element(R, "x + y");
  Extended a = koszul_grade_finite(R, {x, y}, reg);
  Extended b = koszul_grade_finite(R, {x, y, xy}, reg);
  Extended c = koszul_grade_finite(R, {xy, y}, reg);
  CHECK(a == b);
  CHECK(a == c);
}
