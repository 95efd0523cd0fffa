#include <doctest.h>

#include "fpd/families.hpp"
#include "fpd/resolution.hpp"

using namespace fpd;

namespace {

AlgIdeal principal(const AlgebraPtr& R, const std::string& text) {
  return ideal_closure(R, {evaluate_element(R, text)});
}

}  // namespace

TEST_CASE("free resolutions on the stock examples") {
  SUBCASE("the regular module is its own cover") {
    AlgebraPtr R = family_chain(2, 2);
    FreeResolution res = free_resolution_finite(R, FiniteModule::regular(R), 4,
                                                ResolutionStyle::Minimal);
    CHECK(res.ranks == std::vector<std::size_t>{1});
    CHECK(res.complete_at == 0);
    CHECK(res.minimal);
  }
  SUBCASE("periodic syzygies over the dual numbers") {
    AlgebraPtr R = family_chain(2, 2);
    FiniteModule k = FiniteModule::quotient(R, principal(R, "x"));
    FreeResolution res = free_resolution_finite(R, k, 5, ResolutionStyle::Minimal);
    CHECK(res.ranks == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
    CHECK_FALSE(res.complete_at.has_value());
    // minimality: every differential entry lies in the maximal ideal
    std::vector<LocalFactor> f = local_decompose(R);
    for (const auto& d : res.diffs) {
      for (const Row& entry : d) {
        CHECK(f[0].maximal_ideal.space.contains_vector(entry));
      }
    }
  }
  SUBCASE("doubling ranks over the truncated ring") {
    AlgebraPtr R = family_trunc(2, 2, 2);
    std::vector<LocalFactor> f = local_decompose(R);
    FiniteModule k = FiniteModule::quotient(R, f[0].maximal_ideal);
    FreeResolution res = free_resolution_finite(R, k, 3, ResolutionStyle::Minimal);
    CHECK(res.ranks == std::vector<std::size_t>{1, 2, 4, 8});
  }
  SUBCASE("stages are exact: image spans the kernel") {
    AlgebraPtr R = family_trunc(2, 2, 2);
    std::vector<LocalFactor> f = local_decompose(R);
    FiniteModule k = FiniteModule::quotient(R, f[0].maximal_ideal);
    for (ResolutionStyle style : {ResolutionStyle::Minimal, ResolutionStyle::Redundant}) {
      FreeResolution res = free_resolution_finite(R, k, 3, style);
      const std::size_t d = R->dim();
      FiniteModule reg = FiniteModule::regular(R);
      for (std::size_t i = 2; i <= res.stages(); ++i) {
        FpMatrix up = expand_element_matrix(reg, res.diffs[i - 1], res.rank(i - 1), res.rank(i));
        FpMatrix down = expand_element_matrix(reg, res.diffs[i - 2], res.rank(i - 2),
                                              res.rank(i - 1));
        Decomposition dd = decompose(down);
        Decomposition du = decompose(up);
        CHECK(du.image == dd.kernel);
        CHECK(du.image.ambient_dim() == res.rank(i - 1) * d);
      }
    }
  }
}

TEST_CASE("ext_dims_finite on the stock examples") {
  SUBCASE("free modules have no higher Ext") {
    AlgebraPtr R = family_trunc(2, 2, 2);
    std::vector<std::size_t> dims = ext_dims_finite(R, FiniteModule::regular(R), 4);
    CHECK(dims == std::vector<std::size_t>{3, 0, 0, 0, 0});
  }
  SUBCASE("residue field of the truncated ring") {
    AlgebraPtr R = family_trunc(2, 2, 2);
    std::vector<LocalFactor> f = local_decompose(R);
    FiniteModule k = FiniteModule::quotient(R, f[0].maximal_ideal);
    std::vector<std::size_t> dims = ext_dims_finite(R, k, 4);
    CHECK(dims[0] == 2);  // Hom(R/m, R) = ann(m)
    for (std::size_t i = 0; i <= 4; ++i) CHECK(dims[i] > 0);
    CHECK(dims == ext_dims_finite(R, k, 4, ResolutionStyle::Redundant));
  }
  SUBCASE("the Hom complex of the periodic resolution is exact upstairs") {
    // over the self-injective dual numbers: Hom of the periodic
    // resolution is x -> x -> x, whose kernel equals its image, so
    // only Ext^0 = ann(x) survives
    AlgebraPtr R = family_chain(2, 2);
    FiniteModule k = FiniteModule::quotient(R, principal(R, "x"));
    std::vector<std::size_t> dims = ext_dims_finite(R, k, 5);
    CHECK(dims == std::vector<std::size_t>{1, 0, 0, 0, 0, 0});
    CHECK(dims == ext_dims_finite(R, k, 5, ResolutionStyle::Redundant));
  }
  SUBCASE("zero module") {
    AlgebraPtr R = family_chain(2, 2);
    std::vector<std::size_t> dims = ext_dims_finite(R, FiniteModule::zero(R), 3);
    CHECK(dims == std::vector<std::size_t>{0, 0, 0, 0});
  }
}

TEST_CASE("pd_cutoff on the stock examples") {
  SUBCASE("free module") {
    AlgebraPtr R = family_chain(2, 2);
    PdResult pd = pd_cutoff(R, FiniteModule::regular(R), 6);
    CHECK_FALSE(pd.exceeds_cutoff);
    CHECK(pd.value == 0);
  }
  SUBCASE("idempotent-generated quotients are projective") {
    AlgebraPtr R = family_field_product(2, 2);
    FiniteModule M = FiniteModule::quotient(R, principal(R, "e1"));
    PdResult pd = pd_cutoff(R, M, 6);
    CHECK_FALSE(pd.exceeds_cutoff);
    CHECK(pd.value == 0);
  }
  SUBCASE("the residue field of the dual numbers never resolves") {
    AlgebraPtr R = family_chain(2, 2);
    FiniteModule k = FiniteModule::quotient(R, principal(R, "x"));
    PdResult pd = pd_cutoff(R, k, 6);
    CHECK(pd.exceeds_cutoff);
  }
}

TEST_CASE("self-injective dimension and the Baer oracle") {
  struct Case {
    AlgebraPtr ring;
    bool self_injective;
  };
  std::vector<Case> cases = {{family_chain(2, 2), true},
                             {family_trunc(2, 2, 2), false},
                             {family_field_product(2, 2), true},
                             {family_chain(3, 3), true},
                             {family_idealization(family_chain(2, 2),
                                                  IdealizationModule::ResidueField),
                              false}};
  for (const Case& c : cases) {
    SelfInjectiveDim inj = self_injective_dim_finite(c.ring);
    CHECK(inj.dim.is_infinite() == !c.self_injective);
    CHECK(baer_self_injective(c.ring) == c.self_injective);
  }
}

TEST_CASE("ext_is_zero_poly on the stock examples") {
  PolyRingPtr rxy = PolyRing::create(2, {"x", "y"});
  PolyQuotient Rxy = make_poly_quotient(rxy);
  std::vector<Polynomial> m = {parse_poly(rxy, "x"), parse_poly(rxy, "y")};
  CHECK(ext_is_zero_poly(Rxy, m, 0));
  CHECK(ext_is_zero_poly(Rxy, m, 1));
  CHECK_FALSE(ext_is_zero_poly(Rxy, m, 2));

  PolyRingPtr rx = PolyRing::create(2, {"x"});
  PolyQuotient Rx = make_poly_quotient(rx);
  CHECK(ext_is_zero_poly(Rx, {parse_poly(rx, "x")}, 0));
  CHECK_FALSE(ext_is_zero_poly(Rx, {parse_poly(rx, "x")}, 1));

  SUBCASE("the unit ideal kills the module") {
    for (std::size_t i = 0; i <= 3; ++i) {
      CHECK(ext_is_zero_poly(Rxy, {parse_poly(rxy, "1")}, i));
    }
  }
  SUBCASE("rank guard") {
    CHECK_THROWS_AS(ext_is_zero_poly(Rxy, m, 2, 0), ResolutionTooLarge);
  }
}

TEST_CASE("grade equals the least nonvanishing Ext index over corpus lattices") {
  for (const NamedRing& nr : builtin_corpus()) {
    const AlgebraPtr& R = nr.ring;
    FiniteModule reg = FiniteModule::regular(R);
    for (const AlgIdeal& I : enumerate_ideals(R)) {
      if (I.dim() == 0) continue;
      std::vector<std::size_t> dims = ext_dims_finite(R, FiniteModule::quotient(R, I), 4);
      std::size_t least = 0;
      while (least <= 4 && dims[least] == 0) ++least;
      Extended grade = koszul_grade_finite(R, I.space.basis(), reg);
      if (least > 4) {
        CHECK(grade.is_infinite());
      } else {
        CHECK(grade == Extended::finite(least));
      }
    }
  }
}
