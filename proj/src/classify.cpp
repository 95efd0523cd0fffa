#include "fpd/classify.hpp"

#include <algorithm>

namespace fpd {

std::string tri_to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    default: return "inconclusive";
  }
}

GVVerdict is_gv_ideal_finite(AlgebraPtr R, const AlgIdeal& J, std::size_t budget) {
  bool hom_zero = annihilator(R, J).dim() == 0;  // Hom(R/J, R) = ann(J)
  FiniteModule M = FiniteModule::quotient(R, J);
  std::vector<std::size_t> dims = ext_dims_finite(R, M, 1, ResolutionStyle::Minimal, budget);
  bool ext1_zero = dims[1] == 0;
  return GVVerdict{J.to_string(), hom_zero, ext1_zero, hom_zero && ext1_zero};
}

GVVerdict is_gv_ideal_poly(const PolyQuotient& Rq, const std::vector<Polynomial>& J_gens,
                           std::size_t max_rank) {
  bool hom_zero = ext_is_zero_poly(Rq, J_gens, 0, max_rank);
  bool ext1_zero = ext_is_zero_poly(Rq, J_gens, 1, max_rank);
  std::string desc = "<";
  for (std::size_t i = 0; i < J_gens.size(); ++i) {
    if (i) desc += ", ";
    desc += J_gens[i].to_string();
  }
  desc += ">";
  return GVVerdict{desc, hom_zero, ext1_zero, hom_zero && ext1_zero};
}

DWResult is_dw(AlgebraPtr R, std::size_t budget) {
  std::vector<AlgIdeal> lattice = enumerate_ideals(R, budget);
  for (const AlgIdeal& J : lattice) {
    if (J.is_whole_ring()) continue;
    GVVerdict v = is_gv_ideal_finite(R, J, budget);
    if (v.is_gv) return DWResult{false, J};
  }
  return DWResult{true, std::nullopt};
}

bool dw_witness_poly(const PolyQuotient& Rq, const std::vector<Polynomial>& J_gens,
                     std::size_t max_rank) {
  if (poly_ideal_contains_one(Rq, J_gens)) {
    throw ImproperIdeal("the generators span the whole ring");
  }
  GVVerdict v = is_gv_ideal_poly(Rq, J_gens, max_rank);
  return v.is_gv;
}

FpdResult fpd_finite(AlgebraPtr R, std::size_t d_max, std::size_t budget) {
  // method 1: sup of Koszul grades of the maximal ideals
  std::vector<LocalFactor> factors = local_decompose(R, budget);
  FiniteModule reg = FiniteModule::regular(R);
  std::size_t grade_sup = 0;
  for (const LocalFactor& F : factors) {
    std::vector<Row> gens = F.maximal_ideal.space.basis();
    if (gens.empty()) {
      // the maximal ideal is zero (R is a field); grade of the zero
      // ideal on R: H^0 = ann(0) = R != 0, so the grade is 0
      continue;
    }
    Extended g = koszul_grade_finite(R, gens, reg);
    if (g.is_infinite()) {
      throw Error("maximal ideal with infinite grade on a nonzero ring");
    }
    grade_sup = std::max(grade_sup, g.value());
  }

  // method 2: least d such that no proper ideal passes the
  // Ext-vanishing window 0..d
  std::vector<AlgIdeal> lattice = enumerate_ideals(R, budget);
  std::optional<std::size_t> ext_method;
  for (std::size_t d = 0; d <= d_max; ++d) {
    bool ok = true;
    for (const AlgIdeal& I : lattice) {
      if (I.is_whole_ring()) continue;
      FiniteModule M = FiniteModule::quotient(R, I);
      std::vector<std::size_t> dims = ext_dims_finite(R, M, d, ResolutionStyle::Minimal, budget);
      bool window_zero = std::all_of(dims.begin(), dims.end(),
                                     [](std::size_t v) { return v == 0; });
      if (window_zero) {
        ok = false;  // a proper ideal slipped through the window
        break;
      }
    }
    if (ok) {
      ext_method = d;
      break;
    }
  }
  if (!ext_method.has_value()) {
    throw CutoffInconclusive("no d <= " + std::to_string(d_max) +
                             " passes the Ext-vanishing quantifier");
  }
  bool agree = grade_sup == *ext_method;
  FpdValue value{agree, grade_sup};
  return FpdResult{value, grade_sup, *ext_method, agree};
}

std::size_t fpd_lower_bound_poly(PolyRingPtr ring,
                                 const std::vector<std::vector<Polynomial>>& maximal_ideals) {
  PolyQuotient Rq = make_poly_quotient(ring);
  std::size_t best = 0;
  for (const auto& gens : maximal_ideals) {
    QuotientBasis qb = quotient_monomial_basis(ring, gens);
    if (!qb.finite || qb.monomials.size() != 1) {
      std::string desc;
      for (const auto& g : gens) desc += (desc.empty() ? "" : ", ") + g.to_string();
      throw NotMaximal("<" + desc + "> is not maximal with residue field F_p");
    }
    Extended g = koszul_grade_poly(Rq, gens);
    if (g.is_infinite()) throw Error("maximal ideal with infinite grade");
    best = std::max(best, g.value());
  }
  return best;
}

WndResult verify_theorem_wnd(AlgebraPtr R, std::size_t d, std::size_t cutoff,
                             std::size_t budget) {
  std::vector<AlgIdeal> lattice = enumerate_ideals(R, budget);
  // quantifier: every ideal whose Ext window 0..d vanishes must be R
  // itself and must vanish through the cutoff
  bool quantifier = true;
  std::optional<AlgIdeal> counterexample;
  for (const AlgIdeal& I : lattice) {
    FiniteModule M = FiniteModule::quotient(R, I);
    std::vector<std::size_t> dims =
        ext_dims_finite(R, M, std::max(d, cutoff), ResolutionStyle::Minimal, budget);
    bool window_zero = true;
    for (std::size_t i = 0; i <= d; ++i) window_zero = window_zero && dims[i] == 0;
    if (!window_zero) continue;
    bool tail_zero = true;
    for (std::size_t i = d + 1; i <= cutoff; ++i) tail_zero = tail_zero && dims[i] == 0;
    if (!I.is_whole_ring() || !tail_zero) {
      quantifier = false;
      counterexample = I;
      break;
    }
  }
  FpdResult fpd = fpd_finite(R, std::max<std::size_t>(d, 6), budget);
  bool fpd_le_d = fpd.value.established && fpd.value.value <= d;
  bool holds = quantifier == fpd_le_d;
  std::string detail = "quantifier=" + std::string(quantifier ? "true" : "false") +
                       " fpd<=d=" + std::string(fpd_le_d ? "true" : "false");
  if (quantifier) counterexample.reset();
  return WndResult{holds, counterexample, detail};
}

StrongWResult strong_w_check_finite(AlgebraPtr R, std::size_t cutoff, std::size_t budget) {
  std::vector<AlgIdeal> lattice = enumerate_ideals(R, budget);
  for (const AlgIdeal& J : lattice) {
    GVVerdict v = is_gv_ideal_finite(R, J, budget);
    if (!v.is_gv) continue;
    FiniteModule M = FiniteModule::quotient(R, J);
    std::vector<std::size_t> dims = ext_dims_finite(R, M, cutoff, ResolutionStyle::Minimal, budget);
    for (std::size_t i = 2; i <= cutoff; ++i) {
      if (dims[i] != 0) {
        return StrongWResult{false, std::make_pair(J.to_string(), i)};
      }
    }
  }
  return StrongWResult{true, std::nullopt};
}

StrongWResult strong_w_check_poly(const PolyQuotient& Rq,
                                  const std::vector<std::vector<Polynomial>>& candidate_gv_ideals,
                                  std::size_t cutoff, std::size_t max_rank) {
  for (const auto& gens : candidate_gv_ideals) {
    GVVerdict v = is_gv_ideal_poly(Rq, gens, max_rank);
    if (!v.is_gv) continue;
    for (std::size_t i = 2; i <= cutoff; ++i) {
      if (!ext_is_zero_poly(Rq, gens, i, max_rank)) {
        return StrongWResult{false, std::make_pair(v.ideal_desc, i)};
      }
    }
  }
  return StrongWResult{true, std::nullopt};
}

Regularity ideal_regularity(AlgebraPtr R, const AlgIdeal& I, std::size_t budget) {
  bool semiregular = annihilator(R, I).dim() == 0;
  // regular: some element of I is a non-zerodivisor. Enumerate the
  // elements of I through its basis coefficients.
  bool regular = false;
  const std::size_t k = I.dim();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    count *= R->modulus();
    if (count > budget) throw BudgetExceeded("ideal element enumeration", count);
  }
  for (std::uint64_t idx = 0; idx < count && !regular; ++idx) {
    Row x(R->dim(), 0);
    std::uint64_t t = idx;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t c = static_cast<std::uint32_t>(t % R->modulus());
      t /= R->modulus();
      if (c == 0) continue;
      for (std::size_t j = 0; j < R->dim(); ++j) {
        x[j] = fpmod::add(x[j], fpmod::mul(c, I.space.basis()[i][j], R->modulus()), R->modulus());
      }
    }
    if (R->is_unit_element(x)) regular = true;
  }
  return Regularity{regular, semiregular};
}

Tri is_projective_ideal(AlgebraPtr R, const AlgIdeal& I, std::size_t cutoff, std::size_t budget) {
  if (cutoff < 1) return Tri::Inconclusive;
  FiniteModule M = FiniteModule::quotient(R, I);
  PdResult pd = pd_cutoff(R, M, cutoff, budget);
  if (!pd.exceeds_cutoff) return pd.value <= 1 ? Tri::True : Tri::False;
  // minimal resolutions over the local factors make the truncation a
  // proof: pd > cutoff >= 1, so the first syzygy is not free
  return Tri::False;
}

PruferResult prufer_classify(AlgebraPtr R, std::size_t cutoff, std::size_t budget) {
  std::vector<AlgIdeal> lattice = enumerate_ideals(R, budget);
  bool prufer = true, strong_prufer = true;
  std::vector<PruferWitness> witnesses;
  for (const AlgIdeal& I : lattice) {
    Regularity reg = ideal_regularity(R, I, budget);
    if (!reg.regular && !reg.semiregular) continue;
    Tri proj = is_projective_ideal(R, I, cutoff, budget);
    if (proj == Tri::True) continue;
    const char* verdict = proj == Tri::False ? "not projective" : "projectivity inconclusive";
    if (reg.regular) {
      prufer = false;
      witnesses.push_back(PruferWitness{I.to_string(), std::string("regular ideal ") + verdict});
    }
    if (reg.semiregular) {
      strong_prufer = false;
      witnesses.push_back(
          PruferWitness{I.to_string(), std::string("semiregular ideal ") + verdict});
    }
  }
  return PruferResult{prufer, strong_prufer, std::move(witnesses)};
}

Weak1dResult weak_1d_mahdou_check(AlgebraPtr R, std::size_t d, std::size_t cutoff,
                                  std::size_t budget) {
  std::vector<AlgIdeal> lattice = enumerate_ideals(R, budget);
  Tri verdict = Tri::True;
  std::optional<AlgIdeal> witness;
  for (const AlgIdeal& I : lattice) {
    FiniteModule M = FiniteModule::quotient(R, I);
    PdResult pd = pd_cutoff(R, M, cutoff, budget);
    if (pd.exceeds_cutoff) {
      // minimal resolutions: truncation proves pd > cutoff; decisive
      // when the cutoff covers d, otherwise inconclusive
      if (cutoff >= d) {
        verdict = Tri::False;
        witness = I;
        break;
      }
      verdict = Tri::Inconclusive;
      witness = I;
      continue;
    }
    if (pd.value > d) {
      verdict = Tri::False;
      witness = I;
      break;
    }
  }
  bool implies_verified = false;
  if (verdict == Tri::True) {
    FpdResult fpd = fpd_finite(R, std::max<std::size_t>(d, 6), budget);
    implies_verified = fpd.value.established && fpd.value.value <= d;
  }
  return Weak1dResult{verdict, implies_verified, witness};
}

FpdVsIdResult verify_fpd_le_selfinjdim(AlgebraPtr R, std::size_t d_max, std::size_t budget) {
  FpdResult fpd = fpd_finite(R, d_max, budget);
  SelfInjectiveDim inj = self_injective_dim_finite(R, budget);
  bool holds = fpd.value.established &&
               Extended::finite(fpd.value.value).leq(inj.dim);
  return FpdVsIdResult{holds, fpd, inj.dim, inj.factor_gorenstein};
}

ClassifierReport classify_ring(AlgebraPtr R, std::size_t cutoff, std::size_t budget) {
  ClassifierReport rep;
  rep.ring_desc = "F_" + std::to_string(R->modulus()) + " algebra of dimension " +
                  std::to_string(R->dim());
  rep.fpd = fpd_finite(R, cutoff, budget);
  std::vector<AlgIdeal> lattice = enumerate_ideals(R, budget);
  for (const AlgIdeal& J : lattice) {
    rep.gv_ideals.push_back(is_gv_ideal_finite(R, J, budget));
  }
  DWResult dw = is_dw(R, budget);
  rep.is_dw = dw.is_dw;
  if (dw.proper_gv_witness.has_value()) rep.dw_witness = dw.proper_gv_witness->to_string();
  rep.strong_w_ok = strong_w_check_finite(R, cutoff, budget).is_strong_w;
  SelfInjectiveDim inj = self_injective_dim_finite(R, budget);
  rep.self_injective_dim = inj.dim;
  rep.gorenstein_factors = inj.factor_gorenstein;
  PruferResult pr = prufer_classify(R, cutoff, budget);
  rep.prufer = pr.prufer;
  rep.strong_prufer = pr.strong_prufer;
  rep.witnesses = pr.witnesses;
  rep.weak_10 = weak_1d_mahdou_check(R, 0, cutoff, budget);
  return rep;
}

}  // namespace fpd
