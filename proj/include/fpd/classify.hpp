#ifndef FPD_CLASSIFY_HPP
#define FPD_CLASSIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpd/resolution.hpp"

namespace fpd {

enum class Tri { True, False, Inconclusive };
std::string tri_to_string(Tri t);

struct GVVerdict {
  std::string ideal_desc;
  bool hom_zero;
  bool ext1_zero;
  bool is_gv;  // = hom_zero && ext1_zero
};

GVVerdict is_gv_ideal_finite(AlgebraPtr R, const AlgIdeal& J, std::size_t budget = 4096);
GVVerdict is_gv_ideal_poly(const PolyQuotient& Rq, const std::vector<Polynomial>& J_gens,
                           std::size_t max_rank = 64);

struct DWResult {
  bool is_dw;
  std::optional<AlgIdeal> proper_gv_witness;
};

// Sweeps the whole ideal lattice for proper GV-ideals.
DWResult is_dw(AlgebraPtr R, std::size_t budget = 4096);

// True iff J_gens generate a proper GV-ideal of the polynomial
// quotient ring, certifying that the ring is not DW (so its small
// finitistic dimension is at least 2). Throws ImproperIdeal when the
// generators span the whole ring.
bool dw_witness_poly(const PolyQuotient& Rq, const std::vector<Polynomial>& J_gens,
                     std::size_t max_rank = 64);

struct FpdValue {
  bool established;   // false = not established at the cutoff (never claimed infinite)
  std::size_t value;  // valid when established

  std::string to_string() const {
    return established ? std::to_string(value) : "not-established";
  }
};

struct FpdResult {
  FpdValue value;
  std::size_t method_grade;  // sup of Koszul grades over the maximal ideals
  std::size_t method_ext;    // least d passing the Ext-vanishing quantifier
  bool agree;
};

// Both characterizations of the small finitistic dimension, cross-checked.
FpdResult fpd_finite(AlgebraPtr R, std::size_t d_max = 6, std::size_t budget = 4096);

// max Koszul grade over the supplied maximal ideals; a lower bound for
// the small finitistic dimension since Max(R) is not enumerated.
std::size_t fpd_lower_bound_poly(PolyRingPtr ring,
                                 const std::vector<std::vector<Polynomial>>& maximal_ideals);

struct WndResult {
  bool holds;
  std::optional<AlgIdeal> counterexample;
  std::string detail;
};

// For every ideal I: Ext^i(R/I, R) = 0 for i = 0..d must force I = R
// and vanishing up to the cutoff; the quantifier outcome must match
// fPD(R) <= d in both directions.
WndResult verify_theorem_wnd(AlgebraPtr R, std::size_t d, std::size_t cutoff,
                             std::size_t budget = 4096);

struct StrongWResult {
  bool is_strong_w;
  std::optional<std::pair<std::string, std::size_t>> witness;  // (ideal, failing i)
};

// Ext^i(R/J, R) = 0 for every GV-ideal J and 2 <= i <= cutoff.
StrongWResult strong_w_check_finite(AlgebraPtr R, std::size_t cutoff, std::size_t budget = 4096);
StrongWResult strong_w_check_poly(const PolyQuotient& Rq,
                                  const std::vector<std::vector<Polynomial>>& candidate_gv_ideals,
                                  std::size_t cutoff, std::size_t max_rank = 64);

struct Regularity {
  bool regular;      // contains a non-zerodivisor
  bool semiregular;  // has zero annihilator
};

Regularity ideal_regularity(AlgebraPtr R, const AlgIdeal& I, std::size_t budget = 4096);

// Via pd(R/I) <= 1; exact on the finite backend (minimal resolutions
// over the local factors decide freeness of the first syzygy).
Tri is_projective_ideal(AlgebraPtr R, const AlgIdeal& I, std::size_t cutoff = 6,
                        std::size_t budget = 4096);

struct PruferWitness {
  std::string ideal_desc;
  std::string reason;
};

struct PruferResult {
  bool prufer;
  bool strong_prufer;
  std::vector<PruferWitness> witnesses;
};

PruferResult prufer_classify(AlgebraPtr R, std::size_t cutoff = 6, std::size_t budget = 4096);

struct Weak1dResult {
  Tri is_weak_1d;
  bool implies_fpd_le_d_verified;
  std::optional<AlgIdeal> witness;
};

// pd(R/I) <= d for every ideal I; when true, asserts fPD(R) <= d.
Weak1dResult weak_1d_mahdou_check(AlgebraPtr R, std::size_t d, std::size_t cutoff = 6,
                                  std::size_t budget = 4096);

struct FpdVsIdResult {
  bool holds;
  FpdResult fpd;
  Extended self_injective;
  std::vector<bool> factor_gorenstein;
};

FpdVsIdResult verify_fpd_le_selfinjdim(AlgebraPtr R, std::size_t d_max = 6,
                                       std::size_t budget = 4096);

struct ClassifierReport {
  std::string ring_desc;
  FpdResult fpd{};
  std::vector<GVVerdict> gv_ideals;  // verdicts for every ideal of the lattice
  bool is_dw = false;
  std::optional<std::string> dw_witness;
  bool strong_w_ok = false;
  Extended self_injective_dim = Extended::finite(0);
  std::vector<bool> gorenstein_factors;
  bool prufer = false;
  bool strong_prufer = false;
  std::vector<PruferWitness> witnesses;
  Weak1dResult weak_10{Tri::Inconclusive, false, std::nullopt};  // d = 0 cyclic pd check
};

ClassifierReport classify_ring(AlgebraPtr R, std::size_t cutoff = 6, std::size_t budget = 4096);

}  // namespace fpd

#endif  // FPD_CLASSIFY_HPP
