#ifndef FPD_RESOLUTION_HPP
#define FPD_RESOLUTION_HPP

#include <optional>
#include <vector>

#include "fpd/finite_algebra.hpp"
#include "fpd/koszul.hpp"

namespace fpd {

// How presentation generators are chosen at each stage.
//   Minimal:   Nakayama-greedy minimal generators (local rings only);
//              the resolution length then equals the projective dimension.
//   Greedy:    greedy elimination over the canonical basis; exact but
//              not necessarily minimal (any ring).
//   Redundant: the full kernel basis at every stage; the deliberately
//              fat resolution used as the independent Ext oracle.
enum class ResolutionStyle { Minimal, Greedy, Redundant };

struct FreeResolution {
  AlgebraPtr ring;
  std::vector<std::size_t> ranks;        // a_0 .. a_k
  std::vector<std::vector<Row>> diffs;   // d_i : F_i -> F_{i-1}; grid a_{i-1} x a_i of ring elements
  bool minimal;
  std::optional<std::size_t> complete_at;  // stage where the kernel vanished

  std::size_t stages() const { return ranks.empty() ? 0 : ranks.size() - 1; }
  std::size_t rank(std::size_t i) const { return i < ranks.size() ? ranks[i] : 0; }
};

// Resolves M by free modules up to `stages` differentials (d_1..d_stages),
// stopping early when a kernel vanishes. Minimal style requires a local
// ring; pass its maximal-ideal subspace via the budgeted decomposition.
FreeResolution free_resolution_finite(AlgebraPtr R, const FiniteModule& M, std::size_t stages,
                                      ResolutionStyle style = ResolutionStyle::Greedy,
                                      std::size_t budget = 4096);

// F_p-dimensions of Ext^i(M, R) for i = 0..cutoff, computed from the
// Hom complex of the given resolution.
std::vector<std::size_t> ext_dims_from_resolution(const FreeResolution& res, std::size_t cutoff);

// Ext^i(M, R) dims for i = 0..cutoff. Minimal style decomposes R into
// local factors and sums the factor-wise values; Redundant runs the
// fat resolution directly over R. The two paths are independent.
std::vector<std::size_t> ext_dims_finite(AlgebraPtr R, const FiniteModule& M, std::size_t cutoff,
                                         ResolutionStyle style = ResolutionStyle::Minimal,
                                         std::size_t budget = 4096);

struct PdResult {
  bool exceeds_cutoff;
  std::size_t value;  // valid when !exceeds_cutoff

  bool leq(std::size_t d) const { return !exceeds_cutoff && value <= d; }
};

// Exact projective dimension when the minimal factor-wise resolutions
// terminate by the cutoff; ExceedsCutoff otherwise (which certifies
// pd > cutoff, since the resolutions are minimal).
PdResult pd_cutoff(AlgebraPtr R, const FiniteModule& M, std::size_t cutoff,
                   std::size_t budget = 4096);

// The module over a local factor obtained by cutting M with the
// factor's idempotent.
FiniteModule restrict_to_factor(const LocalFactor& F, const FiniteModule& M);

struct SelfInjectiveDim {
  Extended dim;  // 0 or infinity for a finite ring
  std::vector<bool> factor_gorenstein;
};

// id_R R via the socle criterion on the local factors.
SelfInjectiveDim self_injective_dim_finite(AlgebraPtr R, std::size_t budget = 4096);

// Independent oracle: R is self-injective iff Ext^1(R/I, R) = 0 for
// every ideal I of the (enumerable) lattice.
bool baer_self_injective(AlgebraPtr R, std::size_t budget = 4096);

// ---------------------------------------------------------------------------
// polynomial backend

struct PolyResolution {
  PolyQuotient ring;
  std::vector<std::size_t> ranks;  // a_0 = 1, a_1, ...
  std::vector<PolyMatrix> diffs;   // d_i, i = 1..k
  bool complete;
};

PolyResolution poly_free_resolution(const PolyQuotient& Rq,
                                    const std::vector<Polynomial>& ideal_gens,
                                    std::size_t stages, std::size_t max_rank = 64);

// Ext^i(R/I, R) = 0 over the polynomial quotient ring?
bool ext_is_zero_poly(const PolyQuotient& Rq, const std::vector<Polynomial>& ideal_gens,
                      std::size_t i, std::size_t max_rank = 64);

}  // namespace fpd

#endif  // FPD_RESOLUTION_HPP
