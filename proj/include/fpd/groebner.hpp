#ifndef FPD_GROEBNER_HPP
#define FPD_GROEBNER_HPP

#include <vector>

#include "fpd/poly.hpp"

namespace fpd {

// Remainder of f under full multivariate division by gb. When gb is a
// Groebner basis of its span, the result is the unique normal form and
// equals zero exactly when f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb);

// Buchberger completion with the normal selection strategy, followed
// by inter-reduction. The output is the canonical reduced Groebner
// basis: monic, pairwise lead-term non-divisible, tails reduced,
// sorted by lead monomial (largest first). Zero generators are
// dropped; an all-zero input yields the empty basis of the zero ideal.
std::vector<Polynomial> buchberger(PolyRingPtr ring, const std::vector<Polynomial>& gens);

struct QuotientBasis {
  bool finite;
  // Standard monomials under the lead-term staircase, sorted ascending
  // in the ring order; meaningful only when finite.
  std::vector<Exponents> monomials;
};

// Monomial basis of ring/<ideal_gens>; Infinite marker when the
// quotient has infinite F_p-dimension.
QuotientBasis quotient_monomial_basis(PolyRingPtr ring, const std::vector<Polynomial>& ideal_gens);

}  // namespace fpd

#endif  // FPD_GROEBNER_HPP
