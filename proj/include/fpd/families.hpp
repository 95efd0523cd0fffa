#ifndef FPD_FAMILIES_HPP
#define FPD_FAMILIES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fpd/finite_algebra.hpp"

namespace fpd {

// F_p[x]/(x^k)
AlgebraPtr family_chain(std::uint32_t p, std::size_t k);

// F_p[x_1..x_n] modulo all monomials of total degree `deg`
AlgebraPtr family_trunc(std::uint32_t p, std::size_t n, std::size_t deg);

// F_p x ... x F_p (m factors, idempotent coordinates)
AlgebraPtr family_field_product(std::uint32_t p, std::size_t m);

enum class IdealizationModule { Regular, ResidueField };

// A(+)M for M the regular module or the residue field of a local base
AlgebraPtr family_idealization(AlgebraPtr base, IdealizationModule which,
                               std::size_t budget = 4096);

struct NamedRing {
  std::string name;
  AlgebraPtr ring;
};

// The named example rings used by the verification suite and the
// `paper-examples` command.
std::vector<NamedRing> builtin_corpus();

// Seeded corpus of randomized finite algebras (valid by construction:
// zero-dimensional quotients, products, idealizations), dim <= max_dim,
// p in {2,3,5}.
std::vector<AlgebraPtr> random_algebra_corpus(std::uint64_t seed, std::size_t count,
                                              std::size_t max_dim = 4);

// A random element of R, uniform over coordinates.
Row random_element(std::mt19937_64& rng, const AlgebraPtr& R);

}  // namespace fpd

#endif  // FPD_FAMILIES_HPP
