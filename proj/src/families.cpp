#include "fpd/families.hpp"

namespace fpd {

namespace {

std::vector<std::string> default_vars(std::size_t n) {
  static const char* short_names[] = {"x", "y", "z"};
  std::vector<std::string> vars;
  if (n <= 3) {
    for (std::size_t i = 0; i < n; ++i) vars.push_back(short_names[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i + 1));
  }
  return vars;
}

}  // namespace

AlgebraPtr family_chain(std::uint32_t p, std::size_t k) {
  if (k == 0) throw Error("chain length must be positive");
  PolyRingPtr ring = PolyRing::create(p, {"x"});
  Exponents e{static_cast<std::uint16_t>(k)};
  return algebra_from_zero_dim_quotient(ring, {Polynomial::monomial(ring, e, 1)});
}

AlgebraPtr family_trunc(std::uint32_t p, std::size_t n, std::size_t deg) {
  if (n == 0 || deg == 0) throw Error("trunc needs positive variable count and degree");
  PolyRingPtr ring = PolyRing::create(p, default_vars(n));
  // all monomials of total degree exactly `deg`
  std::vector<Polynomial> gens;
  Exponents e(n, 0);
  e[0] = static_cast<std::uint16_t>(deg);
  while (true) {
    gens.push_back(Polynomial::monomial(ring, e, 1));
    // next composition of deg into n parts
    std::size_t i = 0;
    while (i + 1 < n && e[i] == 0) ++i;
    if (i + 1 >= n) break;
    std::uint16_t head = e[i];
    e[i] = 0;
    e[i + 1] += 1;
    e[0] = static_cast<std::uint16_t>(head - 1);
  }
  return algebra_from_zero_dim_quotient(ring, gens);
}

AlgebraPtr family_field_product(std::uint32_t p, std::size_t m) {
  if (m == 0) throw Error("field product needs at least one factor");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("e" + std::to_string(i + 1));
  std::vector<std::vector<Row>> tbl(m, std::vector<Row>(m, Row(m, 0)));
  for (std::size_t i = 0; i < m; ++i) tbl[i][i][i] = 1;
  Row unit(m, 1);
  return FiniteAlgebra::create(p, std::move(names), std::move(tbl), std::move(unit));
}

AlgebraPtr family_idealization(AlgebraPtr base, IdealizationModule which, std::size_t budget) {
  if (which == IdealizationModule::Regular) {
    return idealization(base, FiniteModule::regular(base));
  }
  std::vector<LocalFactor> factors = local_decompose(base, budget);
  if (factors.size() != 1) {
    throw Error("residue-field idealization needs a local base ring");
  }
  return idealization(base, FiniteModule::quotient(base, factors[0].maximal_ideal));
}

std::vector<NamedRing> builtin_corpus() {
  std::vector<NamedRing> corpus;
  corpus.push_back({"F2", family_field_product(2, 1)});
  corpus.push_back({"F3", family_field_product(3, 1)});
  corpus.push_back({"chain(2,2)", family_chain(2, 2)});
  corpus.push_back({"chain(2,3)", family_chain(2, 3)});
  corpus.push_back({"chain(3,3)", family_chain(3, 3)});
  corpus.push_back({"trunc(2,2,2)", family_trunc(2, 2, 2)});
  corpus.push_back({"trunc(3,2,2)", family_trunc(3, 2, 2)});
  corpus.push_back({"field_product(2,2)", family_field_product(2, 2)});
  corpus.push_back({"field_product(3,2)", family_field_product(3, 2)});
  corpus.push_back({"idealization(F2,F2)",
                    family_idealization(family_field_product(2, 1), IdealizationModule::Regular)});
  corpus.push_back({"idealization(chain(2,2),k)",
                    family_idealization(family_chain(2, 2), IdealizationModule::ResidueField)});
  corpus.push_back({"chain(2,2)xF2", direct_product(family_chain(2, 2),
                                                    family_field_product(2, 1))});
  return corpus;
}

Row random_element(std::mt19937_64& rng, const AlgebraPtr& R) {
  Row x(R->dim());
  for (auto& v : x) v = static_cast<std::uint32_t>(rng() % R->modulus());
  return x;
}

std::vector<AlgebraPtr> random_algebra_corpus(std::uint64_t seed, std::size_t count,
                                              std::size_t max_dim) {
  std::mt19937_64 rng(seed);
  const std::uint32_t primes[] = {2, 3, 5};
  std::vector<AlgebraPtr> out;

  auto random_quotient = [&](std::uint32_t p) -> AlgebraPtr {
    for (int attempt = 0; attempt < 32; ++attempt) {
      std::size_t nvars = 1 + rng() % 2;
      PolyRingPtr ring = PolyRing::create(p, default_vars(nvars));
      std::vector<Polynomial> gens;
      for (std::size_t v = 0; v < nvars; ++v) {
        Exponents e(nvars, 0);
        e[v] = static_cast<std::uint16_t>(1 + rng() % 3);
        gens.push_back(Polynomial::monomial(ring, e, 1));
      }
      std::size_t extra = rng() % 3;
      for (std::size_t k = 0; k < extra; ++k) {
        std::vector<Polynomial::Term> terms;
        std::size_t nterms = 1 + rng() % 2;
        for (std::size_t t = 0; t < nterms; ++t) {
          Exponents e(nvars, 0);
          for (std::size_t v = 0; v < nvars; ++v) e[v] = static_cast<std::uint16_t>(rng() % 3);
          terms.emplace_back(std::move(e), static_cast<std::uint32_t>(rng() % p));
        }
        Polynomial f = Polynomial::from_terms(ring, std::move(terms));
        if (!f.is_zero() && !f.is_constant()) gens.push_back(std::move(f));
      }
      try {
        AlgebraPtr A = algebra_from_zero_dim_quotient(ring, gens);
        if (A->dim() >= 1 && A->dim() <= max_dim) return A;
      } catch (const Error&) {
        // unit ideal or infinite quotient: retry
      }
    }
    return family_chain(p, 2);
  };

  while (out.size() < count) {
    std::uint32_t p = primes[rng() % 3];
    switch (rng() % 4) {
      case 0:
        out.push_back(random_quotient(p));
        break;
      case 1: {
        std::size_t m = 1 + rng() % max_dim;
        out.push_back(family_field_product(p, m));
        break;
      }
      case 2: {
        AlgebraPtr a = random_quotient(p);
        AlgebraPtr b = random_quotient(p);
        if (a->dim() + b->dim() <= max_dim) {
          out.push_back(direct_product(a, b));
        } else {
          out.push_back(a);
        }
        break;
      }
      default: {
        AlgebraPtr a = random_quotient(p);
        if (2 * a->dim() <= max_dim) {
          out.push_back(family_idealization(a, IdealizationModule::Regular));
        } else {
          out.push_back(a);
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace fpd
