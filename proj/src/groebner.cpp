#include "fpd/groebner.hpp"

#include <algorithm>
#include <list>

namespace fpd {

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb) {
  for (const auto& g : gb) {
    if (!g.ring()->same(*f.ring())) throw RingMismatch("normal_form across rings");
  }
  const PolyRingPtr& ring = f.ring();
  const std::uint32_t p = ring->modulus();
  Polynomial rem = Polynomial::zero(ring);
  Polynomial h = f;
  while (!h.is_zero()) {
    bool reduced = false;
    for (const auto& g : gb) {
      if (g.is_zero()) continue;
      if (monomial::divides(g.lead_monomial(), h.lead_monomial())) {
        Exponents q = monomial::divide(h.lead_monomial(), g.lead_monomial());
        std::uint32_t c = fpmod::mul(h.lead_coeff(), fpmod::inv(g.lead_coeff(), p), p);
        h = h - g.mul_term(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // move the lead term to the remainder
      rem = rem + Polynomial::monomial(ring, h.lead_monomial(), h.lead_coeff());
      h = h - Polynomial::monomial(ring, h.lead_monomial(), h.lead_coeff());
    }
  }
  return rem;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const std::uint32_t p = f.ring()->modulus();
  Exponents l = monomial::lcm(f.lead_monomial(), g.lead_monomial());
  Exponents qf = monomial::divide(l, f.lead_monomial());
  Exponents qg = monomial::divide(l, g.lead_monomial());
  Polynomial a = f.mul_term(qf, fpmod::inv(f.lead_coeff(), p));
  Polynomial b = g.mul_term(qg, fpmod::inv(g.lead_coeff(), p));
  return a - b;
}

struct Pair {
  std::size_t i, j;
  std::uint32_t lcm_degree;
};

}  // namespace

std::vector<Polynomial> buchberger(PolyRingPtr ring, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    if (!g.ring()->same(*ring)) throw RingMismatch("generator from a different ring");
    if (!g.is_zero()) basis.push_back(g.monic());
  }

  std::list<Pair> pairs;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Exponents l = monomial::lcm(basis[i].lead_monomial(), basis[j].lead_monomial());
      pairs.push_back(Pair{i, j, monomial::total_degree(l)});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    // normal strategy: lowest lcm degree first, ties by index
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      if (it->lcm_degree < best->lcm_degree ||
          (it->lcm_degree == best->lcm_degree &&
           (it->j < best->j || (it->j == best->j && it->i < best->i)))) {
        best = it;
      }
    }
    Pair pr = *best;
    pairs.erase(best);
    const Polynomial& f = basis[pr.i];
    const Polynomial& g = basis[pr.j];
    if (monomial::coprime(f.lead_monomial(), g.lead_monomial())) continue;
    Polynomial r = normal_form(s_polynomial(f, g), basis);
    if (!r.is_zero()) {
      basis.push_back(r.monic());
      push_pairs(basis.size() - 1);
    }
  }

  // minimal basis: drop elements whose lead term is divisible by
  // another kept lead term (scan smallest lead first, so divisors are
  // kept before their multiples)
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ring->compare(basis[a].lead_monomial(), basis[b].lead_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (std::size_t idx : order) {
    bool redundant = false;
    for (const auto& kept : minimal) {
      if (monomial::divides(kept.lead_monomial(), basis[idx].lead_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[idx]);
  }

  // tail reduction to the reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      Polynomial r = normal_form(minimal[i], others).monic();
      if (r != minimal[i]) {
        minimal[i] = r;
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.lead_monomial(), b.lead_monomial()) > 0;
  });
  return minimal;
}

QuotientBasis quotient_monomial_basis(PolyRingPtr ring, const std::vector<Polynomial>& ideal_gens) {
  std::vector<Polynomial> gb = buchberger(ring, ideal_gens);
  const std::size_t n = ring->nvars();

  if (gb.empty()) {
    // zero ideal: the quotient is the whole polynomial ring
    if (n == 0) return QuotientBasis{true, {Exponents{}}};
    return QuotientBasis{false, {}};
  }
  if (gb.size() == 1 && gb[0].is_constant()) {
    // unit ideal: zero ring, empty monomial basis
    return QuotientBasis{true, {}};
  }

  // finite-dimensional iff a pure power of every variable leads some
  // basis element
  std::vector<std::uint32_t> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::uint32_t best = 0;
    for (const auto& g : gb) {
      const Exponents& lm = g.lead_monomial();
      bool pure = lm[v] > 0;
      for (std::size_t w = 0; pure && w < n; ++w) {
        if (w != v && lm[w] != 0) pure = false;
      }
      if (pure && (best == 0 || lm[v] < best)) best = lm[v];
    }
    if (best == 0) return QuotientBasis{false, {}};
    bound[v] = best;
  }

  std::vector<Exponents> lead_terms;
  for (const auto& g : gb) lead_terms.push_back(g.lead_monomial());

  std::vector<Exponents> standard;
  Exponents e(n, 0);
  while (true) {
    bool in_staircase = false;
    for (const auto& lt : lead_terms) {
      if (monomial::divides(lt, e)) {
        in_staircase = true;
        break;
      }
    }
    if (!in_staircase) standard.push_back(e);
    // odometer over the box [0, bound)
    std::size_t v = 0;
    for (; v < n; ++v) {
      if (e[v] + 1u < bound[v]) {
        ++e[v];
        break;
      }
      e[v] = 0;
    }
    if (v == n) break;
  }

  std::sort(standard.begin(), standard.end(),
            [&](const Exponents& a, const Exponents& b) { return ring->compare(a, b) < 0; });
  return QuotientBasis{true, std::move(standard)};
}

}  // namespace fpd
