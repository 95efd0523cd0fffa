#ifndef FPD_KOSZUL_HPP
#define FPD_KOSZUL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fpd/finite_algebra.hpp"
#include "fpd/module_gb.hpp"

namespace fpd {

// An extended natural number for grades and injective dimensions:
// either a finite value or infinity, never a sentinel integer.
class Extended {
 public:
  static Extended finite(std::size_t v) { return Extended(false, v); }
  static Extended infinity() { return Extended(true, 0); }

  bool is_infinite() const { return infinite_; }
  std::size_t value() const {
    if (infinite_) throw Error("value() on infinity");
    return value_;
  }
  bool operator==(const Extended& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }
  bool leq(const Extended& o) const {
    if (o.is_infinite()) return true;
    if (infinite_) return false;
    return value_ <= o.value_;
  }
  std::string to_string() const { return infinite_ ? "infinity" : std::to_string(value_); }

 private:
  Extended(bool inf, std::size_t v) : infinite_(inf), value_(v) {}
  bool infinite_;
  std::size_t value_;
};

// Sorted index tuples indexing the exterior basis, and the layout of
// the chain groups K_p for a sequence of length n.
struct KoszulShape {
  std::size_t n;
  // tuples[p] lists the p-element subsets of {0..n-1} in lexicographic order
  std::vector<std::vector<std::vector<std::size_t>>> tuples;

  static KoszulShape make(std::size_t n);
  std::size_t rank(std::size_t p) const { return tuples[p].size(); }
  // index of a sorted tuple within tuples[p]
  std::size_t index_of(std::size_t p, const std::vector<std::size_t>& t) const;
};

// ---------------------------------------------------------------------------
// finite backend

struct FiniteKoszul {
  AlgebraPtr ring;
  std::vector<Row> sequence;
  KoszulShape shape;
  // diffs[p-1] is d_p : K_p -> K_{p-1} as a grid of ring elements,
  // rank(p-1) x rank(p), row-major
  std::vector<std::vector<Row>> diffs;

  std::size_t n() const { return shape.n; }
  const Row& diff_entry(std::size_t p, std::size_t r, std::size_t c) const {
    return diffs[p - 1][r * shape.rank(p) + c];
  }
};

// Builds the complex from the alternating-sign contraction formula and
// verifies d_{p-1} after d_p = 0 as ring-element matrices.
FiniteKoszul build_koszul(AlgebraPtr ring, const std::vector<Row>& x);

struct HomologyTable {
  std::size_t n;
  std::vector<std::size_t> homology;    // F_p-dims of H_p, p = 0..n
  std::vector<std::size_t> cohomology;  // F_p-dims of H^p, p = 0..n
};

// Both rows are computed independently: homology from the chain
// differentials, cohomology from their transposes. Their duality
// relation H_p = H^{n-p} is asserted by the test suites, not here.
HomologyTable koszul_homology(const FiniteKoszul& K, const FiniteModule& M);

// least p with H^p(x, M) != 0, or infinity when all vanish
Extended koszul_grade_finite(AlgebraPtr ring, const std::vector<Row>& ideal_gens,
                             const FiniteModule& M);

// ---------------------------------------------------------------------------
// polynomial backend (vanishing only)

// Polynomial ring together with an optional relation ideal; the pair
// stands for the quotient ring. Relations are carried as a reduced
// Groebner basis alongside the original generators.
struct PolyQuotient {
  PolyRingPtr ring;
  std::vector<Polynomial> relations;
  std::vector<Polynomial> relations_gb;
};

PolyQuotient make_poly_quotient(PolyRingPtr ring, std::vector<Polynomial> relations = {});

// true iff 1 lies in the relation ideal plus gens (used for properness checks)
bool poly_ideal_contains_one(const PolyQuotient& Rq, const std::vector<Polynomial>& gens);

struct PolyKoszul {
  PolyQuotient ring;
  std::vector<Polynomial> sequence;
  KoszulShape shape;
  std::vector<PolyMatrix> diffs;  // diffs[p-1] = d_p : K_p -> K_{p-1}

  std::size_t n() const { return shape.n; }
};

PolyKoszul build_koszul_poly(PolyQuotient ring, const std::vector<Polynomial>& x);

// H^p(x, R) = 0?, decided by syzygy generators of the p-th cochain map
// landing in the image of the (p-1)-st.
bool koszul_cohomology_vanishes(const PolyKoszul& K, std::size_t p);

Extended koszul_grade_poly(const PolyQuotient& ring, const std::vector<Polynomial>& ideal_gens);

}  // namespace fpd

#endif  // FPD_KOSZUL_HPP
