#ifndef FPD_FINITE_ALGEBRA_HPP
#define FPD_FINITE_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fpd/fp_matrix.hpp"
#include "fpd/groebner.hpp"
#include "fpd/poly.hpp"

namespace fpd {

class FiniteAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

// Commutative unital algebra of finite dimension over F_p, given by
// structure constants. Commutativity, associativity and the unit law
// are checked on every basis triple at construction. The dimension-0
// value is permitted as a module-only object (quotient by the whole
// ring); operations that need a ring reject it.
class FiniteAlgebra {
 public:
  static AlgebraPtr create(std::uint32_t p, std::vector<std::string> basis_names,
                           std::vector<std::vector<Row>> mul_table, Row unit);
  static AlgebraPtr zero_algebra(std::uint32_t p);
  static AlgebraPtr base_field(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  std::size_t dim() const { return dim_; }
  bool is_zero_algebra() const { return dim_ == 0; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Row& unit() const { return unit_; }
  // product of basis elements i and j, as a coefficient vector
  const Row& table(std::size_t i, std::size_t j) const { return table_[i][j]; }
  const std::vector<std::vector<Row>>& table() const { return table_; }

  Row mul(const Row& x, const Row& y) const;
  Row pow(Row x, std::uint64_t k) const;
  FpMatrix mult_matrix(const Row& x) const;  // y -> x*y
  bool is_nilpotent(const Row& x) const;     // mult_matrix nilpotency test
  bool is_unit_element(const Row& x) const;  // mult_matrix invertible

  std::uint64_t element_count_capped(std::uint64_t cap) const;  // min(p^dim, cap+1)
  Row element_at(std::uint64_t index) const;                    // base-p digits

  // Names usable in element expressions, mapped to their coordinate
  // vectors (set by the constructors; quotient-built algebras expose
  // the original ring variables).
  const std::map<std::string, Row>& expression_generators() const { return gens_for_eval_; }

  std::string describe_element(const Row& x) const;

 private:
  friend AlgebraPtr algebra_from_zero_dim_quotient(PolyRingPtr, const std::vector<Polynomial>&);
  friend AlgebraPtr direct_product(const AlgebraPtr&, const AlgebraPtr&);
  friend class FiniteModule;
  friend struct AlgebraFactory;

  FiniteAlgebra() = default;
  void validate() const;

  std::uint32_t p_ = 2;
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<Row>> table_;
  Row unit_;
  std::map<std::string, Row> gens_for_eval_;
};

// Ideal of a finite algebra: a multiplication-closed subspace with its
// canonical echelon basis as identity. The user-supplied generators
// are retained for reporting only.
struct AlgIdeal {
  AlgebraPtr parent;
  Subspace space;
  std::vector<Row> generators;

  std::size_t dim() const { return space.dim(); }
  bool is_zero() const { return space.dim() == 0; }
  bool is_whole_ring() const { return space.dim() == parent->dim(); }
  bool operator==(const AlgIdeal& o) const { return space == o.space; }
  std::string to_string() const;
};

// Finitely generated module over a finite algebra, given by one action
// matrix per algebra basis element. The action must respect the
// multiplication table and send the unit to the identity.
class FiniteModule {
 public:
  FiniteModule(AlgebraPtr parent, std::size_t dim, std::vector<FpMatrix> action);

  static FiniteModule regular(AlgebraPtr R);
  static FiniteModule zero(AlgebraPtr R);
  // R/I with coordinates at the non-pivot columns of I's basis
  static FiniteModule quotient(AlgebraPtr R, const AlgIdeal& I);
  // submodule on an action-stable subspace W, in W's basis coordinates
  static FiniteModule on_subspace(const FiniteModule& M, const Subspace& W);

  const AlgebraPtr& parent() const { return parent_; }
  std::size_t dim() const { return dim_; }
  const std::vector<FpMatrix>& action() const { return action_; }
  FpMatrix act(const Row& r) const;  // sum_i r_i * action[i]

 private:
  AlgebraPtr parent_;
  std::size_t dim_;
  std::vector<FpMatrix> action_;
};

// smallest ideal containing gens (multiply-and-saturate fixed point)
AlgIdeal ideal_closure(AlgebraPtr R, const std::vector<Row>& gens);

AlgIdeal whole_ring_ideal(AlgebraPtr R);
AlgIdeal zero_ideal(AlgebraPtr R);
AlgIdeal ideal_from_subspace(AlgebraPtr R, Subspace space, std::vector<Row> generators = {});

// {r : r * I = 0}
AlgIdeal annihilator(AlgebraPtr R, const AlgIdeal& I);

struct QuotientAlgebra {
  AlgebraPtr algebra;        // dim = dim R - dim I; dim 0 when I = R
  FpMatrix projection;       // (dim R - dim I) x dim R, the quotient map
  std::vector<std::size_t> rep_coords;  // coordinate of each quotient basis rep in R
};

QuotientAlgebra quotient_algebra(AlgebraPtr R, const AlgIdeal& I);

struct LocalFactor {
  Row idempotent;          // primitive idempotent e in R coordinates
  Subspace component;      // R*e as a subspace of R
  AlgebraPtr factor;       // R*e as an algebra with unit e
  AlgIdeal maximal_ideal;  // ideal of R: rad(R*e) + sum of other components
  AlgIdeal factor_radical; // ideal of the factor algebra
  std::size_t socle_dim;     // F_p-dim of ann(rad) inside the factor
  std::size_t residue_dim;   // F_p-dim of the residue field
  bool gorenstein;           // socle is one-dimensional over the residue field
};

// Complete local decomposition via the primitive idempotents, found by
// element enumeration (requires p^dim <= budget).
std::vector<LocalFactor> local_decompose(AlgebraPtr R, std::size_t budget = 4096);

// Every ideal exactly once, sorted by (dim, canonical basis). Requires
// p^dim <= budget.
std::vector<AlgIdeal> enumerate_ideals(AlgebraPtr R, std::size_t budget = 4096);

// Trivial extension A(+)M: M embeds as a square-zero ideal.
AlgebraPtr idealization(AlgebraPtr A, const FiniteModule& M);

AlgebraPtr direct_product(const AlgebraPtr& A, const AlgebraPtr& B);

// Finite quotient of a polynomial ring as an algebra on the standard
// monomials; throws InfiniteDimensional when the quotient is not
// finite over F_p.
AlgebraPtr algebra_from_zero_dim_quotient(PolyRingPtr ring,
                                          const std::vector<Polynomial>& ideal_gens);

// Scalar expansion of a grid of ring elements (row-major, rows x cols)
// acting on copies of M: block (r,c) is the action matrix of entry (r,c).
FpMatrix expand_element_matrix(const FiniteModule& M, const std::vector<Row>& entries,
                               std::size_t rows, std::size_t cols);
std::vector<Row> transpose_element_matrix(const std::vector<Row>& entries, std::size_t rows,
                                          std::size_t cols);

// x*M as a subspace of M (for endpoint identities and Nakayama steps)
Subspace module_image_of(const FiniteModule& M, const std::vector<Row>& elements);
// {m : x_i m = 0 for all i}
Subspace module_annihilator_of(const FiniteModule& M, const std::vector<Row>& elements);

// Evaluate an element expression (polynomial grammar over the names in
// expression_generators, plus integer constants) in the algebra.
Row evaluate_element(const AlgebraPtr& R, const std::string& text);

}  // namespace fpd

#endif  // FPD_FINITE_ALGEBRA_HPP
