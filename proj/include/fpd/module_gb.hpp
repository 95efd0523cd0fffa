#ifndef FPD_MODULE_GB_HPP
#define FPD_MODULE_GB_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fpd/groebner.hpp"
#include "fpd/poly.hpp"

namespace fpd {

// Element of a free module R^rank over a polynomial ring, stored as
// one polynomial per component. Module terms are compared
// position-over-term with positions ascending: a term in a lower
// position beats any term in a higher position.
class ModuleVector {
 public:
  ModuleVector(PolyRingPtr ring, std::size_t rank);
  ModuleVector(PolyRingPtr ring, std::vector<Polynomial> components);

  static ModuleVector unit(PolyRingPtr ring, std::size_t rank, std::size_t pos);

  const PolyRingPtr& ring() const { return ring_; }
  std::size_t rank() const { return comps_.size(); }
  const std::vector<Polynomial>& components() const { return comps_; }
  const Polynomial& component(std::size_t i) const { return comps_[i]; }

  bool is_zero() const;

  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  ModuleVector mul_term(const Exponents& e, std::uint32_t c) const;
  ModuleVector mul_poly(const Polynomial& f) const;
  ModuleVector negate() const;
  ModuleVector monic() const;

  // Lead term under the position-over-term order. Only valid on
  // nonzero vectors.
  struct Lead {
    std::size_t pos;
    Exponents mon;
    std::uint32_t coeff;
  };
  Lead lead() const;

  bool operator==(const ModuleVector& o) const;
  std::string to_string() const;

 private:
  void check_compatible(const ModuleVector& o) const;

  PolyRingPtr ring_;
  std::vector<Polynomial> comps_;
};

// Full division remainder of v by the given module vectors (reduction
// only against matching positions with dividing lead monomials).
ModuleVector module_normal_form(const ModuleVector& v, const std::vector<ModuleVector>& gens);

// Reduced module Groebner basis of the span of gens.
std::vector<ModuleVector> module_buchberger(std::vector<ModuleVector> gens);

// Matrix over the ring as a map R^cols -> R^rows (columns are images
// of the free basis vectors).
struct PolyMatrix {
  PolyRingPtr ring;
  std::size_t rows, cols;
  std::vector<Polynomial> entries;  // row-major

  PolyMatrix(PolyRingPtr r, std::size_t nrows, std::size_t ncols);
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  Polynomial& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  ModuleVector column(std::size_t c) const;
  ModuleVector apply(const ModuleVector& v) const;  // matrix * v
  PolyMatrix transpose() const;
  PolyMatrix multiply(const PolyMatrix& o) const;
  bool is_zero() const;
};

// Generators of {v in R^cols : matrix * v = 0 over R}, where R is the
// polynomial ring modulo the relation ideal (empty relations = the
// ring itself). Relation multiples of the free basis vectors are
// adjoined on both sides, so the kernel is computed over the quotient.
// Soundness: matrix * v reduces to zero mod relations for each v;
// completeness comes from the elimination-order syzygy construction.
std::vector<ModuleVector> module_kernel(const PolyMatrix& matrix,
                                        const std::vector<Polynomial>& relations = {});

// True iff v lies in the submodule of R^rank generated by gens, over
// the quotient by relations.
bool submodule_contains(const std::vector<ModuleVector>& gens, const ModuleVector& v,
                        const std::vector<Polynomial>& relations = {});

}  // namespace fpd

#endif  // FPD_MODULE_GB_HPP
