#ifndef FPD_POLY_HPP
#define FPD_POLY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpd/fp.hpp"

namespace fpd {

enum class MonomialOrder { Lex, Grevlex };

// Exponent vector of a monomial; length equals the ring's variable
// count. Exponents above 2^15 are rejected.
using Exponents = std::vector<std::uint16_t>;

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  PolyRing(std::uint32_t p, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::Grevlex);

  static PolyRingPtr create(std::uint32_t p, std::vector<std::string> variables,
                            MonomialOrder order = MonomialOrder::Grevlex) {
    return std::make_shared<PolyRing>(p, std::move(variables), order);
  }

  std::uint32_t modulus() const { return p_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  MonomialOrder order() const { return order_; }

  // -1 if not present
  int var_index(std::string_view name) const;

  bool same(const PolyRing& o) const {
    return p_ == o.p_ && vars_ == o.vars_ && order_ == o.order_;
  }

  // <0 if a < b, 0 if equal, >0 if a > b in this ring's order.
  int compare(const Exponents& a, const Exponents& b) const;

 private:
  std::uint32_t p_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

namespace monomial {

std::uint32_t total_degree(const Exponents& e);
Exponents mul(const Exponents& a, const Exponents& b);  // checked against 2^15
bool divides(const Exponents& a, const Exponents& b);   // a | b
Exponents divide(const Exponents& b, const Exponents& a);  // b / a, requires a | b
Exponents lcm(const Exponents& a, const Exponents& b);
bool coprime(const Exponents& a, const Exponents& b);
bool is_one(const Exponents& e);
std::string to_string(const Exponents& e, const std::vector<std::string>& vars);

}  // namespace monomial

// Sparse multivariate polynomial with terms kept in descending
// monomial order (lead term first) and no zero coefficients.
class Polynomial {
 public:
  using Term = std::pair<Exponents, std::uint32_t>;

  static Polynomial zero(PolyRingPtr ring);
  static Polynomial constant(PolyRingPtr ring, std::int64_t c);
  static Polynomial variable(PolyRingPtr ring, std::size_t index);
  static Polynomial monomial(PolyRingPtr ring, Exponents e, std::int64_t c);
  // Terms in any order, possibly with repeats; normalizes.
  static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  const Exponents& lead_monomial() const;
  std::uint32_t lead_coeff() const;
  std::uint32_t total_degree() const;  // 0 for the zero polynomial

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial negate() const;
  Polynomial scale(std::uint32_t c) const;
  Polynomial mul_term(const Exponents& e, std::uint32_t c) const;
  Polynomial pow(std::uint32_t k) const;
  Polynomial monic() const;  // divide by lead coefficient

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}
  void check_same_ring(const Polynomial& o) const;

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

// Parses the expression grammar: integer coefficients, ring variables,
// `+ - * ^` and parentheses; whitespace-insensitive. Coefficients are
// reduced mod p.
Polynomial parse_poly(PolyRingPtr ring, std::string_view text);

}  // namespace fpd

#endif  // FPD_POLY_HPP
