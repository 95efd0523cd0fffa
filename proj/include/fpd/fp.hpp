#ifndef FPD_FP_HPP
#define FPD_FP_HPP

#include <cstdint>
#include <string>

#include "fpd/errors.hpp"

namespace fpd {

// Residue arithmetic mod a prime p < 2^31. Values live in [0, p) as
// machine words; products are formed in 64 bits before reduction.
namespace fpmod {

bool is_prime(std::uint32_t n);

inline void check_prime(std::uint32_t p) {
  if (!is_prime(p)) {
    throw InvalidModulus("modulus " + std::to_string(p) + " is not prime");
  }
  if (p >= (1u << 31)) {
    throw InvalidModulus("modulus " + std::to_string(p) + " exceeds 2^31");
  }
}

inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return s >= p ? static_cast<std::uint32_t>(s - p) : static_cast<std::uint32_t>(s);
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(a + static_cast<std::uint64_t>(p) - b);
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

// Inverse by extended Euclid; a must be nonzero mod p.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

}  // namespace fpmod

// A single residue with its modulus attached. Matrices and polynomials
// store raw residues and carry the modulus once; this type is for the
// places where a scalar travels on its own.
class FpScalar {
 public:
  FpScalar(std::int64_t value, std::uint32_t p) : p_(p) {
    fpmod::check_prime(p);
    v_ = fpmod::reduce(value, p);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  FpScalar operator+(const FpScalar& o) const { return raw(fpmod::add(v_, o.checked(p_), p_), p_); }
  FpScalar operator-(const FpScalar& o) const { return raw(fpmod::sub(v_, o.checked(p_), p_), p_); }
  FpScalar operator*(const FpScalar& o) const { return raw(fpmod::mul(v_, o.checked(p_), p_), p_); }
  FpScalar operator-() const { return raw(fpmod::neg(v_, p_), p_); }
  FpScalar inverse() const {
    if (v_ == 0) throw Error("division by zero in F_" + std::to_string(p_));
    return raw(fpmod::inv(v_, p_), p_);
  }

  bool operator==(const FpScalar& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const FpScalar& o) const { return !(*this == o); }

 private:
  static FpScalar raw(std::uint32_t v, std::uint32_t p) {
    FpScalar s;
    s.v_ = v;
    s.p_ = p;
    return s;
  }
  std::uint32_t checked(std::uint32_t p) const {
    if (p_ != p) throw DimensionMismatch("mixed moduli " + std::to_string(p_) + " and " + std::to_string(p));
    return v_;
  }
  FpScalar() : v_(0), p_(2) {}

  std::uint32_t v_;
  std::uint32_t p_;
};

}  // namespace fpd

#endif  // FPD_FP_HPP
