#include "fpd/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace fpd {

PolyRing::PolyRing(std::uint32_t p, std::vector<std::string> variables, MonomialOrder order)
    : p_(p), vars_(std::move(variables)), order_(order) {
  fpmod::check_prime(p);
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw Error("empty variable name");
    if (!seen.insert(v).second) throw Error("duplicate variable name '" + v + "'");
  }
}

int PolyRing::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

int PolyRing::compare(const Exponents& a, const Exponents& b) const {
  if (order_ == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  // grevlex: total degree, then reversed comparison of the last
  // differing exponent (smaller last exponent wins).
  std::uint32_t da = monomial::total_degree(a), db = monomial::total_degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

namespace monomial {

std::uint32_t total_degree(const Exponents& e) {
  std::uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

Exponents mul(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint32_t s = static_cast<std::uint32_t>(a[i]) + b[i];
    if (s >= (1u << 15)) throw ExponentOverflow("exponent exceeds 2^15");
    out[i] = static_cast<std::uint16_t>(s);
  }
  return out;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents divide(const Exponents& b, const Exponents& a) {
  Exponents out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (a[i] > b[i]) throw Error("monomial division is not exact");
    out[i] = static_cast<std::uint16_t>(b[i] - a[i]);
  }
  return out;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

bool is_one(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](std::uint16_t x) { return x == 0; });
}

std::string to_string(const Exponents& e, const std::vector<std::string>& vars) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << "*";
    os << vars[i];
    if (e[i] > 1) os << "^" << e[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

}  // namespace monomial

Polynomial Polynomial::zero(PolyRingPtr ring) { return Polynomial(std::move(ring)); }

Polynomial Polynomial::constant(PolyRingPtr ring, std::int64_t c) {
  Exponents e(ring->nvars(), 0);
  return monomial(std::move(ring), std::move(e), c);
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw IndexOutOfRange("variable index out of range");
  Exponents e(ring->nvars(), 0);
  e[index] = 1;
  return monomial(std::move(ring), std::move(e), 1);
}

Polynomial Polynomial::monomial(PolyRingPtr ring, Exponents e, std::int64_t c) {
  Polynomial f(std::move(ring));
  if (e.size() != f.ring_->nvars()) throw DimensionMismatch("exponent vector length mismatch");
  std::uint32_t cc = fpmod::reduce(c, f.ring_->modulus());
  if (cc != 0) f.terms_.emplace_back(std::move(e), cc);
  return f;
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
  struct Cmp {
    const PolyRing* r;
    bool operator()(const Exponents& a, const Exponents& b) const { return r->compare(a, b) > 0; }
  };
  std::map<Exponents, std::uint64_t, Cmp> acc(Cmp{ring.get()});
  const std::uint32_t p = ring->modulus();
  for (auto& [e, c] : terms) {
    if (e.size() != ring->nvars()) throw DimensionMismatch("exponent vector length mismatch");
    auto it = acc.try_emplace(e, 0).first;
    it->second = (it->second + c) % p;
  }
  Polynomial f(std::move(ring));
  for (auto& [e, c] : acc) {
    if (c != 0) f.terms_.emplace_back(e, static_cast<std::uint32_t>(c));
  }
  return f;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && monomial::is_one(terms_[0].first));
}

const Exponents& Polynomial::lead_monomial() const {
  if (terms_.empty()) throw Error("zero polynomial has no lead monomial");
  return terms_[0].first;
}

std::uint32_t Polynomial::lead_coeff() const {
  if (terms_.empty()) return 0;
  return terms_[0].second;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, monomial::total_degree(e));
  return d;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (!ring_->same(*o.ring_)) throw RingMismatch("polynomials from different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(o);
  const std::uint32_t p = ring_->modulus();
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ring_->compare(terms_[i].first, o.terms_[j].first);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      std::uint32_t s = fpmod::add(terms_[i].second, o.terms_[j].second, p);
      if (s != 0) out.terms_.emplace_back(terms_[i].first, s);
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.negate(); }

Polynomial Polynomial::negate() const {
  const std::uint32_t p = ring_->modulus();
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.terms_.emplace_back(e, fpmod::neg(c, p));
  return out;
}

Polynomial Polynomial::scale(std::uint32_t c) const {
  const std::uint32_t p = ring_->modulus();
  c %= p;
  Polynomial out(ring_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& [e, k] : terms_) {
    std::uint32_t v = fpmod::mul(k, c, p);
    if (v != 0) out.terms_.emplace_back(e, v);
  }
  return out;
}

Polynomial Polynomial::mul_term(const Exponents& e, std::uint32_t c) const {
  const std::uint32_t p = ring_->modulus();
  c %= p;
  Polynomial out(ring_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& [m, k] : terms_) {
    std::uint32_t v = fpmod::mul(k, c, p);
    if (v != 0) out.terms_.emplace_back(monomial::mul(m, e), v);
  }
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(o);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  const std::uint32_t p = ring_->modulus();
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      prods.emplace_back(monomial::mul(ea, eb), fpmod::mul(ca, cb, p));
    }
  }
  return from_terms(ring_, std::move(prods));
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial acc = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  std::uint32_t c = fpmod::inv(lead_coeff(), ring_->modulus());
  return scale(c);
}

bool Polynomial::operator==(const Polynomial& o) const {
  return ring_->same(*o.ring_) && terms_ == o.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    if (monomial::is_one(e)) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << monomial::to_string(e, ring_->variables());
    }
    first = false;
  }
  return os.str();
}

namespace {

// Recursive-descent parser for the polynomial grammar.
class Parser {
 public:
  Parser(PolyRingPtr ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

  Polynomial run() {
    Polynomial f = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Polynomial expr() {
    bool neg = false;
    skip_ws();
    if (eat('-')) neg = true;
    else eat('+');
    Polynomial acc = term();
    if (neg) acc = acc.negate();
    while (true) {
      skip_ws();
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      std::uint32_t k = integer("exponent");
      return base.pow(k);
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(ring_, integer("coefficient"));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(s_.substr(start, pos_ - start));
      int idx = ring_->var_index(name);
      if (idx < 0) throw UnknownVariable(name, start);
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::uint32_t integer(const char* what) {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      throw ParseError(std::string("expected ") + what, pos_);
    }
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (1ull << 40)) throw ParseError("integer literal too large", pos_);
      ++pos_;
    }
    return static_cast<std::uint32_t>(v % (1ull << 32));
  }

  PolyRingPtr ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(PolyRingPtr ring, std::string_view text) {
  return Parser(std::move(ring), text).run();
}

}  // namespace fpd
