#include "fpd/module_gb.hpp"

#include <algorithm>
#include <list>
#include <sstream>

namespace fpd {

ModuleVector::ModuleVector(PolyRingPtr ring, std::size_t rank) : ring_(std::move(ring)) {
  comps_.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) comps_.push_back(Polynomial::zero(ring_));
}

ModuleVector::ModuleVector(PolyRingPtr ring, std::vector<Polynomial> components)
    : ring_(std::move(ring)), comps_(std::move(components)) {
  for (const auto& f : comps_) {
    if (!f.ring()->same(*ring_)) throw RingMismatch("component from a different ring");
  }
}

ModuleVector ModuleVector::unit(PolyRingPtr ring, std::size_t rank, std::size_t pos) {
  ModuleVector v(ring, rank);
  if (pos >= rank) throw IndexOutOfRange("unit position out of range");
  v.comps_[pos] = Polynomial::constant(ring, 1);
  return v;
}

bool ModuleVector::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& f) { return f.is_zero(); });
}

void ModuleVector::check_compatible(const ModuleVector& o) const {
  if (!ring_->same(*o.ring_)) throw RingMismatch("module vectors from different rings");
  if (rank() != o.rank()) throw RankMismatch("module vectors of different ranks");
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  check_compatible(o);
  ModuleVector out(ring_, rank());
  for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] = comps_[i] + o.comps_[i];
  return out;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
  check_compatible(o);
  ModuleVector out(ring_, rank());
  for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] = comps_[i] - o.comps_[i];
  return out;
}

ModuleVector ModuleVector::mul_term(const Exponents& e, std::uint32_t c) const {
  ModuleVector out(ring_, rank());
  for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] = comps_[i].mul_term(e, c);
  return out;
}

ModuleVector ModuleVector::mul_poly(const Polynomial& f) const {
  ModuleVector out(ring_, rank());
  for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] = comps_[i] * f;
  return out;
}

ModuleVector ModuleVector::negate() const {
  ModuleVector out(ring_, rank());
  for (std::size_t i = 0; i < comps_.size(); ++i) out.comps_[i] = comps_[i].negate();
  return out;
}

ModuleVector ModuleVector::monic() const {
  Lead l = lead();
  return mul_term(Exponents(ring_->nvars(), 0), fpmod::inv(l.coeff, ring_->modulus()));
}

ModuleVector::Lead ModuleVector::lead() const {
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (!comps_[i].is_zero()) {
      return Lead{i, comps_[i].lead_monomial(), comps_[i].lead_coeff()};
    }
  }
  throw Error("zero module vector has no lead term");
}

bool ModuleVector::operator==(const ModuleVector& o) const {
  return ring_->same(*o.ring_) && comps_ == o.comps_;
}

std::string ModuleVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) os << ", ";
    os << comps_[i].to_string();
  }
  os << ")";
  return os.str();
}

namespace {

// position-over-term: lower position wins; ties by the ring order
int compare_leads(const PolyRing& ring, const ModuleVector::Lead& a,
                  const ModuleVector::Lead& b) {
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
  return ring.compare(a.mon, b.mon);
}

}  // namespace

ModuleVector module_normal_form(const ModuleVector& v, const std::vector<ModuleVector>& gens) {
  const PolyRingPtr& ring = v.ring();
  const std::uint32_t p = ring->modulus();
  ModuleVector rem(ring, v.rank());
  ModuleVector h = v;
  while (!h.is_zero()) {
    ModuleVector::Lead lh = h.lead();
    bool reduced = false;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      ModuleVector::Lead lg = g.lead();
      if (lg.pos == lh.pos && monomial::divides(lg.mon, lh.mon)) {
        Exponents q = monomial::divide(lh.mon, lg.mon);
        std::uint32_t c = fpmod::mul(lh.coeff, fpmod::inv(lg.coeff, p), p);
        h = h - g.mul_term(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      std::vector<Polynomial> comps;
      for (std::size_t i = 0; i < h.rank(); ++i) {
        comps.push_back(i == lh.pos ? Polynomial::monomial(ring, lh.mon, lh.coeff)
                                    : Polynomial::zero(ring));
      }
      ModuleVector leadvec(ring, std::move(comps));
      rem = rem + leadvec;
      h = h - leadvec;
    }
  }
  return rem;
}

namespace {

struct ModPair {
  std::size_t i, j;
  std::uint32_t lcm_degree;
};

ModuleVector module_s_vector(const ModuleVector& f, const ModuleVector& g) {
  const std::uint32_t p = f.ring()->modulus();
  ModuleVector::Lead lf = f.lead(), lg = g.lead();
  Exponents l = monomial::lcm(lf.mon, lg.mon);
  ModuleVector a = f.mul_term(monomial::divide(l, lf.mon), fpmod::inv(lf.coeff, p));
  ModuleVector b = g.mul_term(monomial::divide(l, lg.mon), fpmod::inv(lg.coeff, p));
  return a - b;
}

}  // namespace

std::vector<ModuleVector> module_buchberger(std::vector<ModuleVector> gens) {
  std::vector<ModuleVector> basis;
  for (auto& g : gens) {
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  if (basis.empty()) return basis;
  const PolyRingPtr ring = basis[0].ring();

  std::list<ModPair> pairs;
  auto push_pairs = [&](std::size_t j) {
    ModuleVector::Lead lj = basis[j].lead();
    for (std::size_t i = 0; i < j; ++i) {
      ModuleVector::Lead li = basis[i].lead();
      if (li.pos != lj.pos) continue;  // S-pairs need matching lead positions
      pairs.push_back(ModPair{i, j, monomial::total_degree(monomial::lcm(li.mon, lj.mon))});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      if (it->lcm_degree < best->lcm_degree ||
          (it->lcm_degree == best->lcm_degree &&
           (it->j < best->j || (it->j == best->j && it->i < best->i)))) {
        best = it;
      }
    }
    ModPair pr = *best;
    pairs.erase(best);
    ModuleVector r = module_normal_form(module_s_vector(basis[pr.i], basis[pr.j]), basis);
    if (!r.is_zero()) {
      basis.push_back(r.monic());
      push_pairs(basis.size() - 1);
    }
  }

  // minimal: drop vectors whose lead is divisible by another kept lead
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare_leads(*ring, basis[a].lead(), basis[b].lead()) < 0;
  });
  std::vector<ModuleVector> minimal;
  for (std::size_t idx : order) {
    ModuleVector::Lead l = basis[idx].lead();
    bool redundant = false;
    for (const auto& kept : minimal) {
      ModuleVector::Lead lk = kept.lead();
      if (lk.pos == l.pos && monomial::divides(lk.mon, l.mon)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[idx]);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<ModuleVector> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      ModuleVector r = module_normal_form(minimal[i], others);
      if (!r.is_zero()) r = r.monic();
      if (!(r == minimal[i])) {
        minimal[i] = r;
        changed = true;
      }
    }
  }
  minimal.erase(std::remove_if(minimal.begin(), minimal.end(),
                               [](const ModuleVector& v) { return v.is_zero(); }),
                minimal.end());

  std::sort(minimal.begin(), minimal.end(), [&](const ModuleVector& a, const ModuleVector& b) {
    return compare_leads(*ring, a.lead(), b.lead()) > 0;
  });
  return minimal;
}

PolyMatrix::PolyMatrix(PolyRingPtr r, std::size_t nrows, std::size_t ncols)
    : ring(std::move(r)), rows(nrows), cols(ncols) {
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) entries.push_back(Polynomial::zero(ring));
}

ModuleVector PolyMatrix::column(std::size_t c) const {
  std::vector<Polynomial> comps;
  comps.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) comps.push_back(at(r, c));
  return ModuleVector(ring, std::move(comps));
}

ModuleVector PolyMatrix::apply(const ModuleVector& v) const {
  if (v.rank() != cols) throw RankMismatch("vector rank does not match matrix columns");
  std::vector<Polynomial> comps;
  comps.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    Polynomial acc = Polynomial::zero(ring);
    for (std::size_t c = 0; c < cols; ++c) acc = acc + at(r, c) * v.component(c);
    comps.push_back(std::move(acc));
  }
  return ModuleVector(ring, std::move(comps));
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(ring, cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.at(c, r) = at(r, c);
  return out;
}

PolyMatrix PolyMatrix::multiply(const PolyMatrix& o) const {
  if (cols != o.rows) throw RankMismatch("inner dimensions differ");
  PolyMatrix out(ring, rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols; ++j) {
        out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
      }
    }
  }
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Polynomial& f) { return f.is_zero(); });
}

std::vector<ModuleVector> module_kernel(const PolyMatrix& matrix,
                                        const std::vector<Polynomial>& relations) {
  const PolyRingPtr& ring = matrix.ring;
  const std::size_t r = matrix.rows, c = matrix.cols;
  std::vector<ModuleVector> kernel;
  if (c == 0) return kernel;
  if (r == 0) {
    // map into the zero module: everything is in the kernel
    for (std::size_t j = 0; j < c; ++j) kernel.push_back(ModuleVector::unit(ring, c, j));
    return kernel;
  }

  // Elimination-order syzygies: augment each column with a coordinate
  // tag in positions r..r+c-1 and adjoin relation multiples of the
  // free basis (untagged, they represent zero over the quotient). GB
  // elements with zero first block carry kernel generators in their
  // tags.
  std::vector<ModuleVector> family;
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<Polynomial> comps;
    comps.reserve(r + c);
    for (std::size_t i = 0; i < r; ++i) comps.push_back(matrix.at(i, j));
    for (std::size_t i = 0; i < c; ++i) {
      comps.push_back(i == j ? Polynomial::constant(ring, 1) : Polynomial::zero(ring));
    }
    family.emplace_back(ring, std::move(comps));
  }
  for (const auto& rel : relations) {
    if (rel.is_zero()) continue;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Polynomial> comps;
      comps.reserve(r + c);
      for (std::size_t k = 0; k < r; ++k) {
        comps.push_back(k == i ? rel : Polynomial::zero(ring));
      }
      for (std::size_t k = 0; k < c; ++k) comps.push_back(Polynomial::zero(ring));
      family.emplace_back(ring, std::move(comps));
    }
  }

  std::vector<ModuleVector> gb = module_buchberger(std::move(family));
  for (const auto& g : gb) {
    bool first_block_zero = true;
    for (std::size_t i = 0; i < r && first_block_zero; ++i) {
      if (!g.component(i).is_zero()) first_block_zero = false;
    }
    if (!first_block_zero) continue;
    std::vector<Polynomial> tag;
    tag.reserve(c);
    for (std::size_t i = 0; i < c; ++i) tag.push_back(g.component(r + i));
    ModuleVector v(ring, std::move(tag));
    if (!v.is_zero()) kernel.push_back(std::move(v));
  }
  return kernel;
}

bool submodule_contains(const std::vector<ModuleVector>& gens, const ModuleVector& v,
                        const std::vector<Polynomial>& relations) {
  for (const auto& g : gens) {
    if (!g.ring()->same(*v.ring())) throw RingMismatch("generators from a different ring");
    if (g.rank() != v.rank()) throw RankMismatch("generator rank does not match vector rank");
  }
  if (v.is_zero()) return true;
  std::vector<ModuleVector> family = gens;
  for (const auto& rel : relations) {
    if (rel.is_zero()) continue;
    for (std::size_t i = 0; i < v.rank(); ++i) {
      family.push_back(ModuleVector::unit(v.ring(), v.rank(), i).mul_poly(rel));
    }
  }
  std::vector<ModuleVector> gb = module_buchberger(std::move(family));
  return module_normal_form(v, gb).is_zero();
}

}  // namespace fpd
