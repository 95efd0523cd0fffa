#include "fpd/finite_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace fpd {

namespace {

Row add_rows(const Row& a, const Row& b, std::uint32_t p) {
  Row out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = fpmod::add(a[i], b[i], p);
  return out;
}

Row scale_row(const Row& a, std::uint32_t c, std::uint32_t p) {
  Row out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = fpmod::mul(a[i], c, p);
  return out;
}

bool row_is_zero(const Row& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t v) { return v == 0; });
}

}  // namespace

struct AlgebraFactory {
  static AlgebraPtr make(std::uint32_t p, std::size_t dim, std::vector<std::string> names,
                         std::vector<std::vector<Row>> table, Row unit,
                         std::map<std::string, Row> gens) {
    auto alg = std::shared_ptr<FiniteAlgebra>(new FiniteAlgebra());
    alg->p_ = p;
    alg->dim_ = dim;
    alg->names_ = std::move(names);
    alg->table_ = std::move(table);
    alg->unit_ = std::move(unit);
    alg->gens_for_eval_ = std::move(gens);
    alg->validate();
    return alg;
  }
};

AlgebraPtr FiniteAlgebra::create(std::uint32_t p, std::vector<std::string> basis_names,
                                 std::vector<std::vector<Row>> mul_table, Row unit) {
  fpmod::check_prime(p);
  const std::size_t d = basis_names.size();
  if (d == 0) throw Error("structure-constant algebras must have positive dimension");
  if (mul_table.size() != d) throw DimensionMismatch("mul_table row count != dim");
  for (auto& row : mul_table) {
    if (row.size() != d) throw DimensionMismatch("mul_table column count != dim");
    for (auto& v : row) {
      if (v.size() != d) throw DimensionMismatch("structure-constant vector length != dim");
      for (auto& x : v) x %= p;
    }
  }
  if (unit.size() != d) throw DimensionMismatch("unit vector length != dim");
  for (auto& x : unit) x %= p;

  std::map<std::string, Row> gens;
  for (std::size_t i = 0; i < d; ++i) {
    const std::string& name = basis_names[i];
    bool identifier = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) ||
                                        name[0] == '_');
    for (char c : name) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) identifier = false;
    }
    if (identifier) {
      Row e(d, 0);
      e[i] = 1;
      gens[name] = std::move(e);
    }
  }
  return AlgebraFactory::make(p, d, std::move(basis_names), std::move(mul_table),
                              std::move(unit), std::move(gens));
}

AlgebraPtr FiniteAlgebra::zero_algebra(std::uint32_t p) {
  fpmod::check_prime(p);
  return AlgebraFactory::make(p, 0, {}, {}, Row{}, {});
}

AlgebraPtr FiniteAlgebra::base_field(std::uint32_t p) {
  return create(p, {"u"}, {{Row{1}}}, Row{1});
}

void FiniteAlgebra::validate() const {
  if (dim_ == 0) return;
  // commutativity
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (table_[i][j] != table_[j][i]) {
        throw NotCommutative("basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  // unit law on basis elements
  for (std::size_t i = 0; i < dim_; ++i) {
    Row e(dim_, 0);
    e[i] = 1;
    if (mul(unit_, e) != e) throw BadUnit("unit fails on basis element " + std::to_string(i));
  }
  // associativity on all basis triples
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        Row ek(dim_, 0);
        ek[k] = 1;
        Row ei(dim_, 0);
        ei[i] = 1;
        Row lhs = mul(table_[i][j], ek);
        Row rhs = mul(ei, table_[j][k]);
        if (lhs != rhs) {
          throw NotAssociative("basis triple (" + std::to_string(i) + "," + std::to_string(j) +
                               "," + std::to_string(k) + ")");
        }
      }
    }
  }
}

Row FiniteAlgebra::mul(const Row& x, const Row& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("element length != dim");
  Row out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      std::uint32_t c = fpmod::mul(x[i], y[j], p_);
      const Row& tij = table_[i][j];
      for (std::size_t k = 0; k < dim_; ++k) {
        out[k] = fpmod::add(out[k], fpmod::mul(c, tij[k], p_), p_);
      }
    }
  }
  return out;
}

Row FiniteAlgebra::pow(Row x, std::uint64_t k) const {
  Row acc = unit_;
  while (k > 0) {
    if (k & 1) acc = mul(acc, x);
    k >>= 1;
    if (k) x = mul(x, x);
  }
  return acc;
}

FpMatrix FiniteAlgebra::mult_matrix(const Row& x) const {
  FpMatrix m(dim_, dim_, p_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Row ej(dim_, 0);
    ej[j] = 1;
    Row col = mul(x, ej);
    for (std::size_t i = 0; i < dim_; ++i) m.set(i, j, col[i]);
  }
  return m;
}

bool FiniteAlgebra::is_nilpotent(const Row& x) const {
  FpMatrix m = mult_matrix(x);
  std::size_t k = 1;
  while (k < dim_) {
    m = m.multiply(m);
    k *= 2;
  }
  return m.is_zero();
}

bool FiniteAlgebra::is_unit_element(const Row& x) const {
  if (dim_ == 0) return false;
  return decompose(mult_matrix(x)).rank == dim_;
}

std::uint64_t FiniteAlgebra::element_count_capped(std::uint64_t cap) const {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    count *= p_;
    if (count > cap) return cap + 1;
  }
  return count;
}

Row FiniteAlgebra::element_at(std::uint64_t index) const {
  Row out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    out[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return out;
}

std::string FiniteAlgebra::describe_element(const Row& x) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    if (!first) os << " + ";
    if (x[i] != 1) os << x[i] << "*";
    os << names_[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string AlgIdeal::to_string() const {
  if (is_zero()) return "(0)";
  if (is_whole_ring()) return "(1)";
  std::ostringstream os;
  os << "<";
  const auto& rows = space.basis();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ", ";
    os << parent->describe_element(rows[i]);
  }
  os << ">";
  return os.str();
}

FiniteModule::FiniteModule(AlgebraPtr parent, std::size_t dim, std::vector<FpMatrix> action)
    : parent_(std::move(parent)), dim_(dim), action_(std::move(action)) {
  const std::size_t d = parent_->dim();
  if (action_.size() != d) throw DimensionMismatch("one action matrix per basis element required");
  for (const auto& m : action_) {
    if (m.rows() != dim_ || m.cols() != dim_ || m.modulus() != parent_->modulus()) {
      throw DimensionMismatch("action matrix shape mismatch");
    }
  }
  if (dim_ == 0) return;
  // unit acts as identity
  FpMatrix u = act(parent_->unit());
  if (!(u == FpMatrix::identity(dim_, parent_->modulus()))) {
    throw BadUnit("module action of the unit is not the identity");
  }
  // action respects the multiplication table
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      FpMatrix lhs = action_[i].multiply(action_[j]);
      FpMatrix rhs = act(parent_->table(i, j));
      if (!(lhs == rhs)) {
        throw NotAssociative("module action violates the table at pair (" + std::to_string(i) +
                             "," + std::to_string(j) + ")");
      }
    }
  }
}

FiniteModule FiniteModule::regular(AlgebraPtr R) {
  const std::size_t d = R->dim();
  std::vector<FpMatrix> action;
  action.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    Row e(d, 0);
    e[i] = 1;
    action.push_back(R->mult_matrix(e));
  }
  std::size_t dim = d;
  return FiniteModule(std::move(R), dim, std::move(action));
}

FiniteModule FiniteModule::zero(AlgebraPtr R) {
  const std::size_t d = R->dim();
  std::vector<FpMatrix> action(d, FpMatrix(0, 0, R->modulus()));
  return FiniteModule(std::move(R), 0, std::move(action));
}

FiniteModule FiniteModule::quotient(AlgebraPtr R, const AlgIdeal& I) {
  const std::size_t d = R->dim();
  const std::uint32_t p = R->modulus();
  // coordinates: columns of R that are not pivots of I's basis
  std::vector<bool> is_pivot(d, false);
  for (std::size_t c : I.space.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> coords;
  for (std::size_t c = 0; c < d; ++c) {
    if (!is_pivot[c]) coords.push_back(c);
  }
  const std::size_t m = coords.size();
  std::vector<FpMatrix> action;
  action.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    Row ei(d, 0);
    ei[i] = 1;
    FpMatrix a(m, m, p);
    for (std::size_t cj = 0; cj < m; ++cj) {
      Row rep(d, 0);
      rep[coords[cj]] = 1;
      Row img = I.space.reduce_vector(R->mul(ei, rep));
      for (std::size_t ri = 0; ri < m; ++ri) a.set(ri, cj, img[coords[ri]]);
    }
    action.push_back(std::move(a));
  }
  return FiniteModule(std::move(R), m, std::move(action));
}

FiniteModule FiniteModule::on_subspace(const FiniteModule& M, const Subspace& W) {
  const AlgebraPtr& R = M.parent();
  const std::size_t d = R->dim();
  const std::uint32_t p = R->modulus();
  const std::size_t m = W.dim();
  std::vector<FpMatrix> action;
  action.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    FpMatrix a(m, m, p);
    for (std::size_t cj = 0; cj < m; ++cj) {
      Row img = M.action()[i].apply(W.basis()[cj]);
      if (!W.contains_vector(img)) {
        throw DimensionMismatch("subspace is not stable under the module action");
      }
      // coordinates in the canonical basis: entries at the pivot columns
      for (std::size_t ri = 0; ri < m; ++ri) a.set(ri, cj, img[W.pivots()[ri]]);
    }
    action.push_back(std::move(a));
  }
  return FiniteModule(R, m, std::move(action));
}

FpMatrix FiniteModule::act(const Row& r) const {
  if (r.size() != parent_->dim()) throw DimensionMismatch("element length != dim");
  FpMatrix out(dim_, dim_, parent_->modulus());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    const FpMatrix& a = action_[i];
    for (std::size_t k = 0; k < dim_ * dim_; ++k) {
      out.data()[k] = fpmod::add(out.data()[k],
                                 fpmod::mul(r[i], a.data()[k], parent_->modulus()),
                                 parent_->modulus());
    }
  }
  return out;
}

AlgIdeal ideal_from_subspace(AlgebraPtr R, Subspace space, std::vector<Row> generators) {
  // closure sanity: multiplication by every basis element stays inside
  for (const Row& b : space.basis()) {
    for (std::size_t i = 0; i < R->dim(); ++i) {
      Row e(R->dim(), 0);
      e[i] = 1;
      if (!space.contains_vector(R->mul(b, e))) {
        throw Error("subspace is not an ideal");
      }
    }
  }
  return AlgIdeal{std::move(R), std::move(space), std::move(generators)};
}

AlgIdeal ideal_closure(AlgebraPtr R, const std::vector<Row>& gens) {
  if (R->is_zero_algebra()) throw Error("ideal_closure requires a nonzero ring");
  const std::size_t d = R->dim();
  Subspace space = Subspace::span(d, R->modulus(), gens);
  while (true) {
    std::vector<Row> next = space.basis();
    bool grew = false;
    for (const Row& b : space.basis()) {
      for (std::size_t i = 0; i < d; ++i) {
        Row e(d, 0);
        e[i] = 1;
        Row prod = R->mul(b, e);
        if (!space.contains_vector(prod)) {
          next.push_back(prod);
          grew = true;
        }
      }
    }
    if (!grew) break;
    space = Subspace::span(d, R->modulus(), next);
  }
  return AlgIdeal{R, std::move(space), gens};
}

AlgIdeal whole_ring_ideal(AlgebraPtr R) {
  Subspace s = Subspace::full(R->dim(), R->modulus());
  return AlgIdeal{std::move(R), std::move(s), {}};
}

AlgIdeal zero_ideal(AlgebraPtr R) {
  Subspace s(R->dim(), R->modulus());
  return AlgIdeal{std::move(R), std::move(s), {}};
}

AlgIdeal annihilator(AlgebraPtr R, const AlgIdeal& I) {
  if (R->is_zero_algebra()) throw Error("annihilator requires a nonzero ring");
  const std::size_t d = R->dim();
  if (I.space.dim() == 0) return whole_ring_ideal(R);
  // ann(I) = intersection of the kernels of multiplication by a basis
  // of I; stack the multiplication matrices and take one kernel
  FpMatrix stacked(0, d, R->modulus());
  for (const Row& g : I.space.basis()) {
    stacked = stacked.vstack(R->mult_matrix(g));
  }
  Decomposition dec = decompose(stacked);
  return AlgIdeal{R, dec.kernel, {}};
}

QuotientAlgebra quotient_algebra(AlgebraPtr R, const AlgIdeal& I) {
  if (R->is_zero_algebra()) throw Error("quotient_algebra requires a nonzero ring");
  const std::size_t d = R->dim();
  const std::uint32_t p = R->modulus();
  std::vector<bool> is_pivot(d, false);
  for (std::size_t c : I.space.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> coords;
  for (std::size_t c = 0; c < d; ++c) {
    if (!is_pivot[c]) coords.push_back(c);
  }
  const std::size_t m = coords.size();

  FpMatrix projection(m, d, p);
  for (std::size_t j = 0; j < d; ++j) {
    Row e(d, 0);
    e[j] = 1;
    Row img = I.space.reduce_vector(e);
    for (std::size_t i = 0; i < m; ++i) projection.set(i, j, img[coords[i]]);
  }

  if (m == 0) {
    return QuotientAlgebra{FiniteAlgebra::zero_algebra(p), std::move(projection), {}};
  }

  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 0; i < m; ++i) names.push_back(R->basis_names()[coords[i]]);

  std::vector<std::vector<Row>> tbl(m, std::vector<Row>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Row ri(d, 0), rj(d, 0);
      ri[coords[i]] = 1;
      rj[coords[j]] = 1;
      Row prod = I.space.reduce_vector(R->mul(ri, rj));
      Row out(m, 0);
      for (std::size_t k = 0; k < m; ++k) out[k] = prod[coords[k]];
      tbl[i][j] = std::move(out);
    }
  }
  Row unit = projection.apply(R->unit());
  auto alg = FiniteAlgebra::create(p, std::move(names), std::move(tbl), std::move(unit));
  return QuotientAlgebra{std::move(alg), std::move(projection), std::move(coords)};
}

namespace {

// coordinates of v in the canonical basis of a subspace containing it
Row coords_in(const Subspace& W, const Row& v) {
  Row out(W.dim(), 0);
  for (std::size_t i = 0; i < W.dim(); ++i) out[i] = v[W.pivots()[i]];
  return out;
}

Row lift_from(const Subspace& W, const Row& coords, std::uint32_t p) {
  Row out(W.ambient_dim(), 0);
  for (std::size_t i = 0; i < W.dim(); ++i) {
    for (std::size_t c = 0; c < W.ambient_dim(); ++c) {
      out[c] = fpmod::add(out[c], fpmod::mul(coords[i], W.basis()[i][c], p), p);
    }
  }
  return out;
}

}  // namespace

std::vector<LocalFactor> local_decompose(AlgebraPtr R, std::size_t budget) {
  if (R->is_zero_algebra()) throw Error("local_decompose requires a nonzero ring");
  const std::size_t d = R->dim();
  const std::uint32_t p = R->modulus();
  std::uint64_t count = R->element_count_capped(budget);
  if (count > budget) {
    throw BudgetExceeded("element enumeration for local decomposition", count);
  }

  // all idempotents, then the primitive ones (atoms under e <= f iff ef = e)
  std::vector<Row> idem;
  for (std::uint64_t i = 0; i < count; ++i) {
    Row x = R->element_at(i);
    if (row_is_zero(x)) continue;
    if (R->mul(x, x) == x) idem.push_back(std::move(x));
  }
  std::vector<Row> primitive;
  for (const Row& e : idem) {
    bool atom = true;
    for (const Row& f : idem) {
      if (f == e) continue;
      if (R->mul(f, e) == f) {  // 0 < f < e
        atom = false;
        break;
      }
    }
    if (atom) primitive.push_back(e);
  }
  // deterministic order
  std::sort(primitive.begin(), primitive.end());

  std::vector<LocalFactor> factors;
  std::vector<Subspace> components;
  for (const Row& e : primitive) {
    AlgIdeal comp = ideal_closure(R, {e});
    components.push_back(comp.space);
  }

  for (std::size_t fi = 0; fi < primitive.size(); ++fi) {
    const Row& e = primitive[fi];
    const Subspace& comp = components[fi];
    const std::size_t a = comp.dim();

    // factor algebra on the canonical basis of R*e
    std::vector<std::string> names;
    for (std::size_t i = 0; i < a; ++i) names.push_back("c" + std::to_string(i));
    std::vector<std::vector<Row>> tbl(a, std::vector<Row>(a));
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < a; ++j) {
        Row prod = R->mul(comp.basis()[i], comp.basis()[j]);
        tbl[i][j] = coords_in(comp, prod);
      }
    }
    AlgebraPtr factor = FiniteAlgebra::create(p, std::move(names), std::move(tbl),
                                              coords_in(comp, e));

    // radical of the local factor: its nilpotent elements
    std::uint64_t fcount = factor->element_count_capped(budget);
    if (fcount > budget) throw BudgetExceeded("factor element enumeration", fcount);
    std::vector<Row> nilpotents;
    for (std::uint64_t i = 0; i < fcount; ++i) {
      Row x = factor->element_at(i);
      if (factor->is_nilpotent(x)) nilpotents.push_back(std::move(x));
    }
    Subspace rad = Subspace::span(a, p, nilpotents);
    AlgIdeal rad_ideal = ideal_from_subspace(factor, rad);

    AlgIdeal soc = annihilator(factor, rad_ideal);
    std::size_t socle_dim = soc.dim();
    std::size_t residue_dim = a - rad.dim();

    // maximal ideal of R: rad lifted + the other components
    std::vector<Row> mgens;
    for (const Row& rv : rad.basis()) mgens.push_back(lift_from(comp, rv, p));
    for (std::size_t fj = 0; fj < primitive.size(); ++fj) {
      if (fj == fi) continue;
      for (const Row& b : components[fj].basis()) mgens.push_back(b);
    }
    Subspace mspace = Subspace::span(d, p, mgens);
    AlgIdeal maximal = ideal_from_subspace(R, std::move(mspace), {});

    factors.push_back(LocalFactor{e, comp, std::move(factor), std::move(maximal),
                                  std::move(rad_ideal), socle_dim, residue_dim,
                                  socle_dim == residue_dim});
  }
  return factors;
}

std::vector<AlgIdeal> enumerate_ideals(AlgebraPtr R, std::size_t budget) {
  if (R->is_zero_algebra()) throw Error("enumerate_ideals requires a nonzero ring");
  std::uint64_t count = R->element_count_capped(budget);
  if (count > budget) throw BudgetExceeded("element enumeration for the ideal lattice", count);
  const std::size_t d = R->dim();
  const std::uint32_t p = R->modulus();

  auto key_of = [&](const Subspace& s) {
    std::string key;
    key.reserve(s.dim() * d * 4 + 4);
    key += std::to_string(s.dim());
    for (const Row& r : s.basis()) {
      for (std::uint32_t v : r) {
        key.push_back(',');
        key += std::to_string(v);
      }
    }
    return key;
  };

  // distinct principal ideals
  std::vector<Subspace> principal;
  std::set<std::string> seen_principal;
  for (std::uint64_t i = 0; i < count; ++i) {
    AlgIdeal pr = ideal_closure(R, {R->element_at(i)});
    if (seen_principal.insert(key_of(pr.space)).second) principal.push_back(pr.space);
  }

  // every ideal is a join of principal ideals: saturate under joins
  std::map<std::string, Subspace> found;
  Subspace zero(d, p);
  found.emplace(key_of(zero), zero);
  std::vector<Subspace> frontier = {zero};
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const Subspace& s : frontier) {
      for (const Subspace& pr : principal) {
        Subspace joined = s.sum(pr);
        std::string k = key_of(joined);
        if (found.find(k) == found.end()) {
          found.emplace(k, joined);
          next.push_back(joined);
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<AlgIdeal> ideals;
  ideals.reserve(found.size());
  for (auto& [k, s] : found) ideals.push_back(AlgIdeal{R, s, {}});
  std::sort(ideals.begin(), ideals.end(),
            [](const AlgIdeal& a, const AlgIdeal& b) { return a.space.before(b.space); });
  return ideals;
}

AlgebraPtr idealization(AlgebraPtr A, const FiniteModule& M) {
  if (A->is_zero_algebra()) throw Error("idealization requires a nonzero base ring");
  if (M.parent().get() != A.get() && !(M.parent()->modulus() == A->modulus() &&
                                       M.parent()->dim() == A->dim() &&
                                       M.parent()->table() == A->table())) {
    throw RingMismatch("module is not over the base algebra");
  }
  const std::size_t a = A->dim(), m = M.dim(), n = a + m;
  const std::uint32_t p = A->modulus();

  std::vector<std::string> names = A->basis_names();
  for (std::size_t i = 0; i < m; ++i) names.push_back("t" + std::to_string(i + 1));

  auto pad = [&](const Row& head, const Row& tail) {
    Row out(n, 0);
    for (std::size_t i = 0; i < head.size(); ++i) out[i] = head[i];
    for (std::size_t i = 0; i < tail.size(); ++i) out[a + i] = tail[i];
    return out;
  };

  std::vector<std::vector<Row>> tbl(n, std::vector<Row>(n, Row(n, 0)));
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) tbl[i][j] = pad(A->table(i, j), Row(m, 0));
  }
  for (std::size_t i = 0; i < a; ++i) {
    Row ei(a, 0);
    ei[i] = 1;
    FpMatrix act = M.act(ei);
    for (std::size_t j = 0; j < m; ++j) {
      Row img = act.column(j);
      tbl[i][a + j] = pad(Row(a, 0), img);
      tbl[a + j][i] = tbl[i][a + j];
    }
  }
  // module part squares to zero: tbl[a+i][a+j] stays zero

  Row unit = pad(A->unit(), Row(m, 0));
  return FiniteAlgebra::create(p, std::move(names), std::move(tbl), std::move(unit));
}

AlgebraPtr direct_product(const AlgebraPtr& A, const AlgebraPtr& B) {
  if (A->modulus() != B->modulus()) throw RingMismatch("product factors over different primes");
  const std::size_t a = A->dim(), b = B->dim(), n = a + b;
  const std::uint32_t p = A->modulus();
  std::vector<std::string> names;
  for (const auto& s : A->basis_names()) names.push_back("l_" + s);
  for (const auto& s : B->basis_names()) names.push_back("r_" + s);
  std::vector<std::vector<Row>> tbl(n, std::vector<Row>(n, Row(n, 0)));
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) {
      for (std::size_t k = 0; k < a; ++k) tbl[i][j][k] = A->table(i, j)[k];
    }
  }
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      for (std::size_t k = 0; k < b; ++k) tbl[a + i][a + j][a + k] = B->table(i, j)[k];
    }
  }
  Row unit(n, 0);
  for (std::size_t i = 0; i < a; ++i) unit[i] = A->unit()[i];
  for (std::size_t i = 0; i < b; ++i) unit[a + i] = B->unit()[i];
  return FiniteAlgebra::create(p, std::move(names), std::move(tbl), std::move(unit));
}

AlgebraPtr algebra_from_zero_dim_quotient(PolyRingPtr ring,
                                          const std::vector<Polynomial>& ideal_gens) {
  QuotientBasis qb = quotient_monomial_basis(ring, ideal_gens);
  if (!qb.finite) {
    throw InfiniteDimensional("the quotient is not finite-dimensional over F_p");
  }
  if (qb.monomials.empty()) {
    throw Error("the ideal is the unit ideal; the quotient is the zero ring");
  }
  std::vector<Polynomial> gb = buchberger(ring, ideal_gens);
  const std::size_t d = qb.monomials.size();
  const std::uint32_t p = ring->modulus();

  std::map<Exponents, std::size_t> index_of;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) {
    index_of[qb.monomials[i]] = i;
    names.push_back(monomial::to_string(qb.monomials[i], ring->variables()));
  }

  auto to_coords = [&](const Polynomial& f) {
    Row out(d, 0);
    for (const auto& [e, c] : f.terms()) {
      auto it = index_of.find(e);
      if (it == index_of.end()) throw Error("normal form leaves the standard monomials");
      out[it->second] = c;
    }
    return out;
  };

  std::vector<std::vector<Row>> tbl(d, std::vector<Row>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Polynomial prod = Polynomial::monomial(ring, qb.monomials[i], 1) *
                        Polynomial::monomial(ring, qb.monomials[j], 1);
      tbl[i][j] = to_coords(normal_form(prod, gb));
    }
  }
  Row unit(d, 0);
  unit[index_of.at(Exponents(ring->nvars(), 0))] = 1;

  std::map<std::string, Row> gens;
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    Polynomial xv = Polynomial::variable(ring, v);
    gens[ring->variables()[v]] = to_coords(normal_form(xv, gb));
  }
  return AlgebraFactory::make(p, d, std::move(names), std::move(tbl), std::move(unit),
                              std::move(gens));
}

FpMatrix expand_element_matrix(const FiniteModule& M, const std::vector<Row>& entries,
                               std::size_t rows, std::size_t cols) {
  const std::size_t m = M.dim();
  const std::uint32_t p = M.parent()->modulus();
  FpMatrix out(rows * m, cols * m, p);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Row& e = entries[r * cols + c];
      if (row_is_zero(e)) continue;
      FpMatrix blk = M.act(e);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) out.set(r * m + i, c * m + j, blk.at(i, j));
      }
    }
  }
  return out;
}

std::vector<Row> transpose_element_matrix(const std::vector<Row>& entries, std::size_t rows,
                                          std::size_t cols) {
  std::vector<Row> out(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out[c * rows + r] = entries[r * cols + c];
  }
  return out;
}

Subspace module_image_of(const FiniteModule& M, const std::vector<Row>& elements) {
  std::vector<Row> gens;
  for (const Row& x : elements) {
    FpMatrix a = M.act(x);
    for (std::size_t j = 0; j < M.dim(); ++j) gens.push_back(a.column(j));
  }
  return Subspace::span(M.dim(), M.parent()->modulus(), gens);
}

Subspace module_annihilator_of(const FiniteModule& M, const std::vector<Row>& elements) {
  if (elements.empty()) return Subspace::full(M.dim(), M.parent()->modulus());
  FpMatrix stacked(0, M.dim(), M.parent()->modulus());
  for (const Row& x : elements) stacked = stacked.vstack(M.act(x));
  return decompose(stacked).kernel;
}

Row evaluate_element(const AlgebraPtr& R, const std::string& text) {
  const auto& gens = R->expression_generators();
  std::vector<std::string> varnames;
  varnames.reserve(gens.size());
  for (const auto& [name, row] : gens) varnames.push_back(name);
  PolyRingPtr synthetic = PolyRing::create(R->modulus(), varnames, MonomialOrder::Grevlex);
  Polynomial f = parse_poly(synthetic, text);

  Row acc(R->dim(), 0);
  for (const auto& [e, c] : f.terms()) {
    Row term = R->unit();
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      const Row& gen = gens.at(varnames[v]);
      term = R->mul(term, R->pow(gen, e[v]));
    }
    acc = add_rows(acc, scale_row(term, c, R->modulus()), R->modulus());
  }
  return acc;
}

}  // namespace fpd
