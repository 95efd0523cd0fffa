#include "fpd/koszul.hpp"

#include <algorithm>

namespace fpd {

KoszulShape KoszulShape::make(std::size_t n) {
  KoszulShape s;
  s.n = n;
  s.tuples.resize(n + 1);
  s.tuples[0].push_back({});
  for (std::size_t p = 1; p <= n; ++p) {
    // lexicographic enumeration of sorted p-subsets of {0..n-1}
    std::vector<std::size_t> t(p);
    for (std::size_t i = 0; i < p; ++i) t[i] = i;
    while (true) {
      s.tuples[p].push_back(t);
      // next subset
      std::size_t i = p;
      while (i > 0 && t[i - 1] == n - p + (i - 1)) --i;
      if (i == 0) break;
      ++t[i - 1];
      for (std::size_t j = i; j < p; ++j) t[j] = t[j - 1] + 1;
    }
  }
  return s;
}

std::size_t KoszulShape::index_of(std::size_t p, const std::vector<std::size_t>& t) const {
  const auto& list = tuples[p];
  auto it = std::lower_bound(list.begin(), list.end(), t);
  if (it == list.end() || *it != t) throw Error("tuple not in the exterior basis");
  return static_cast<std::size_t>(it - list.begin());
}

FiniteKoszul build_koszul(AlgebraPtr ring, const std::vector<Row>& x) {
  if (x.empty()) throw EmptySequence("Koszul complex needs a nonempty sequence");
  const std::size_t d = ring->dim();
  const std::uint32_t p = ring->modulus();
  for (const Row& xi : x) {
    if (xi.size() != d) throw DimensionMismatch("sequence element length != dim");
  }
  FiniteKoszul K;
  K.ring = ring;
  K.sequence = x;
  K.shape = KoszulShape::make(x.size());
  const std::size_t n = x.size();

  for (std::size_t q = 1; q <= n; ++q) {
    const std::size_t rows = K.shape.rank(q - 1), cols = K.shape.rank(q);
    std::vector<Row> mat(rows * cols, Row(d, 0));
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& alpha = K.shape.tuples[q][c];
      for (std::size_t j = 0; j < alpha.size(); ++j) {
        std::vector<std::size_t> beta;
        beta.reserve(alpha.size() - 1);
        for (std::size_t k = 0; k < alpha.size(); ++k) {
          if (k != j) beta.push_back(alpha[k]);
        }
        std::size_t r = K.shape.index_of(q - 1, beta);
        // sign (-1)^{j+1} with j one-based: + for the first listed index
        Row coef = x[alpha[j]];
        if (j % 2 == 1) {
          for (auto& v : coef) v = fpmod::neg(v, p);
        }
        Row& cell = mat[r * cols + c];
        for (std::size_t k = 0; k < d; ++k) cell[k] = fpmod::add(cell[k], coef[k], p);
      }
    }
    K.diffs.push_back(std::move(mat));
  }

  // composite-zero on ring-element matrices
  for (std::size_t q = 2; q <= n; ++q) {
    const std::size_t rows = K.shape.rank(q - 2);
    const std::size_t mid = K.shape.rank(q - 1);
    const std::size_t cols = K.shape.rank(q);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        Row acc(d, 0);
        for (std::size_t m = 0; m < mid; ++m) {
          Row prod = ring->mul(K.diffs[q - 2][r * mid + m], K.diffs[q - 1][m * cols + c]);
          for (std::size_t k = 0; k < d; ++k) acc[k] = fpmod::add(acc[k], prod[k], p);
        }
        if (!std::all_of(acc.begin(), acc.end(), [](std::uint32_t v) { return v == 0; })) {
          throw Error("Koszul differentials do not compose to zero");
        }
      }
    }
  }
  return K;
}

HomologyTable koszul_homology(const FiniteKoszul& K, const FiniteModule& M) {
  if (M.parent().get() != K.ring.get() &&
      !(M.parent()->modulus() == K.ring->modulus() && M.parent()->dim() == K.ring->dim() &&
        M.parent()->table() == K.ring->table())) {
    throw BackendMismatch("module is not over the complex's ring");
  }
  const std::size_t n = K.n();
  const std::size_t m = M.dim();

  HomologyTable t;
  t.n = n;
  t.homology.assign(n + 1, 0);
  t.cohomology.assign(n + 1, 0);
  if (m == 0) return t;

  // chain: D[q] = scalar matrix of d_q : K_q -> K_{q-1} (q = 1..n)
  std::vector<FpMatrix> D;
  for (std::size_t q = 1; q <= n; ++q) {
    D.push_back(expand_element_matrix(M, K.diffs[q - 1], K.shape.rank(q - 1), K.shape.rank(q)));
  }
  std::vector<std::size_t> ker(n + 1), rk(n + 1);
  for (std::size_t q = 1; q <= n; ++q) {
    Decomposition dec = decompose(D[q - 1]);
    rk[q] = dec.rank;
    ker[q] = dec.kernel.dim();
  }
  for (std::size_t q = 0; q <= n; ++q) {
    std::size_t cycles = (q == 0) ? K.shape.rank(0) * m : ker[q];
    std::size_t boundaries = (q == n) ? 0 : rk[q + 1];
    t.homology[q] = cycles - boundaries;
  }

  // cochain: T[q] = scalar matrix of transpose(d_{q+1}) : C^q -> C^{q+1}
  std::vector<FpMatrix> T;
  for (std::size_t q = 0; q < n; ++q) {
    std::vector<Row> tr =
        transpose_element_matrix(K.diffs[q], K.shape.rank(q), K.shape.rank(q + 1));
    T.push_back(expand_element_matrix(M, tr, K.shape.rank(q + 1), K.shape.rank(q)));
  }
  std::vector<std::size_t> cker(n + 1), crk(n + 1);
  for (std::size_t q = 0; q < n; ++q) {
    Decomposition dec = decompose(T[q]);
    crk[q] = dec.rank;
    cker[q] = dec.kernel.dim();
  }
  for (std::size_t q = 0; q <= n; ++q) {
    std::size_t cocycles = (q == n) ? K.shape.rank(n) * m : cker[q];
    std::size_t coboundaries = (q == 0) ? 0 : crk[q - 1];
    t.cohomology[q] = cocycles - coboundaries;
  }
  return t;
}

Extended koszul_grade_finite(AlgebraPtr ring, const std::vector<Row>& ideal_gens,
                             const FiniteModule& M) {
  FiniteKoszul K = build_koszul(std::move(ring), ideal_gens);
  HomologyTable t = koszul_homology(K, M);
  for (std::size_t p = 0; p <= t.n; ++p) {
    if (t.cohomology[p] != 0) return Extended::finite(p);
  }
  return Extended::infinity();
}

PolyQuotient make_poly_quotient(PolyRingPtr ring, std::vector<Polynomial> relations) {
  std::vector<Polynomial> gb = buchberger(ring, relations);
  return PolyQuotient{std::move(ring), std::move(relations), std::move(gb)};
}

bool poly_ideal_contains_one(const PolyQuotient& Rq, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> all = gens;
  all.insert(all.end(), Rq.relations.begin(), Rq.relations.end());
  std::vector<Polynomial> gb = buchberger(Rq.ring, all);
  return normal_form(Polynomial::constant(Rq.ring, 1), gb).is_zero();
}

PolyKoszul build_koszul_poly(PolyQuotient ring, const std::vector<Polynomial>& x) {
  if (x.empty()) throw EmptySequence("Koszul complex needs a nonempty sequence");
  for (const auto& xi : x) {
    if (!xi.ring()->same(*ring.ring)) throw RingMismatch("sequence element from a different ring");
  }
  PolyKoszul K{std::move(ring), x, KoszulShape::make(x.size()), {}};
  const std::size_t n = x.size();
  for (std::size_t q = 1; q <= n; ++q) {
    PolyMatrix mat(K.ring.ring, K.shape.rank(q - 1), K.shape.rank(q));
    for (std::size_t c = 0; c < K.shape.rank(q); ++c) {
      const auto& alpha = K.shape.tuples[q][c];
      for (std::size_t j = 0; j < alpha.size(); ++j) {
        std::vector<std::size_t> beta;
        beta.reserve(alpha.size() - 1);
        for (std::size_t k = 0; k < alpha.size(); ++k) {
          if (k != j) beta.push_back(alpha[k]);
        }
        std::size_t r = K.shape.index_of(q - 1, beta);
        Polynomial coef = (j % 2 == 1) ? x[alpha[j]].negate() : x[alpha[j]];
        mat.at(r, c) = mat.at(r, c) + coef;
      }
    }
    K.diffs.push_back(std::move(mat));
  }
  for (std::size_t q = 2; q <= n; ++q) {
    if (!K.diffs[q - 2].multiply(K.diffs[q - 1]).is_zero()) {
      throw Error("Koszul differentials do not compose to zero");
    }
  }
  return K;
}

bool koszul_cohomology_vanishes(const PolyKoszul& K, std::size_t p) {
  const std::size_t n = K.n();
  if (p > n) throw IndexOutOfRange("cohomology index exceeds the sequence length");
  // cochain maps: delta^q = transpose(d_{q+1}) : R^{rank q} -> R^{rank q+1}
  // kernel generators of delta^p must lie in the image of delta^{p-1}
  std::vector<ModuleVector> cycles;
  if (p == n) {
    // delta^n is the zero map out of R^{rank n}
    for (std::size_t j = 0; j < K.shape.rank(n); ++j) {
      cycles.push_back(ModuleVector::unit(K.ring.ring, K.shape.rank(n), j));
    }
  } else {
    PolyMatrix delta_p = K.diffs[p].transpose();
    cycles = module_kernel(delta_p, K.ring.relations);
  }
  std::vector<ModuleVector> image_gens;
  if (p > 0) {
    PolyMatrix delta_prev = K.diffs[p - 1].transpose();
    for (std::size_t c = 0; c < delta_prev.cols; ++c) image_gens.push_back(delta_prev.column(c));
  }
  for (const auto& z : cycles) {
    if (!submodule_contains(image_gens, z, K.ring.relations)) return false;
  }
  return true;
}

Extended koszul_grade_poly(const PolyQuotient& ring, const std::vector<Polynomial>& ideal_gens) {
  if (ideal_gens.empty()) throw EmptySequence("grade needs a nonempty generating sequence");
  PolyKoszul K = build_koszul_poly(ring, ideal_gens);
  for (std::size_t p = 0; p <= K.n(); ++p) {
    if (!koszul_cohomology_vanishes(K, p)) return Extended::finite(p);
  }
  return Extended::infinity();
}

}  // namespace fpd
