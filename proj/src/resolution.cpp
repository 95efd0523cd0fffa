#include "fpd/resolution.hpp"

#include <algorithm>

namespace fpd {

namespace {

// Action of the ring on a flattened free module R^a (chunks of length
// dim R), given the basis multiplication matrices.
Row apply_free(const std::vector<FpMatrix>& basis_mult, std::size_t basis_idx, const Row& v,
               std::size_t d) {
  const FpMatrix& L = basis_mult[basis_idx];
  const std::size_t a = v.size() / d;
  Row out(v.size(), 0);
  for (std::size_t chunk = 0; chunk < a; ++chunk) {
    Row piece(v.begin() + chunk * d, v.begin() + (chunk + 1) * d);
    Row img = L.apply(piece);
    std::copy(img.begin(), img.end(), out.begin() + chunk * d);
  }
  return out;
}

std::vector<FpMatrix> basis_mult_matrices(const AlgebraPtr& R) {
  std::vector<FpMatrix> out;
  out.reserve(R->dim());
  for (std::size_t i = 0; i < R->dim(); ++i) {
    Row e(R->dim(), 0);
    e[i] = 1;
    out.push_back(R->mult_matrix(e));
  }
  return out;
}

// Generator choice for covering the subspace Z of a coordinate space,
// where span_of(v) is the R-span of a single vector.
template <typename SpanOf>
std::vector<Row> choose_generators(ResolutionStyle style, const Subspace& Z,
                                   const Subspace* radical_span, SpanOf span_of) {
  std::vector<Row> chosen;
  if (style == ResolutionStyle::Redundant) {
    chosen = Z.basis();
    return chosen;
  }
  Subspace covered = (style == ResolutionStyle::Minimal)
                         ? *radical_span
                         : Subspace(Z.ambient_dim(), Z.modulus());
  for (const Row& v : Z.basis()) {
    if (covered.contains_vector(v)) continue;
    chosen.push_back(v);
    covered = covered.sum(span_of(v));
  }
  return chosen;
}

}  // namespace

FreeResolution free_resolution_finite(AlgebraPtr R, const FiniteModule& M, std::size_t stages,
                                      ResolutionStyle style, std::size_t budget) {
  if (R->is_zero_algebra()) throw Error("resolutions need a nonzero ring");
  const std::size_t d = R->dim();
  const std::uint32_t p = R->modulus();
  std::vector<FpMatrix> Lbasis = basis_mult_matrices(R);

  // the maximal ideal, for Nakayama-minimal generator choices
  std::vector<Row> radical_basis;
  if (style == ResolutionStyle::Minimal) {
    std::vector<LocalFactor> factors = local_decompose(R, budget);
    if (factors.size() != 1) {
      throw Error("minimal resolutions require a local ring; decompose first");
    }
    radical_basis = factors[0].maximal_ideal.space.basis();
  }

  FreeResolution res;
  res.ring = R;
  res.minimal = (style == ResolutionStyle::Minimal);

  // stage 0: cover M itself
  Subspace Mfull = Subspace::full(M.dim(), p);
  auto span_in_M = [&](const Row& v) {
    std::vector<Row> gens;
    for (std::size_t i = 0; i < d; ++i) gens.push_back(M.action()[i].apply(v));
    return Subspace::span(M.dim(), p, gens);
  };
  std::vector<Row> gens0;
  if (M.dim() > 0) {
    Subspace radM(M.dim(), p);
    if (style == ResolutionStyle::Minimal) {
      std::vector<Row> rm;
      for (const Row& b : radical_basis) {
        FpMatrix act = M.act(b);
        for (std::size_t j = 0; j < M.dim(); ++j) rm.push_back(act.column(j));
      }
      radM = Subspace::span(M.dim(), p, rm);
    }
    gens0 = choose_generators(style, Mfull, &radM, span_in_M);
  }
  res.ranks.push_back(gens0.size());

  // kernel of F_0 -> M
  Subspace Z(0, p);
  {
    const std::size_t a0 = gens0.size();
    FpMatrix phi(M.dim(), a0 * d, p);
    for (std::size_t j = 0; j < a0; ++j) {
      for (std::size_t i = 0; i < d; ++i) {
        Row col = M.action()[i].apply(gens0[j]);
        for (std::size_t r = 0; r < M.dim(); ++r) phi.set(r, j * d + i, col[r]);
      }
    }
    Z = decompose(phi).kernel;
  }

  for (std::size_t s = 1; s <= stages; ++s) {
    if (Z.dim() == 0) {
      res.complete_at = s - 1;
      return res;
    }
    const std::size_t a_prev = res.ranks.back();
    auto span_free = [&](const Row& v) {
      std::vector<Row> gens;
      for (std::size_t i = 0; i < d; ++i) gens.push_back(apply_free(Lbasis, i, v, d));
      return Subspace::span(v.size(), p, gens);
    };
    Subspace radZ(Z.ambient_dim(), p);
    if (style == ResolutionStyle::Minimal) {
      std::vector<Row> rz;
      for (const Row& b : radical_basis) {
        FpMatrix L = R->mult_matrix(b);
        for (const Row& z : Z.basis()) {
          Row out(z.size(), 0);
          for (std::size_t chunk = 0; chunk < a_prev; ++chunk) {
            Row piece(z.begin() + chunk * d, z.begin() + (chunk + 1) * d);
            Row img = L.apply(piece);
            std::copy(img.begin(), img.end(), out.begin() + chunk * d);
          }
          rz.push_back(std::move(out));
        }
      }
      radZ = Subspace::span(Z.ambient_dim(), p, rz);
    }
    std::vector<Row> gens = choose_generators(style, Z, &radZ, span_free);
    const std::size_t a_s = gens.size();

    // element matrix of d_s: entry (r, c) = chunk r of generator c
    std::vector<Row> elem(a_prev * a_s, Row(d, 0));
    for (std::size_t c = 0; c < a_s; ++c) {
      for (std::size_t r = 0; r < a_prev; ++r) {
        std::copy(gens[c].begin() + r * d, gens[c].begin() + (r + 1) * d,
                  elem[r * a_s + c].begin());
      }
    }
    res.diffs.push_back(std::move(elem));
    res.ranks.push_back(a_s);

    // next kernel
    FpMatrix psi(a_prev * d, a_s * d, p);
    for (std::size_t j = 0; j < a_s; ++j) {
      for (std::size_t i = 0; i < d; ++i) {
        Row col = apply_free(Lbasis, i, gens[j], d);
        for (std::size_t r = 0; r < col.size(); ++r) psi.set(r, j * d + i, col[r]);
      }
    }
    Z = decompose(psi).kernel;
  }
  if (Z.dim() == 0) res.complete_at = stages;
  return res;
}

std::vector<std::size_t> ext_dims_from_resolution(const FreeResolution& res, std::size_t cutoff) {
  const AlgebraPtr& R = res.ring;
  const std::size_t d = R->dim();
  if (!res.complete_at.has_value() && res.stages() < cutoff + 1) {
    throw Error("resolution too short for the requested Ext range");
  }
  FiniteModule reg = FiniteModule::regular(R);

  // U_i = scalar matrix of Hom(d_i, R) : C^{i-1} -> C^i
  auto hom_map = [&](std::size_t i) -> std::optional<FpMatrix> {
    if (i < 1 || i > res.stages()) return std::nullopt;
    std::size_t rows = res.rank(i - 1), cols = res.rank(i);
    if (rows == 0 || cols == 0) return std::nullopt;
    std::vector<Row> tr = transpose_element_matrix(res.diffs[i - 1], rows, cols);
    return expand_element_matrix(reg, tr, cols, rows);
  };

  std::vector<std::size_t> dims(cutoff + 1, 0);
  for (std::size_t i = 0; i <= cutoff; ++i) {
    const std::size_t ai = res.rank(i);
    if (ai == 0) {
      dims[i] = 0;
      continue;
    }
    std::size_t cocycles;
    std::optional<FpMatrix> up = hom_map(i + 1);
    if (up.has_value()) {
      cocycles = decompose(*up).kernel.dim();
    } else {
      cocycles = ai * d;
    }
    std::size_t coboundaries = 0;
    std::optional<FpMatrix> down = hom_map(i);
    if (down.has_value()) coboundaries = decompose(*down).rank;
    dims[i] = cocycles - coboundaries;
  }
  return dims;
}

FiniteModule restrict_to_factor(const LocalFactor& F, const FiniteModule& M) {
  Subspace W = module_image_of(M, {F.idempotent});
  const std::uint32_t p = M.parent()->modulus();
  const std::size_t m = W.dim();
  std::vector<FpMatrix> action;
  action.reserve(F.factor->dim());
  for (std::size_t k = 0; k < F.factor->dim(); ++k) {
    const Row& lift = F.component.basis()[k];
    FpMatrix act = M.act(lift);
    FpMatrix a(m, m, p);
    for (std::size_t cj = 0; cj < m; ++cj) {
      Row img = act.apply(W.basis()[cj]);
      if (!W.contains_vector(img)) throw Error("factor component is not action-stable");
      for (std::size_t ri = 0; ri < m; ++ri) a.set(ri, cj, img[W.pivots()[ri]]);
    }
    action.push_back(std::move(a));
  }
  return FiniteModule(F.factor, m, std::move(action));
}

std::vector<std::size_t> ext_dims_finite(AlgebraPtr R, const FiniteModule& M, std::size_t cutoff,
                                         ResolutionStyle style, std::size_t budget) {
  if (style == ResolutionStyle::Redundant || style == ResolutionStyle::Greedy) {
    FreeResolution res = free_resolution_finite(R, M, cutoff + 1, style, budget);
    return ext_dims_from_resolution(res, cutoff);
  }
  std::vector<LocalFactor> factors = local_decompose(R, budget);
  std::vector<std::size_t> dims(cutoff + 1, 0);
  for (const LocalFactor& F : factors) {
    FiniteModule Mi = restrict_to_factor(F, M);
    FreeResolution res =
        free_resolution_finite(F.factor, Mi, cutoff + 1, ResolutionStyle::Minimal, budget);
    std::vector<std::size_t> part = ext_dims_from_resolution(res, cutoff);
    for (std::size_t i = 0; i <= cutoff; ++i) dims[i] += part[i];
  }
  return dims;
}

PdResult pd_cutoff(AlgebraPtr R, const FiniteModule& M, std::size_t cutoff, std::size_t budget) {
  std::vector<LocalFactor> factors = local_decompose(R, budget);
  std::size_t pd = 0;
  for (const LocalFactor& F : factors) {
    FiniteModule Mi = restrict_to_factor(F, M);
    FreeResolution res =
        free_resolution_finite(F.factor, Mi, cutoff + 1, ResolutionStyle::Minimal, budget);
    if (!res.complete_at.has_value() || *res.complete_at > cutoff) {
      return PdResult{true, 0};
    }
    pd = std::max(pd, *res.complete_at);
  }
  return PdResult{false, pd};
}

SelfInjectiveDim self_injective_dim_finite(AlgebraPtr R, std::size_t budget) {
  std::vector<LocalFactor> factors = local_decompose(R, budget);
  SelfInjectiveDim out{Extended::finite(0), {}};
  bool all = true;
  for (const LocalFactor& F : factors) {
    out.factor_gorenstein.push_back(F.gorenstein);
    all = all && F.gorenstein;
  }
  out.dim = all ? Extended::finite(0) : Extended::infinity();
  return out;
}

bool baer_self_injective(AlgebraPtr R, std::size_t budget) {
  std::vector<AlgIdeal> ideals = enumerate_ideals(R, budget);
  for (const AlgIdeal& I : ideals) {
    FiniteModule M = FiniteModule::quotient(R, I);
    std::vector<std::size_t> dims = ext_dims_finite(R, M, 1, ResolutionStyle::Minimal, budget);
    if (dims[1] != 0) return false;
  }
  return true;
}

PolyResolution poly_free_resolution(const PolyQuotient& Rq,
                                    const std::vector<Polynomial>& ideal_gens,
                                    std::size_t stages, std::size_t max_rank) {
  PolyResolution res{Rq, {1}, {}, false};
  // d_1: the ideal generators (normalized mod the relation ideal)
  std::vector<Polynomial> cols;
  for (const auto& g : ideal_gens) {
    Polynomial nf = normal_form(g, Rq.relations_gb);
    if (!nf.is_zero()) cols.push_back(std::move(nf));
  }
  if (stages == 0) return res;
  PolyMatrix d1(Rq.ring, 1, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) d1.at(0, c) = cols[c];
  res.diffs.push_back(std::move(d1));
  res.ranks.push_back(cols.size());

  for (std::size_t s = 2; s <= stages; ++s) {
    if (res.ranks.back() == 0) {
      res.complete = true;
      return res;
    }
    std::vector<ModuleVector> ker = module_kernel(res.diffs.back(), Rq.relations);
    if (ker.size() > max_rank) {
      throw ResolutionTooLarge("syzygy module needs " + std::to_string(ker.size()) +
                               " generators (bound " + std::to_string(max_rank) + ")");
    }
    const std::size_t rows = res.ranks.back();
    PolyMatrix ds(Rq.ring, rows, ker.size());
    for (std::size_t c = 0; c < ker.size(); ++c) {
      for (std::size_t r = 0; r < rows; ++r) ds.at(r, c) = ker[c].component(r);
    }
    res.diffs.push_back(std::move(ds));
    res.ranks.push_back(ker.size());
  }
  if (!res.ranks.empty() && res.ranks.back() == 0) res.complete = true;
  return res;
}

bool ext_is_zero_poly(const PolyQuotient& Rq, const std::vector<Polynomial>& ideal_gens,
                      std::size_t i, std::size_t max_rank) {
  if (ideal_gens.empty()) throw EmptySequence("ext_is_zero_poly needs ideal generators");
  PolyResolution res = poly_free_resolution(Rq, ideal_gens, i + 1, max_rank);
  auto rank = [&](std::size_t j) { return j < res.ranks.size() ? res.ranks[j] : 0; };

  if (rank(i) == 0) return true;

  // cocycles of delta^i = Hom(d_{i+1}, R)
  std::vector<ModuleVector> cycles;
  if (rank(i + 1) == 0) {
    for (std::size_t j = 0; j < rank(i); ++j) {
      cycles.push_back(ModuleVector::unit(Rq.ring, rank(i), j));
    }
  } else {
    PolyMatrix delta = res.diffs[i].transpose();  // d_{i+1} is diffs[i]
    cycles = module_kernel(delta, Rq.relations);
  }

  std::vector<ModuleVector> image;
  if (i >= 1 && rank(i - 1) > 0) {
    PolyMatrix prev = res.diffs[i - 1].transpose();
    for (std::size_t c = 0; c < prev.cols; ++c) image.push_back(prev.column(c));
  }
  for (const auto& z : cycles) {
    if (!submodule_contains(image, z, Rq.relations)) return false;
  }
  return true;
}

}  // namespace fpd
