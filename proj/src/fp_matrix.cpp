#include "fpd/fp_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace fpd {

namespace fpmod {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error("element not invertible mod " + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace fpmod

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
  fpmod::check_prime(p);
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<Row>& rows, std::size_t cols, std::uint32_t p) {
  FpMatrix m(rows.size(), cols, p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length does not match column count");
    for (std::size_t c = 0; c < cols; ++c) m.a_[r * cols + c] = rows[r][c] % p;
  }
  return m;
}

Row FpMatrix::row(std::size_t r) const {
  return Row(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

Row FpMatrix::column(std::size_t c) const {
  Row v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = a_[r * cols_ + c];
  return v;
}

FpMatrix FpMatrix::multiply(const FpMatrix& o) const {
  if (p_ != o.p_) throw DimensionMismatch("matrix moduli differ");
  if (cols_ != o.rows_) throw DimensionMismatch("inner dimensions differ");
  FpMatrix out(rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t aik = a_[i * cols_ + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        std::uint64_t v = out.a_[i * o.cols_ + j] + aik * o.a_[k * o.cols_ + j] % p_;
        out.a_[i * o.cols_ + j] = static_cast<std::uint32_t>(v >= p_ ? v - p_ : v);
      }
    }
  }
  return out;
}

Row FpMatrix::apply(const Row& v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length does not match column count");
  Row out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc += static_cast<std::uint64_t>(a_[i * cols_ + j]) * v[j] % p_;
      if (acc >= (1ull << 62)) acc %= p_;
    }
    out[i] = static_cast<std::uint32_t>(acc % p_);
  }
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(cols_, rows_, p_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.a_[c * rows_ + r] = a_[r * cols_ + c];
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw DimensionMismatch("matrix shapes differ in addition");
  FpMatrix out(rows_, cols_, p_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = fpmod::add(a_[i], o.a_[i], p_);
  return out;
}

bool FpMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FpMatrix::operator==(const FpMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
}

FpMatrix FpMatrix::vstack(const FpMatrix& o) const {
  if (cols_ != o.cols_ || p_ != o.p_) throw DimensionMismatch("vstack shapes differ");
  FpMatrix out(rows_ + o.rows_, cols_, p_);
  std::copy(a_.begin(), a_.end(), out.a_.begin());
  std::copy(o.a_.begin(), o.a_.end(), out.a_.begin() + a_.size());
  return out;
}

FpMatrix FpMatrix::hstack(const FpMatrix& o) const {
  if (rows_ != o.rows_ || p_ != o.p_) throw DimensionMismatch("hstack shapes differ");
  FpMatrix out(rows_, cols_ + o.cols_, p_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_, out.a_.begin() + r * out.cols_);
    std::copy(o.a_.begin() + r * o.cols_, o.a_.begin() + (r + 1) * o.cols_,
              out.a_.begin() + r * out.cols_ + cols_);
  }
  return out;
}

namespace {

// Row operations below are independent across rows, so the parallel
// and serial kernels produce identical entries.
constexpr std::size_t kParallelMinCells = 1u << 14;

void eliminate_serial(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols,
                      std::uint32_t p, std::size_t pivot_row, std::size_t pivot_col) {
  const std::uint32_t* prow = &a[pivot_row * cols];
  for (std::size_t r = 0; r < rows; ++r) {
    if (r == pivot_row) continue;
    std::uint64_t f = a[r * cols + pivot_col];
    if (f == 0) continue;
    std::uint32_t* row = &a[r * cols];
    for (std::size_t c = pivot_col; c < cols; ++c) {
      std::uint64_t v = row[c] + static_cast<std::uint64_t>(p) - f * prow[c] % p;
      row[c] = static_cast<std::uint32_t>(v >= p ? v - p : v);
    }
  }
}

void eliminate_parallel(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols,
                        std::uint32_t p, std::size_t pivot_row, std::size_t pivot_col) {
  const std::uint32_t* prow = &a[pivot_row * cols];
  const std::int64_t n = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static)
  for (std::int64_t ri = 0; ri < n; ++ri) {
    const std::size_t r = static_cast<std::size_t>(ri);
    if (r == pivot_row) continue;
    std::uint64_t f = a[r * cols + pivot_col];
    if (f == 0) continue;
    std::uint32_t* row = &a[r * cols];
    for (std::size_t c = pivot_col; c < cols; ++c) {
      std::uint64_t v = row[c] + static_cast<std::uint64_t>(p) - f * prow[c] % p;
      row[c] = static_cast<std::uint32_t>(v >= p ? v - p : v);
    }
  }
}

}  // namespace

std::vector<std::size_t> rref_inplace(std::vector<std::uint32_t>& a, std::size_t rows,
                                      std::size_t cols, std::uint32_t p, ElimMode mode) {
  bool parallel = mode == ElimMode::Parallel ||
                  (mode == ElimMode::Auto && rows * cols >= kParallelMinCells && rows >= 32);
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;  // next pivot row
  for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
    // first nonzero entry in this column at or below pr
    std::size_t sel = rows;
    for (std::size_t r = pr; r < rows; ++r) {
      if (a[r * cols + pc] != 0) {
        sel = r;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != pr) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a[sel * cols + c], a[pr * cols + c]);
    }
    std::uint32_t lead = a[pr * cols + pc];
    if (lead != 1) {
      std::uint64_t s = fpmod::inv(lead, p);
      for (std::size_t c = pc; c < cols; ++c) {
        a[pr * cols + c] = static_cast<std::uint32_t>(s * a[pr * cols + c] % p);
      }
    }
    if (parallel) {
      eliminate_parallel(a, rows, cols, p, pr, pc);
    } else {
      eliminate_serial(a, rows, cols, p, pr, pc);
    }
    pivots.push_back(pc);
    ++pr;
  }
  return pivots;
}

Subspace::Subspace(std::size_t ambient_dim, std::uint32_t p) : ambient_(ambient_dim), p_(p) {
  fpmod::check_prime(p);
}

Subspace Subspace::span(std::size_t ambient_dim, std::uint32_t p, const std::vector<Row>& vectors,
                        ElimMode mode) {
  Subspace s(ambient_dim, p);
  if (vectors.empty()) return s;
  std::vector<std::uint32_t> a(vectors.size() * ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim)
      throw DimensionMismatch("vector length does not match ambient dimension");
    for (std::size_t c = 0; c < ambient_dim; ++c) a[r * ambient_dim + c] = vectors[r][c] % p;
  }
  std::vector<std::size_t> pivots = rref_inplace(a, vectors.size(), ambient_dim, p, mode);
  s.pivots_ = pivots;
  s.basis_.reserve(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    s.basis_.emplace_back(a.begin() + r * ambient_dim, a.begin() + (r + 1) * ambient_dim);
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim, std::uint32_t p) {
  Subspace s(ambient_dim, p);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Row e(ambient_dim, 0);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Row Subspace::reduce_vector(Row v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::uint64_t f = v[pivots_[i]] % p_;
    if (f == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) {
      std::uint64_t x = v[c] % p_ + static_cast<std::uint64_t>(p_) - f * basis_[i][c] % p_;
      v[c] = static_cast<std::uint32_t>(x >= p_ ? x - p_ : x);
    }
  }
  for (auto& x : v) x %= p_;
  return v;
}

bool Subspace::contains_vector(const Row& v) const {
  Row r = reduce_vector(v);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  check_compatible(other);
  for (const Row& b : other.basis_) {
    if (!contains_vector(b)) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  check_compatible(other);
  std::vector<Row> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, p_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_compatible(other);
  // Zassenhaus: reduce [A|A ; B|0]; rows with zero left half carry an
  // intersection basis in the right half.
  const std::size_t n = ambient_;
  const std::size_t rows = basis_.size() + other.basis_.size();
  if (rows == 0) return Subspace(n, p_);
  std::vector<std::uint32_t> a(rows * 2 * n, 0);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      a[r * 2 * n + c] = basis_[r][c];
      a[r * 2 * n + n + c] = basis_[r][c];
    }
  }
  for (std::size_t r = 0; r < other.basis_.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      a[(basis_.size() + r) * 2 * n + c] = other.basis_[r][c];
    }
  }
  rref_inplace(a, rows, 2 * n, p_);
  std::vector<Row> inter;
  for (std::size_t r = 0; r < rows; ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n; ++c) {
      if (a[r * 2 * n + c] != 0) {
        left_zero = false;
        break;
      }
    }
    if (!left_zero) continue;
    Row right(a.begin() + r * 2 * n + n, a.begin() + (r + 1) * 2 * n);
    if (std::any_of(right.begin(), right.end(), [](std::uint32_t x) { return x != 0; })) {
      inter.push_back(std::move(right));
    }
  }
  return span(n, p_, inter);
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && p_ == other.p_ && basis_ == other.basis_;
}

bool Subspace::before(const Subspace& other) const {
  if (dim() != other.dim()) return dim() < other.dim();
  return basis_ < other.basis_;
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) os << ", ";
    os << "(";
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (c) os << ",";
      os << basis_[i][c];
    }
    os << ")";
  }
  os << "}";
  return os.str();
}

void Subspace::check_compatible(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw DimensionMismatch("ambient dimensions differ: " + std::to_string(ambient_) + " vs " +
                            std::to_string(other.ambient_));
  if (p_ != other.p_)
    throw DimensionMismatch("moduli differ: " + std::to_string(p_) + " vs " + std::to_string(other.p_));
}

Decomposition decompose(const FpMatrix& m, ElimMode mode) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::uint32_t p = m.modulus();
  std::vector<std::uint32_t> a = m.data();
  std::vector<std::size_t> pivots = rref_inplace(a, rows, cols, p, mode);
  const std::size_t rank = pivots.size();

  FpMatrix rref(rows, cols, p);
  rref.data() = a;

  // Kernel: one generator per free column, read off the rref.
  std::vector<bool> is_pivot(cols, false);
  std::vector<std::size_t> pivot_row_of(cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    is_pivot[pivots[i]] = true;
    pivot_row_of[pivots[i]] = i;
  }
  std::vector<Row> kernel_gens;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Row v(cols, 0);
    v[c] = 1;
    for (std::size_t pc = 0; pc < cols; ++pc) {
      if (!is_pivot[pc]) continue;
      v[pc] = fpmod::neg(a[pivot_row_of[pc] * cols + c], p);
    }
    kernel_gens.push_back(std::move(v));
  }
  Subspace kernel = Subspace::span(cols, p, kernel_gens, mode);

  std::vector<Row> image_gens;
  image_gens.reserve(rank);
  for (std::size_t pc : pivots) image_gens.push_back(m.column(pc));
  Subspace image = Subspace::span(rows, p, image_gens, mode);

  return Decomposition{rank, std::move(kernel), std::move(image), std::move(rref)};
}

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
  return SubspaceOps{a.sum(b), a.intersect(b), a.contains(b)};
}

}  // namespace fpd
