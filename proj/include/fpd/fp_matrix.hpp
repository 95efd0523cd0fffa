#ifndef FPD_FP_MATRIX_HPP
#define FPD_FP_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fpd/fp.hpp"

namespace fpd {

// Which row-elimination kernel to run. Serial is the reference
// implementation; Parallel is the OpenMP kernel; Auto picks Parallel
// for matrices large enough to amortize the fork overhead. Both
// kernels produce bit-identical output (the arithmetic is exact and
// the row operations are independent).
enum class ElimMode { Serial, Parallel, Auto };

using Row = std::vector<std::uint32_t>;

// Dense row-major matrix over F_p, p prime and < 2^31. Entries are raw
// residues in [0, p); the modulus is carried once per matrix.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  static FpMatrix identity(std::size_t n, std::uint32_t p);
  static FpMatrix from_rows(const std::vector<Row>& rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { a_[r * cols_ + c] = fpmod::reduce(v, p_); }

  FpScalar scalar_at(std::size_t r, std::size_t c) const { return FpScalar(at(r, c), p_); }

  Row row(std::size_t r) const;
  Row column(std::size_t c) const;

  FpMatrix multiply(const FpMatrix& o) const;
  Row apply(const Row& v) const;  // matrix * column vector
  FpMatrix transpose() const;
  FpMatrix operator+(const FpMatrix& o) const;
  bool is_zero() const;
  bool operator==(const FpMatrix& o) const;

  // Stack o below this matrix (equal column counts).
  FpMatrix vstack(const FpMatrix& o) const;
  // Stack o to the right of this matrix (equal row counts).
  FpMatrix hstack(const FpMatrix& o) const;

  const std::vector<std::uint32_t>& data() const { return a_; }
  std::vector<std::uint32_t>& data() { return a_; }

 private:
  std::size_t rows_, cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> a_;
};

// In-place reduced row echelon form. Returns the pivot columns in
// increasing order. First-nonzero pivoting; rows below and above each
// pivot are cleared in the same sweep.
std::vector<std::size_t> rref_inplace(std::vector<std::uint32_t>& a, std::size_t rows,
                                      std::size_t cols, std::uint32_t p,
                                      ElimMode mode = ElimMode::Auto);

// A subspace of F_p^n held by its reduced-echelon basis. The basis is
// canonical: two subspaces are equal iff the stored rows are identical.
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, std::uint32_t p);  // zero subspace

  // Span of arbitrary vectors; reduces them to the canonical basis.
  static Subspace span(std::size_t ambient_dim, std::uint32_t p, const std::vector<Row>& vectors,
                       ElimMode mode = ElimMode::Auto);
  static Subspace full(std::size_t ambient_dim, std::uint32_t p);

  std::size_t ambient_dim() const { return ambient_; }
  std::uint32_t modulus() const { return p_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Row>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains_vector(const Row& v) const;
  bool contains(const Subspace& other) const;
  // Residue of v after eliminating the pivot coordinates of this
  // subspace; zero iff v lies in the subspace.
  Row reduce_vector(Row v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;  // Zassenhaus block reduction

  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }
  // Total order used for deterministic listings: by dim, then by basis entries.
  bool before(const Subspace& other) const;

  std::string to_string() const;

 private:
  void check_compatible(const Subspace& other) const;

  std::size_t ambient_;
  std::uint32_t p_;
  std::vector<Row> basis_;           // canonical RREF rows
  std::vector<std::size_t> pivots_;  // pivot column of each basis row
};

struct Decomposition {
  std::size_t rank;
  Subspace kernel;  // subspace of F_p^cols
  Subspace image;   // subspace of F_p^rows, spanned by the pivot columns
  FpMatrix rref;
};

// Rank, kernel, image and reduced echelon form of m in one sweep.
Decomposition decompose(const FpMatrix& m, ElimMode mode = ElimMode::Auto);

struct SubspaceOps {
  Subspace sum;
  Subspace intersection;
  bool a_contains_b;
};

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b);

}  // namespace fpd

#endif  // FPD_FP_MATRIX_HPP
