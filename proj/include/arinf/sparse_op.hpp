#pragma once

#include "arinf/graded.hpp"
#include "arinf/rational.hpp"

#include <complex>
#include <vector>

namespace arinf {

// Column-sparse exact linear map between truncations. Columns index the
// domain basis; each holds (row, coefficient) pairs in the codomain basis.
// The structural operators are monomial (at most a handful of entries per
// column), so compositions stay cheap.
class SparseOp {
 public:
  SparseOp() = default;
  SparseOp(const GradedSpace* dom, const GradedSpace* cod)
      : dom_(dom), cod_(cod), cols_(static_cast<std::size_t>(dom->dim())) {}

  static SparseOp identity(const GradedSpace* s);
  static SparseOp diagonal(const GradedSpace* s, const std::vector<GaussRat>& d);

  const GradedSpace* domain() const { return dom_; }
  const GradedSpace* codomain() const { return cod_; }
  int cols() const { return static_cast<int>(cols_.size()); }

  void add_entry(int row, int col, GaussRat v);
  const std::vector<std::pair<int, GaussRat>>& column(int c) const {
    return cols_[static_cast<std::size_t>(c)];
  }

  // Column c of the matrix as a dense codomain vector.
  std::vector<GaussRat> apply_basis(int c) const;
  std::vector<GaussRat> apply(const std::vector<GaussRat>& v) const;

  SparseOp compose(const SparseOp& rhs) const;     // this ∘ rhs
  SparseOp scaled(const GaussRat& c) const;
  SparseOp plus(const SparseOp& rhs) const;
  SparseOp minus(const SparseOp& rhs) const;
  SparseOp commutator(const SparseOp& rhs) const;  // this∘rhs - rhs∘this

  // Conjugate transpose with respect to diagonal inner products on both
  // sides (identity weights on either side if the vector is empty).
  SparseOp adjoint(const std::vector<Rat>& dom_w = {}, const std::vector<Rat>& cod_w = {}) const;

  // sum_{j<=bound} c^j/j! * this^j; requires this^j to vanish at or before
  // j = bound+1 (throws otherwise). bound < 0 means "iterate until zero",
  // capped at the domain dimension.
  SparseOp exp_nilpotent(const GaussRat& c, int bound = -1) const;
  SparseOp power(int e) const;

  bool is_zero() const;
  bool column_is_zero(int c) const { return cols_[static_cast<std::size_t>(c)].empty(); }
  friend bool operator==(const SparseOp& a, const SparseOp& b);

  // Equality restricted to a column mask (window-interior checks).
  static bool equal_on(const SparseOp& a, const SparseOp& b, const std::vector<bool>& mask);

  std::size_t nnz() const;
  double max_abs() const;
  std::vector<std::vector<std::complex<double>>> to_dense_complex() const;

 private:
  const GradedSpace* dom_ = nullptr;
  const GradedSpace* cod_ = nullptr;
  std::vector<std::vector<std::pair<int, GaussRat>>> cols_;
  void normalize_column(int c);
};

}  // namespace arinf
