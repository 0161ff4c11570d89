#pragma once

#include "arinf/hodge.hpp"
#include "arinf/lattice.hpp"
#include "arinf/rational.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace arinf {

// Basis label: slot enumerates the h^{p,q} harmonic classes of the (p,q) piece.
struct GradedIndex {
  int p, q, r, k, slot;
  friend bool operator==(const GradedIndex& a, const GradedIndex& b) {
    return a.p == b.p && a.q == b.q && a.r == b.r && a.k == b.k && a.slot == b.slot;
  }
};

// Finite truncation of the cutoff complex: for every (p,q) with h^{p,q} > 0
// and every (r,k) in Lambda_{p,q} cut to the window, h^{p,q} basis slots,
// ordered lexicographically by (p,q,r,k,slot).
class GradedSpace {
 public:
  GradedSpace() = default;
  GradedSpace(HodgeDatum datum, Window window);

  const HodgeDatum& datum() const { return datum_; }
  const Window& window() const { return window_; }
  const std::vector<GradedIndex>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  // Position of an index in the basis, or -1 when absent (out of region,
  // out of window, or slot out of range).
  int position(int p, int q, int r, int k, int slot) const;
  int position(const GradedIndex& ix) const { return position(ix.p, ix.q, ix.r, ix.k, ix.slot); }

  int dim_total_degree(int i) const;          // all basis elements with p+q+2r = i
  int dim_bidegree(int m, int r) const;       // the (m, 2r) piece
  int dim_piece(int p, int q, int r, int k) const;
  int dim_bidegree_k(int m, int r, int k) const;  // fixed hbar power within (m, 2r)

 private:
  HodgeDatum datum_;
  Window window_;
  std::vector<GradedIndex> basis_;
  std::unordered_map<std::uint64_t, int> pos_;
  static std::uint64_t key(int p, int q, int r, int k, int slot);
};

GradedSpace build_truncation(const HodgeDatum& datum, const Window& window);

// Diagonal inner product weights (positive); the default is the identity,
// i.e. harmonic representatives orthonormalized.
struct InnerProduct {
  std::vector<Rat> weights;
  static InnerProduct identity(const GradedSpace& s) {
    return {std::vector<Rat>(static_cast<std::size_t>(s.dim()), Rat(1))};
  }
};

// Dimension of the (i,j,k) piece in the total-degree grading, straight from
// the Hodge data: sum of h^{p,q} over p+q = j+n, |p-q| <= 2k-i, when
// j+n-i is even and k >= max(0,i); zero otherwise.
int k_complex_dim(const HodgeDatum& d, int i, int j, int k);

}  // namespace arinf
