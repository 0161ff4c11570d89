#pragma once

#include <optional>
#include <tuple>
#include <vector>

namespace arinf {

// Finite truncation box; every space in the library is cut to one of these.
// No operation supplies one implicitly (the CLI owns the default).
struct Window {
  int rmin = 0;
  int rmax = 0;
  int kmax = 0;

  bool contains(int r, int k) const { return r >= rmin && r <= rmax && k >= 0 && k <= kmax; }
  bool empty() const { return rmin > rmax || kmax < 0; }
};

// lambda(q,r) = max{0, 2r+m, r+q}
int lambda_cut(int q, int r, int m);

// kappa(p,q,r) = max{0, 2r+m, r+max(p,q)}; the last term is the integer form
// of (|p-q|+2r+m)/2. Symmetric in (p,q).
int kappa_cut(int p, int q, int r);

// Membership of (r,k) in the region Lambda_{p,q}: k >= kappa(p,q,r).
bool in_region(int p, int q, int r, int k);

struct SlicePoint {
  int p, q, r, k;
  int m() const { return p + q; }
  int total_degree() const { return p + q + 2 * r; }   // i = m + 2r
  int hbar_layer() const { return k - 2 * r - p - q; } // l = k - (2r+m), N-grading
};

// All members of Lambda_{p,q} inside the window, lexicographic in (r,k).
std::vector<SlicePoint> enumerate_region(int p, int q, const Window& w);

// Closed-form predicates for the shift ranges of N ...
bool n_shift_surjective(int p, int q, int r);  // r > -max(p,q)
bool n_shift_injective(int p, int q, int r);   // r < -min(p,q)

// ... and the brute-force oracles they must reproduce: column r is
// "surjective" when every (r,k) in the region has (r-1,k-1) in the region,
// "injective" when every (r,k) has (r+1,k+1) in the region. k is scanned up
// to k_limit.
bool n_shift_surjective_oracle(int p, int q, int r, int k_limit);
bool n_shift_injective_oracle(int p, int q, int r, int k_limit);

// Index reparameterization between the U/hbar grading (m, r, k) and the
// total-degree grading (i, j, k): i = m + 2r, j = m - n.
std::tuple<int, int, int> t_to_K_index(int m, int r, int k, int n);
// Inverse; requires n + j - i even, else std::domain_error.
std::tuple<int, int, int> K_to_t_index(int i, int j, int k, int n);

// Index-level duality reflections.
// S: (r, k) -> (-(r+m), k-2r-m); requires k >= 2r+m (else std::domain_error).
std::pair<int, int> s_reflection(int m, int r, int k);
// S~: (p,q,r,k) -> (n-q, n-p, r-(n-m), k).
std::tuple<int, int, int, int> stilde_reflection(int n, int p, int q, int r, int k);

}  // namespace arinf
