#include "arinf/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace arinf {

int lambda_cut(int q, int r, int m) {
  return std::max({0, 2 * r + m, r + q});
}

int kappa_cut(int p, int q, int r) {
  return std::max({0, 2 * r + p + q, r + std::max(p, q)});
}

bool in_region(int p, int q, int r, int k) {
  return k >= kappa_cut(p, q, r);
}

std::vector<SlicePoint> enumerate_region(int p, int q, const Window& w) {
  std::vector<SlicePoint> out;
  if (w.empty()) return out;
  for (int r = w.rmin; r <= w.rmax; ++r) {
    for (int k = std::max(0, kappa_cut(p, q, r)); k <= w.kmax; ++k)
      out.push_back({p, q, r, k});
  }
  return out;
}

bool n_shift_surjective(int p, int q, int r) { return r > -std::max(p, q); }
bool n_shift_injective(int p, int q, int r) { return r < -std::min(p, q); }

bool n_shift_surjective_oracle(int p, int q, int r, int k_limit) {
  for (int k = kappa_cut(p, q, r); k <= k_limit; ++k)
    if (k - 1 < kappa_cut(p, q, r - 1)) return false;
  return true;
}

bool n_shift_injective_oracle(int p, int q, int r, int k_limit) {
  for (int k = kappa_cut(p, q, r); k <= k_limit; ++k)
    if (k + 1 < kappa_cut(p, q, r + 1)) return false;
  return true;
}

std::tuple<int, int, int> t_to_K_index(int m, int r, int k, int n) {
  return {m + 2 * r, m - n, k};
}

std::tuple<int, int, int> K_to_t_index(int i, int j, int k, int n) {
  if (((n + j - i) % 2 + 2) % 2 != 0)
    throw std::domain_error("K_to_t_index: n + j - i must be even");
  int m = n + j;
  int r = -(n + j - i) / 2;
  return {m, r, k};
}

std::pair<int, int> s_reflection(int m, int r, int k) {
  int l = k - 2 * r - m;
  if (l < 0) throw std::domain_error("s_reflection: k < 2r + m");
  return {-(r + m), l};
}

std::tuple<int, int, int, int> stilde_reflection(int n, int p, int q, int r, int k) {
  int m = p + q;
  return {n - q, n - p, r - (n - m), k};
}

}  // namespace arinf
