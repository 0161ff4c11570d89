#include "arinf/graded.hpp"

#include <cstdlib>
#include <stdexcept>

namespace arinf {

std::uint64_t GradedSpace::key(int p, int q, int r, int k, int slot) {
  auto u = [](int v) { return static_cast<std::uint64_t>(v + 2048) & 0xfff; };
  return u(p) | (u(q) << 12) | (u(r) << 24) | (u(k) << 36) | (u(slot) << 48);
}

GradedSpace::GradedSpace(HodgeDatum datum, Window window)
    : datum_(std::move(datum)), window_(window) {
  if (!validate(datum_).empty())
    throw std::invalid_argument("build_truncation: invalid Hodge datum");
  for (int p = 0; p <= datum_.n; ++p)
    for (int q = 0; q <= datum_.n; ++q) {
      int hpq = datum_.hodge(p, q);
      if (hpq == 0) continue;
      for (const SlicePoint& pt : enumerate_region(p, q, window_))
        for (int slot = 0; slot < hpq; ++slot)
          basis_.push_back({pt.p, pt.q, pt.r, pt.k, slot});
    }
  for (int i = 0; i < dim(); ++i) {
    const GradedIndex& b = basis_[static_cast<std::size_t>(i)];
    pos_[key(b.p, b.q, b.r, b.k, b.slot)] = i;
  }
}

int GradedSpace::position(int p, int q, int r, int k, int slot) const {
  auto it = pos_.find(key(p, q, r, k, slot));
  return it == pos_.end() ? -1 : it->second;
}

int GradedSpace::dim_total_degree(int i) const {
  int c = 0;
  for (const auto& b : basis_)
    if (b.p + b.q + 2 * b.r == i) ++c;
  return c;
}

int GradedSpace::dim_bidegree(int m, int r) const {
  int c = 0;
  for (const auto& b : basis_)
    if (b.p + b.q == m && b.r == r) ++c;
  return c;
}

int GradedSpace::dim_piece(int p, int q, int r, int k) const {
  int c = 0;
  for (const auto& b : basis_)
    if (b.p == p && b.q == q && b.r == r && b.k == k) ++c;
  return c;
}

int GradedSpace::dim_bidegree_k(int m, int r, int k) const {
  int c = 0;
  for (const auto& b : basis_)
    if (b.p + b.q == m && b.r == r && b.k == k) ++c;
  return c;
}

GradedSpace build_truncation(const HodgeDatum& datum, const Window& window) {
  return GradedSpace(datum, window);
}

int k_complex_dim(const HodgeDatum& d, int i, int j, int k) {
  if (((j + d.n - i) % 2 + 2) % 2 != 0) return 0;
  if (k < std::max(0, i)) return 0;
  int m = j + d.n;
  int s = 0;
  for (int p = 0; p <= d.n; ++p) {
    int q = m - p;
    if (q < 0 || q > d.n) continue;
    if (std::abs(p - q) <= 2 * k - i) s += d.hodge(p, q);
  }
  return s;
}

}  // namespace arinf
