#include "arinf/sl2.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace arinf {

Sl2Structure::Sl2Structure(const GradedSpace* space) : space_(space) {
  const HodgeDatum& d = space_->datum();
  auto prim = primitive_dims(d);
  auto prim_at = [&](int a, int b) {
    auto it = prim.find({a, b});
    return it == prim.end() ? 0 : it->second;
  };
  for (int p = 0; p <= d.n; ++p)
    for (int q = 0; q <= d.n; ++q) {
      int hpq = d.hodge(p, q);
      if (hpq == 0) continue;
      std::vector<StringSlot> layout;
      for (int j = std::max(0, p + q - d.n); j <= std::min(p, q); ++j)
        for (int t = 0; t < prim_at(p - j, q - j); ++t) layout.push_back({j, t});
      if (static_cast<int>(layout.size()) != hpq)
        throw std::logic_error("Sl2Structure: Lefschetz decomposition does not fill h^{p,q}");
      slots_[{p, q}] = std::move(layout);
    }
  rungs_.reserve(static_cast<std::size_t>(space_->dim()));
  for (const GradedIndex& b : space_->basis()) {
    StringSlot s = slot_decode(b.p, b.q, b.slot);
    Rung r;
    r.a = b.p - s.j;
    r.b = b.q - s.j;
    r.t = s.t;
    r.j = s.j;
    r.r0 = b.r + s.j;
    r.k = b.k;
    r.d = d.n - r.a - r.b;
    rungs_.push_back(r);
  }
}

StringSlot Sl2Structure::slot_decode(int p, int q, int slot) const {
  auto it = slots_.find({p, q});
  if (it == slots_.end() || slot < 0 || slot >= static_cast<int>(it->second.size()))
    throw std::out_of_range("slot_decode: no such slot");
  return it->second[static_cast<std::size_t>(slot)];
}

int Sl2Structure::slot_encode(int p, int q, int j, int t) const {
  auto it = slots_.find({p, q});
  if (it == slots_.end()) return -1;
  for (int s = 0; s < static_cast<int>(it->second.size()); ++s) {
    const StringSlot& ss = it->second[static_cast<std::size_t>(s)];
    if (ss.j == j && ss.t == t) return s;
  }
  return -1;
}

int Sl2Structure::rung_position(int position, int j) const {
  const Rung& r = rungs_[static_cast<std::size_t>(position)];
  if (j < 0 || j > r.d) return -1;
  int p = r.a + j, q = r.b + j;
  int slot = slot_encode(p, q, j, r.t);
  if (slot < 0) return -1;
  return space_->position(p, q, r.r0 - j, r.k, slot);
}

bool Sl2Structure::string_interior(int position) const {
  const Rung& r = rungs_[static_cast<std::size_t>(position)];
  const Window& w = space_->window();
  return r.r0 <= w.rmax && r.r0 - r.d >= w.rmin;
}

std::vector<bool> Sl2Structure::interior_mask() const {
  std::vector<bool> m(static_cast<std::size_t>(space_->dim()));
  for (int i = 0; i < space_->dim(); ++i) m[static_cast<std::size_t>(i)] = string_interior(i);
  return m;
}

std::vector<StringInstance> Sl2Structure::strings() const {
  std::vector<StringInstance> out;
  std::set<std::tuple<int, int, int, int, int>> seen;
  for (int i = 0; i < space_->dim(); ++i) {
    const Rung& r = rungs_[static_cast<std::size_t>(i)];
    if (!seen.insert({r.a, r.b, r.t, r.r0, r.k}).second) continue;
    out.push_back({r.a, r.b, r.t, r.r0, r.k, r.d, string_interior(i)});
  }
  return out;
}

SparseOp Sl2Structure::raising() const {
  SparseOp op(space_, space_);
  for (int c = 0; c < space_->dim(); ++c) {
    const Rung& r = rungs_[static_cast<std::size_t>(c)];
    if (r.j == r.d) continue;
    int row = rung_position(c, r.j + 1);
    if (row >= 0) op.add_entry(row, c, GaussRat(1));
  }
  return op;
}

SparseOp Sl2Structure::lowering() const {
  SparseOp op(space_, space_);
  for (int c = 0; c < space_->dim(); ++c) {
    const Rung& r = rungs_[static_cast<std::size_t>(c)];
    if (r.j == 0) continue;
    int row = rung_position(c, r.j - 1);
    if (row >= 0) op.add_entry(row, c, GaussRat(Rat(r.j) * Rat(r.d - r.j + 1)));
  }
  return op;
}

SparseOp Sl2Structure::cartan() const {
  SparseOp op(space_, space_);
  for (int c = 0; c < space_->dim(); ++c) {
    const GradedIndex& b = space_->basis()[static_cast<std::size_t>(c)];
    int w = b.p + b.q - space_->datum().n;
    if (w != 0) op.add_entry(c, c, GaussRat(Rat(w)));
  }
  return op;
}

SparseOp Sl2Structure::weyl_flip() const {
  SparseOp e = raising();
  SparseOp f = lowering();
  SparseOp expe = e.exp_nilpotent(GaussRat(1));
  SparseOp expmf = f.exp_nilpotent(GaussRat(-1));
  return expe.compose(expmf).compose(expe);
}

SparseOp Sl2Structure::normalized_flip() const {
  SparseOp w = weyl_flip();
  SparseOp out(space_, space_);
  for (int c = 0; c < space_->dim(); ++c) {
    GaussRat zeta = i_pow(rungs_[static_cast<std::size_t>(c)].d & 1);
    for (const auto& [row, v] : w.column(c)) out.add_entry(row, c, v * zeta);
  }
  return out;
}

}  // namespace arinf
