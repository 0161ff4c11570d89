#include "arinf/sparse_op.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arinf {

SparseOp SparseOp::identity(const GradedSpace* s) {
  SparseOp op(s, s);
  for (int i = 0; i < s->dim(); ++i) op.add_entry(i, i, GaussRat(1));
  return op;
}

SparseOp SparseOp::diagonal(const GradedSpace* s, const std::vector<GaussRat>& d) {
  if (static_cast<int>(d.size()) != s->dim())
    throw std::invalid_argument("diagonal: size mismatch");
  SparseOp op(s, s);
  for (int i = 0; i < s->dim(); ++i)
    if (!d[static_cast<std::size_t>(i)].is_zero()) op.add_entry(i, i, d[static_cast<std::size_t>(i)]);
  return op;
}

void SparseOp::add_entry(int row, int col, GaussRat v) {
  if (v.is_zero()) return;
  auto& c = cols_[static_cast<std::size_t>(col)];
  for (auto& [r, val] : c) {
    if (r == row) {
      val = val + v;
      if (val.is_zero()) normalize_column(col);
      return;
    }
  }
  c.emplace_back(row, std::move(v));
}

void SparseOp::normalize_column(int c) {
  auto& col = cols_[static_cast<std::size_t>(c)];
  col.erase(std::remove_if(col.begin(), col.end(),
                           [](const auto& e) { return e.second.is_zero(); }),
            col.end());
}

std::vector<GaussRat> SparseOp::apply_basis(int c) const {
  std::vector<GaussRat> v(static_cast<std::size_t>(cod_->dim()));
  for (const auto& [r, val] : cols_[static_cast<std::size_t>(c)]) v[static_cast<std::size_t>(r)] = val;
  return v;
}

std::vector<GaussRat> SparseOp::apply(const std::vector<GaussRat>& v) const {
  if (static_cast<int>(v.size()) != dom_->dim())
    throw std::invalid_argument("apply: size mismatch");
  std::vector<GaussRat> out(static_cast<std::size_t>(cod_->dim()));
  for (int c = 0; c < cols(); ++c) {
    if (v[static_cast<std::size_t>(c)].is_zero()) continue;
    for (const auto& [r, val] : cols_[static_cast<std::size_t>(c)])
      out[static_cast<std::size_t>(r)] = out[static_cast<std::size_t>(r)] + val * v[static_cast<std::size_t>(c)];
  }
  return out;
}

SparseOp SparseOp::compose(const SparseOp& rhs) const {
  if (rhs.cod_ != dom_) throw std::invalid_argument("compose: space mismatch");
  SparseOp out(rhs.dom_, cod_);
  for (int c = 0; c < rhs.cols(); ++c)
    for (const auto& [mid, b] : rhs.cols_[static_cast<std::size_t>(c)])
      for (const auto& [r, a] : cols_[static_cast<std::size_t>(mid)]) out.add_entry(r, c, a * b);
  return out;
}

SparseOp SparseOp::scaled(const GaussRat& c) const {
  SparseOp out(dom_, cod_);
  if (c.is_zero()) return out;
  for (int j = 0; j < cols(); ++j)
    for (const auto& [r, v] : cols_[static_cast<std::size_t>(j)]) out.add_entry(r, j, v * c);
  return out;
}

SparseOp SparseOp::plus(const SparseOp& rhs) const {
  if (rhs.dom_ != dom_ || rhs.cod_ != cod_) throw std::invalid_argument("plus: space mismatch");
  SparseOp out(dom_, cod_);
  for (int j = 0; j < cols(); ++j) {
    for (const auto& [r, v] : cols_[static_cast<std::size_t>(j)]) out.add_entry(r, j, v);
    for (const auto& [r, v] : rhs.cols_[static_cast<std::size_t>(j)]) out.add_entry(r, j, v);
  }
  return out;
}

SparseOp SparseOp::minus(const SparseOp& rhs) const { return plus(rhs.scaled(GaussRat(-1))); }

SparseOp SparseOp::commutator(const SparseOp& rhs) const {
  return compose(rhs).minus(rhs.compose(*this));
}

SparseOp SparseOp::adjoint(const std::vector<Rat>& dom_w, const std::vector<Rat>& cod_w) const {
  SparseOp out(cod_, dom_);
  auto w = [](const std::vector<Rat>& t, int i) -> Rat {
    return t.empty() ? Rat(1) : t[static_cast<std::size_t>(i)];
  };
  for (int j = 0; j < cols(); ++j)
    for (const auto& [r, v] : cols_[static_cast<std::size_t>(j)]) {
      GaussRat coeff = v.conj() * GaussRat(w(cod_w, r) / w(dom_w, j));
      out.add_entry(j, r, coeff);
    }
  return out;
}

SparseOp SparseOp::exp_nilpotent(const GaussRat& c, int bound) const {
  if (dom_ != cod_) throw std::invalid_argument("exp_nilpotent: operator must be square");
  int cap = bound >= 0 ? bound : dom_->dim();
  SparseOp acc = identity(dom_);
  SparseOp power_term = identity(dom_);
  GaussRat coeff(1);
  for (int j = 1; j <= cap + 1; ++j) {
    power_term = compose(power_term);
    if (power_term.is_zero()) return acc;
    if (j == cap + 1)
      throw std::domain_error("exp_nilpotent: operator power did not vanish within bound");
    coeff = coeff * c / GaussRat(Rat(j));
    acc = acc.plus(power_term.scaled(coeff));
  }
  return acc;
}

SparseOp SparseOp::power(int e) const {
  if (dom_ != cod_) throw std::invalid_argument("power: operator must be square");
  if (e < 0) throw std::invalid_argument("power: negative exponent");
  SparseOp acc = identity(dom_);
  for (int j = 0; j < e; ++j) acc = compose(acc);
  return acc;
}

bool SparseOp::is_zero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

bool operator==(const SparseOp& a, const SparseOp& b) {
  if (a.dom_ != b.dom_ || a.cod_ != b.cod_) return false;
  return a.minus(b).is_zero();
}

bool SparseOp::equal_on(const SparseOp& a, const SparseOp& b, const std::vector<bool>& mask) {
  SparseOp d = a.minus(b);
  for (int c = 0; c < d.cols(); ++c)
    if (mask[static_cast<std::size_t>(c)] && !d.column_is_zero(c)) return false;
  return true;
}

std::size_t SparseOp::nnz() const {
  std::size_t s = 0;
  for (const auto& c : cols_) s += c.size();
  return s;
}

double SparseOp::max_abs() const {
  double m = 0;
  for (const auto& c : cols_)
    for (const auto& [r, v] : c) m = std::max(m, std::abs(v.to_complex()));
  return m;
}

std::vector<std::vector<std::complex<double>>> SparseOp::to_dense_complex() const {
  std::vector<std::vector<std::complex<double>>> out(
      static_cast<std::size_t>(cod_->dim()),
      std::vector<std::complex<double>>(static_cast<std::size_t>(dom_->dim())));
  for (int j = 0; j < cols(); ++j)
    for (const auto& [r, v] : cols_[static_cast<std::size_t>(j)])
      out[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = v.to_complex();
  return out;
}

}  // namespace arinf
