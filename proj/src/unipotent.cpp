#include "arinf/unipotent.hpp"

#include <cstddef>
#include <stdexcept>

namespace arinf {

namespace {

RatSeries poly_mul_trunc(const RatSeries& a, const RatSeries& b, int order) {
  RatSeries out(static_cast<std::size_t>(order), Rat(0));
  for (int i = 0; i < order && i < static_cast<int>(a.size()); ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j < order && j < static_cast<int>(b.size()); ++j)
      out[static_cast<std::size_t>(i + j)] +=
          a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  }
  return out;
}

RatMat rat_identity(std::size_t n) {
  RatMat m(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

void rat_axpy(RatMat& acc, const RatMat& x, const Rat& c) {
  for (std::size_t i = 0; i < acc.size(); ++i)
    for (std::size_t j = 0; j < acc[i].size(); ++j) acc[i][j] += x[i][j] * c;
}

}  // namespace

RatSeries series_exp(int order) {
  if (order < 1) throw std::domain_error("series order must be positive");
  RatSeries c(static_cast<std::size_t>(order), Rat(0));
  c[0] = Rat(1);
  Rat fact(1);
  for (int i = 1; i < order; ++i) {
    fact *= Rat(i);
    c[static_cast<std::size_t>(i)] = Rat(1) / fact;
  }
  return c;
}

RatSeries series_compose_log(const RatSeries& f, int order) {
  if (f.empty() || f[0] != Rat(1))
    throw std::domain_error("log composition needs constant term 1");
  RatSeries u(f);
  u.resize(static_cast<std::size_t>(order), Rat(0));
  u[0] = Rat(0);
  RatSeries out(static_cast<std::size_t>(order), Rat(0));
  RatSeries upow = u;
  for (int j = 1; j < order; ++j) {
    const Rat c = Rat((j % 2) ? 1 : -1) / Rat(j);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += upow[i] * c;
    if (j + 1 < order) upow = poly_mul_trunc(upow, u, order);
  }
  return out;
}

bool formal_log_exp_is_identity(int order) {
  const RatSeries g = series_compose_log(series_exp(order), order);
  for (int i = 0; i < order; ++i) {
    const Rat want = (i == 1) ? Rat(1) : Rat(0);
    if (g[static_cast<std::size_t>(i)] != want) return false;
  }
  return true;
}

RatMat rat_jordan(int size) {
  RatMat m(static_cast<std::size_t>(size), std::vector<Rat>(static_cast<std::size_t>(size), Rat(0)));
  for (int i = 0; i + 1 < size; ++i)
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = Rat(1);
  return m;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
  const std::size_t n = a.size();
  RatMat out(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

bool rat_is_zero(const RatMat& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

bool nilpotent_log_exp_identity(const RatMat& N) {
  const std::size_t n = N.size();
  RatMat expm = rat_identity(n);
  RatMat power = rat_identity(n);
  Rat fact(1);
  for (std::size_t j = 1; j <= n; ++j) {
    power = rat_mul(power, N);
    if (rat_is_zero(power)) break;
    fact *= Rat(static_cast<long>(j));
    rat_axpy(expm, power, Rat(1) / fact);
  }
  RatMat u = expm;
  for (std::size_t i = 0; i < n; ++i) u[i][i] -= Rat(1);
  RatMat logm(n, std::vector<Rat>(n, Rat(0)));
  RatMat upow = rat_identity(n);
  for (std::size_t j = 1; j <= n; ++j) {
    upow = rat_mul(upow, u);
    if (rat_is_zero(upow)) break;
    rat_axpy(logm, upow, Rat((j % 2) ? 1 : -1) / Rat(static_cast<long>(j)));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (logm[i][j] != N[i][j]) return false;
  return true;
}

bool nilpotent_log_exp_identity(const SparseOp& N, int nu_bound) {
  const SparseOp expm = N.exp_nilpotent(GaussRat(Rat(1)), nu_bound);
  const SparseOp u = expm.minus(SparseOp::identity(N.domain()));
  SparseOp logm(N.domain(), N.codomain());
  SparseOp upow = u;
  for (int j = 1; j <= nu_bound + 1 && !upow.is_zero(); ++j) {
    logm = logm.plus(upow.scaled(GaussRat(Rat((j % 2) ? 1 : -1) / Rat(j))));
    upow = upow.compose(u);
  }
  return logm == N;
}

}  // namespace arinf
