#pragma once

#include "arinf/rational.hpp"
#include "arinf/sparse_op.hpp"

#include <vector>

namespace arinf {

// Truncated power series over the rationals, coefficient c[i] of x^i.
using RatSeries = std::vector<Rat>;

RatSeries series_exp(int order);                            // exp(x) mod x^order
RatSeries series_compose_log(const RatSeries& f, int order);  // log(f), f(0) = 1

// log(exp(x)) = x in Q[x]/(x^order). Every monomial of log(exp(tN)) carries
// the same power of t as of N, so this scalar identity together with exact
// powers of N settles (1/2 pi i) log(exp(-2 pi i N)) = -N for any nilpotent N
// of order <= order, at any scalar t.
bool formal_log_exp_is_identity(int order);

using RatMat = std::vector<std::vector<Rat>>;

RatMat rat_jordan(int size);
RatMat rat_mul(const RatMat& a, const RatMat& b);
bool rat_is_zero(const RatMat& a);

// Exact matrix form of the same identity at t = 1: log(exp(N)) = N over Q.
bool nilpotent_log_exp_identity(const RatMat& N);
// Gaussian-rational window form, exact; nu_bound caps the power chain.
bool nilpotent_log_exp_identity(const SparseOp& N, int nu_bound);

}  // namespace arinf
