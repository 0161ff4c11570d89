#pragma once

#include <complex>

namespace arinf {

// A meromorphic value at a point, in log form: the number
// exp(log_mag + i*phase) * (s - s0)^(-order) to leading order. order > 0 is
// a pole, order < 0 a zero; for order = 0 the pair is just the value's log.
// Carrying the order explicitly lets alternating products cancel poles
// against zeros without floating infinities.
struct LogComplex {
  double log_mag = 0.0;
  double phase = 0.0;
  int order = 0;
};

LogComplex lc_from_value(std::complex<double> z);  // z != 0
std::complex<double> lc_value(const LogComplex& a);  // order must be 0

LogComplex lc_mul(const LogComplex& a, const LogComplex& b);
LogComplex lc_div(const LogComplex& a, const LogComplex& b);
LogComplex lc_pow(const LogComplex& a, int e);

// |exp(delta) - 1| where delta is the log-space difference with the phase
// wrapped to (-pi, pi]; +infinity when the orders differ.
double lc_rel_distance(const LogComplex& a, const LogComplex& b);

// log Gamma(z), Lanczos evaluation with reflection for Re z < 1/2.
// At an exact nonpositive integer -j the result is the order-1 pole with
// leading coefficient (-1)^j / j!.
LogComplex log_gamma(std::complex<double> z);

// (2 pi)^(-s) Gamma(s)
LogComplex gamma_C(std::complex<double> s);
// 2^(-1/2) pi^(-s/2) Gamma(s/2); poles at nonpositive even integers.
LogComplex gamma_R(std::complex<double> s);

}  // namespace arinf
