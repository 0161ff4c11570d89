#include "arinf/gamma.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace arinf {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2Pi = 1.8378770664093454836;

double wrap_phase(double p) {
  p = std::fmod(p, 2 * kPi);
  if (p > kPi) p -= 2 * kPi;
  if (p <= -kPi) p += 2 * kPi;
  return p;
}

// Lanczos g = 7, nine coefficients; relative accuracy ~1e-15 on Re z >= 1/2.
std::complex<double> lanczos_log_gamma(std::complex<double> z) {
  static const double c[9] = {0.99999999999980993,     676.5203681218851,
                              -1259.1392167224028,     771.32342877765313,
                              -176.61502916214059,     12.507343278686905,
                              -0.13857109526572012,    9.9843695780195716e-6,
                              1.5056327351493116e-7};
  std::complex<double> x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z - 1.0 + static_cast<double>(i));
  std::complex<double> t = z + 6.5;
  return 0.5 * kLog2Pi + (z - 0.5) * std::log(t) - t + std::log(x);
}

bool is_nonpositive_integer(std::complex<double> z, long& j) {
  if (z.imag() != 0.0) return false;
  double re = z.real();
  if (re > 0.0 || re != std::floor(re)) return false;
  j = static_cast<long>(-re);
  return true;
}

}  // namespace

LogComplex lc_from_value(std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0))
    throw std::domain_error("lc_from_value: zero has no log form");
  return {std::log(std::abs(z)), std::arg(z), 0};
}

std::complex<double> lc_value(const LogComplex& a) {
  if (a.order != 0) throw std::domain_error("lc_value: nonzero pole order");
  return std::exp(a.log_mag) * std::complex<double>(std::cos(a.phase), std::sin(a.phase));
}

LogComplex lc_mul(const LogComplex& a, const LogComplex& b) {
  return {a.log_mag + b.log_mag, a.phase + b.phase, a.order + b.order};
}

LogComplex lc_div(const LogComplex& a, const LogComplex& b) {
  return {a.log_mag - b.log_mag, a.phase - b.phase, a.order - b.order};
}

LogComplex lc_pow(const LogComplex& a, int e) {
  return {a.log_mag * e, a.phase * e, a.order * e};
}

double lc_rel_distance(const LogComplex& a, const LogComplex& b) {
  if (a.order != b.order) return std::numeric_limits<double>::infinity();
  std::complex<double> d(a.log_mag - b.log_mag, wrap_phase(a.phase - b.phase));
  return std::abs(std::exp(d) - 1.0);
}

LogComplex log_gamma(std::complex<double> z) {
  long j = 0;
  if (is_nonpositive_integer(z, j)) {
    // Gamma(z) ~ (-1)^j / j! * (z + j)^-1
    return {-std::lgamma(static_cast<double>(j) + 1.0), (j % 2) ? kPi : 0.0, 1};
  }
  if (z.real() >= 0.5) {
    std::complex<double> lg = lanczos_log_gamma(z);
    return {lg.real(), lg.imag(), 0};
  }
  // Gamma(z) Gamma(1-z) = pi / sin(pi z)
  std::complex<double> lg =
      std::log(kPi) - std::log(std::sin(kPi * z)) - lanczos_log_gamma(1.0 - z);
  return {lg.real(), lg.imag(), 0};
}

LogComplex gamma_C(std::complex<double> s) {
  LogComplex g = log_gamma(s);
  g.log_mag -= s.real() * kLog2Pi;
  g.phase -= s.imag() * kLog2Pi;
  return g;
}

LogComplex gamma_R(std::complex<double> s) {
  LogComplex g = log_gamma(0.5 * s);
  // the pole is order-1 in s/2; rewrite the leading coefficient in s
  g.log_mag += g.order * std::log(2.0);
  g.log_mag += -0.5 * std::log(2.0) - 0.5 * s.real() * std::log(kPi);
  g.phase += -0.5 * s.imag() * std::log(kPi);
  return g;
}

}  // namespace arinf
