#include "arinf/hurwitz.hpp"

#include <cmath>
#include <stdexcept>

namespace arinf {
namespace {

// B_2, B_4, ..., B_20: enough for ~1e-15 at shift height 20.
const double kBernoulli[] = {1.0 / 6,      -1.0 / 30,      1.0 / 42,      -1.0 / 30,
                             5.0 / 66,     -691.0 / 2730,  7.0 / 6,       -3617.0 / 510,
                             43867.0 / 798, -174611.0 / 330};
constexpr int kBernoulliCount = 10;
constexpr double kShiftHeight = 20.0;

bool bad_base(std::complex<double> a) {
  return a.imag() == 0.0 && a.real() <= 0.0 && a.real() == std::floor(a.real());
}

}  // namespace

std::complex<double> hurwitz_zeta(std::complex<double> z, std::complex<double> a) {
  if (z == std::complex<double>(1.0, 0.0))
    throw std::domain_error("hurwitz_zeta: pole at z=1");
  if (bad_base(a)) throw std::domain_error("hurwitz_zeta: base is a nonpositive integer");
  std::complex<double> head = 0.0;
  int M = 0;
  while (a.real() + M < kShiftHeight) {
    head += std::exp(-z * std::log(a + static_cast<double>(M)));
    ++M;
  }
  std::complex<double> A = a + static_cast<double>(M);
  std::complex<double> la = std::log(A);
  std::complex<double> tail = std::exp((1.0 - z) * la) / (z - 1.0) + 0.5 * std::exp(-z * la);
  // sum_i B_{2i}/(2i)! * z(z+1)...(z+2i-2) * A^{1-z-2i}
  std::complex<double> rising = z;        // (z)_{2i-1} built incrementally
  double fact = 2.0;                      // (2i)!
  std::complex<double> apow = std::exp((-1.0 - z) * la);  // A^{-z-2i+1} at i=1
  for (int i = 1; i <= kBernoulliCount; ++i) {
    tail += kBernoulli[i - 1] / fact * rising * apow;
    rising *= (z + static_cast<double>(2 * i - 1)) * (z + static_cast<double>(2 * i));
    fact *= (2.0 * i + 1) * (2.0 * i + 2);
    apow /= A * A;
  }
  return head + tail;
}

std::complex<double> hurwitz_zeta_at0(std::complex<double> a) { return 0.5 - a; }

std::complex<double> hurwitz_zeta_prime0(std::complex<double> a) {
  if (bad_base(a)) throw std::domain_error("hurwitz_zeta_prime0: base is a nonpositive integer");
  std::complex<double> head = 0.0;
  int M = 0;
  while (a.real() + M < kShiftHeight) {
    head -= std::log(a + static_cast<double>(M));
    ++M;
  }
  std::complex<double> A = a + static_cast<double>(M);
  std::complex<double> L = std::log(A);
  std::complex<double> out = head + A * (L - 1.0) - 0.5 * L;
  std::complex<double> apow = 1.0 / A;  // A^{1-2i} at i=1
  for (int i = 1; i <= kBernoulliCount; ++i) {
    out += kBernoulli[i - 1] / (2.0 * i * (2.0 * i - 1)) * apow;
    apow /= A * A;
  }
  return out;
}

}  // namespace arinf
