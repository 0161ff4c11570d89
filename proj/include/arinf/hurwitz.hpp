#pragma once

#include <complex>

namespace arinf {

// Hurwitz zeta sum_{j>=0} (a+j)^{-z} continued by Euler-Maclaurin.
// Requires z != 1 (simple pole) and a not a real nonpositive integer;
// throws std::domain_error otherwise. Principal branch throughout.
std::complex<double> hurwitz_zeta(std::complex<double> z, std::complex<double> a);

// Exact value at z = 0: 1/2 - a.
std::complex<double> hurwitz_zeta_at0(std::complex<double> a);

// d/dz at z = 0, by the closed Euler-Maclaurin form; arguments left of the
// convergence shift are peeled off with zeta'(0,a) = -log(a) + zeta'(0,a+1).
std::complex<double> hurwitz_zeta_prime0(std::complex<double> a);

}  // namespace arinf
