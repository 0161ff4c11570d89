#pragma once

#include "arinf/gamma.hpp"
#include "arinf/hodge.hpp"

namespace arinf {

// Archimedean local factor of the weight-m cohomology:
//   over C:  prod_{p+q=m} Gamma_C(s - min(p,q))^{h^{p,q}}
//   over R:  prod_{p<q, p+q=m} Gamma_C(s - p)^{h^{p,q}}
//            * Gamma_R(s - p)^{h^{p,+}} Gamma_R(s - p + 1)^{h^{p,-}} at 2p = m
// Empty degree gives the empty product (exact 1). Over R, a nonzero diagonal
// piece without the eigenspace split is a configuration error.
LogComplex local_factor(const HodgeDatum& d, int m, std::complex<double> s);

// prod_{m=0}^{2n} local_factor(m,s)^{(-1)^{m+n}}, with pole/zero orders
// cancelled in log space.
LogComplex alternating_product(const HodgeDatum& d, std::complex<double> s);

}  // namespace arinf
