#pragma once

#include "arinf/gamma.hpp"
#include "arinf/spectral_measure.hpp"

namespace arinf {

// Zeta-regularized determinant det_inf(s - Phi) weighted by an observable:
// exp(-d/dz zeta(s,z)|_{z=0}) assembled from the closed Hurwitz derivative
// per progression, never by numerical differentiation. Exact rational
// bookkeeping of eigenvalue hits: a factor s - lambda = 0 becomes an
// explicit zero of order = weight in the LogComplex result, and negative
// factors take the principal branch.
LogComplex regdet(const SpectralMeasure& m, const std::string& observable, const Rat& s);

// Same for det_inf((s - Phi)/tau) with log_tau = log(tau): the scaling
// enters through zeta(0) via zeta_scaled(z) = tau^z zeta(z).
LogComplex regdet_scaled(const SpectralMeasure& m, const std::string& observable, const Rat& s,
                         double log_tau);

struct GridPoint {
  Rat s;
  double residual = 0.0;
  int order_det = 0;     // pole order of the determinant side
  int order_factor = 0;  // pole order of the Gamma-product side
  bool pole_collision = false;
};

struct DetComparison {
  std::string label;
  double tolerance = 0.0;
  double max_residual = 0.0;
  bool pass = false;
  std::vector<GridPoint> points;
};

// det_inf((s - Phi_0)/2pi)^{-1} on the degree-m Frobenius spectrum against
// the local factor from the Gamma path; at eigenvalue hits both sides are
// compared as pole order plus leading coefficient.
DetComparison check_deninger(const HodgeDatum& d, int m, const std::vector<Rat>& s_grid,
                             double tolerance);

// Alternating version across all degrees with the sigma^L(w)^2 observable
// against prod_m local_factor(m,s)^{(-1)^{m+n}}.
DetComparison check_alternating(const HodgeDatum& d, const std::vector<Rat>& s_grid,
                                double tolerance);

}  // namespace arinf
