#include "arinf/regdet.hpp"

#include "arinf/factors.hpp"
#include "arinf/hurwitz.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace arinf {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2Pi = 1.8378770664093454836;

long integral_weight(std::complex<double> w, const char* where) {
  double r = std::round(w.real());
  if (w.imag() != 0.0 || std::abs(w.real() - r) > 1e-9)
    throw std::domain_error(std::string(where) +
                            ": eigenvalue hit needs an integral observable weight");
  return static_cast<long>(r);
}

// multiply acc by ((s - lambda)/tau)^w for one finite eigenvalue
void fold_finite(LogComplex& acc, const Rat& s, const Rat& lambda, std::complex<double> w,
                 double log_tau) {
  if (w == std::complex<double>(0.0)) return;
  Rat d = s - lambda;
  if (d == 0) {
    long wi = integral_weight(w, "regdet");
    acc.order -= static_cast<int>(wi);
    acc.log_mag -= static_cast<double>(wi) * log_tau;
    return;
  }
  double logd = std::log(std::abs(to_double(d)));
  double ph = d < 0 ? kPi : 0.0;
  acc.log_mag += w.real() * (logd - log_tau) - w.imag() * ph;
  acc.phase += w.real() * ph + w.imag() * (logd - log_tau);
}

}  // namespace

LogComplex regdet_scaled(const SpectralMeasure& m, const std::string& observable, const Rat& s,
                         double log_tau) {
  LogComplex acc;
  for (const SpectralEntry& e : m.head)
    fold_finite(acc, s, e.lambda, observable_weight(e.weights, e.multiplicity, observable),
                log_tau);
  for (const ProgressionTail& t : m.tails) {
    std::complex<double> w = observable_weight(t.weights, t.multiplicity, observable);
    if (w == std::complex<double>(0.0)) continue;
    // peel eigenvalues start - j with nonpositive base so the remaining
    // Hurwitz argument is positive
    Rat base = s - t.start;
    Rat lambda = t.start;
    while (base <= 0) {
      fold_finite(acc, s, lambda, w, log_tau);
      base += 1;
      lambda -= 1;
    }
    // remaining tail: exp(-w (log(tau) zeta_H(0,a) + zeta_H'(0,a)))
    double a = to_double(base);
    std::complex<double> dz = log_tau * hurwitz_zeta_at0(a) + hurwitz_zeta_prime0(a);
    std::complex<double> contrib = -w * dz;
    acc.log_mag += contrib.real();
    acc.phase += contrib.imag();
  }
  return acc;
}

LogComplex regdet(const SpectralMeasure& m, const std::string& observable, const Rat& s) {
  return regdet_scaled(m, observable, s, 0.0);
}

namespace {

DetComparison run_grid(const HodgeDatum& d, const std::vector<Rat>& s_grid, double tolerance,
                       std::string label, bool alternating, int m) {
  DetComparison rep;
  rep.label = std::move(label);
  rep.tolerance = tolerance;
  rep.pass = true;
  SpectralMeasure measure;
  std::string obs;
  if (alternating) {
    std::vector<SpectralMeasure> parts;
    for (int deg = 0; deg <= 2 * d.n; ++deg) parts.push_back(ar_cohomology(d, deg, 4));
    measure = measure_union(parts);
    obs = kWeylSquareObservable;
  } else {
    measure = ar_cohomology(d, m, 4);
    obs = kIdObservable;
  }
  for (const Rat& s : s_grid) {
    GridPoint pt;
    pt.s = s;
    LogComplex det_side = lc_pow(regdet_scaled(measure, obs, s, kLog2Pi), -1);
    std::complex<double> sc(to_double(s), 0.0);
    LogComplex factor_side =
        alternating ? alternating_product(d, sc) : local_factor(d, m, sc);
    pt.order_det = det_side.order;
    pt.order_factor = factor_side.order;
    pt.pole_collision = det_side.order != 0 || factor_side.order != 0;
    pt.residual = lc_rel_distance(det_side, factor_side);
    rep.points.push_back(pt);
    rep.max_residual = std::max(rep.max_residual, pt.residual);
    rep.pass = rep.pass && pt.residual <= tolerance;
  }
  return rep;
}

}  // namespace

DetComparison check_deninger(const HodgeDatum& d, int m, const std::vector<Rat>& s_grid,
                             double tolerance) {
  std::ostringstream label;
  label << d.name << " degree " << m << ": det_inf((s-Phi)/2pi)^-1 vs Gamma_C product";
  return run_grid(d, s_grid, tolerance, label.str(), false, m);
}

DetComparison check_alternating(const HodgeDatum& d, const std::vector<Rat>& s_grid,
                                double tolerance) {
  std::ostringstream label;
  label << d.name << ": alternating det_inf vs alternating Gamma_C product";
  return run_grid(d, s_grid, tolerance, label.str(), true, -1);
}

}  // namespace arinf
