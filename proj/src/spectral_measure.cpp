#include "arinf/spectral_measure.hpp"

#include "arinf/hurwitz.hpp"

#include <algorithm>
#include <stdexcept>

namespace arinf {

std::complex<double> observable_weight(const std::map<std::string, std::complex<double>>& w,
                                       long multiplicity, const std::string& name) {
  if (name == kIdObservable) return static_cast<double>(multiplicity);
  auto it = w.find(name);
  return it == w.end() ? std::complex<double>(0.0) : it->second;
}

SpectralMeasure measure_union(const std::vector<SpectralMeasure>& parts) {
  SpectralMeasure out;
  for (const SpectralMeasure& p : parts) {
    out.head.insert(out.head.end(), p.head.begin(), p.head.end());
    out.tails.insert(out.tails.end(), p.tails.begin(), p.tails.end());
  }
  return out;
}

std::complex<double> zeta_two_var(const SpectralMeasure& m, const std::string& observable,
                                  std::complex<double> s, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (const SpectralEntry& e : m.head) {
    std::complex<double> base = s - to_double(e.lambda);
    if (base.real() <= 0.0)
      throw std::domain_error("zeta_two_var: Re(s - lambda) must be positive on the head");
    std::complex<double> w = observable_weight(e.weights, e.multiplicity, observable);
    if (w != std::complex<double>(0.0)) acc += w * std::exp(-z * std::log(base));
  }
  for (const ProgressionTail& t : m.tails) {
    std::complex<double> base = s - to_double(t.start);
    if (base.real() <= 0.0)
      throw std::domain_error("zeta_two_var: Re(s - start) must be positive on every tail");
    std::complex<double> w = observable_weight(t.weights, t.multiplicity, observable);
    if (w != std::complex<double>(0.0)) acc += w * hurwitz_zeta(z, base);
  }
  return acc;
}

SpectralMeasure ar_cohomology(const HodgeDatum& d, int m, int lmax) {
  if (m < 0 || m > 2 * d.n) throw std::domain_error("ar_cohomology: degree out of range");
  if (lmax < 0) throw std::domain_error("ar_cohomology: lmax must be nonnegative");
  double sign = ((d.n + m) % 2 == 0) ? 1.0 : -1.0;
  // multiplicity per distinct c = min(p,q)
  std::map<int, long> by_c;
  for (int p = 0; p <= d.n; ++p) {
    int q = m - p;
    int h = d.hodge(p, q);
    if (h > 0) by_c[std::min(p, q)] += h;
  }
  SpectralMeasure out;
  std::map<Rat, long> head;
  for (const auto& [c, mult] : by_c)
    for (int l = 0; l <= lmax; ++l) head[Rat(c - l)] += mult;
  for (auto it = head.rbegin(); it != head.rend(); ++it) {
    SpectralEntry e;
    e.lambda = it->first;
    e.multiplicity = it->second;
    e.weights[kWeylSquareObservable] = sign * static_cast<double>(it->second);
    out.head.push_back(e);
  }
  for (const auto& [c, mult] : by_c) {
    ProgressionTail t;
    t.start = Rat(c - lmax - 1);
    t.multiplicity = mult;
    t.weights[kWeylSquareObservable] = sign * static_cast<double>(mult);
    out.tails.push_back(t);
  }
  return out;
}

}  // namespace arinf
