#include "arinf/factors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace arinf {

LogComplex local_factor(const HodgeDatum& d, int m, std::complex<double> s) {
  LogComplex acc;  // empty product = 1
  if (m < 0 || m > 2 * d.n) return acc;
  if (d.field == Field::C) {
    for (int p = 0; p <= d.n; ++p) {
      int q = m - p;
      int h = d.hodge(p, q);
      if (h == 0) continue;
      acc = lc_mul(acc, lc_pow(gamma_C(s - static_cast<double>(std::min(p, q))), h));
    }
    return acc;
  }
  for (int p = 0; 2 * p < m; ++p) {
    int h = d.hodge(p, m - p);
    if (h == 0) continue;
    acc = lc_mul(acc, lc_pow(gamma_C(s - static_cast<double>(p)), h));
  }
  if (m % 2 == 0) {
    int p = m / 2;
    if (d.hodge(p, p) > 0) {
      if (!d.h_plus || !d.h_minus || static_cast<int>(d.h_plus->size()) <= p ||
          static_cast<int>(d.h_minus->size()) <= p)
        throw std::invalid_argument(
            "local_factor: real structure needs the h^{p,+}/h^{p,-} split at p=" +
            std::to_string(p));
      int hp = (*d.h_plus)[static_cast<std::size_t>(p)];
      int hm = (*d.h_minus)[static_cast<std::size_t>(p)];
      if (hp > 0) acc = lc_mul(acc, lc_pow(gamma_R(s - static_cast<double>(p)), hp));
      if (hm > 0) acc = lc_mul(acc, lc_pow(gamma_R(s - static_cast<double>(p) + 1.0), hm));
    }
  }
  return acc;
}

LogComplex alternating_product(const HodgeDatum& d, std::complex<double> s) {
  LogComplex acc;
  for (int m = 0; m <= 2 * d.n; ++m) {
    int sign = ((m + d.n) % 2 == 0) ? 1 : -1;
    acc = lc_mul(acc, lc_pow(local_factor(d, m, s), sign));
  }
  return acc;
}

}  // namespace arinf
