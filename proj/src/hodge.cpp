#include "arinf/hodge.hpp"

#include <algorithm>
#include <stdexcept>

namespace arinf {

int HodgeDatum::dim_h(int m) const {
  int s = 0;
  for (int p = 0; p <= n; ++p) s += hodge(p, m - p);
  return s;
}

int HodgeDatum::total_hodge() const {
  int s = 0;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) s += hodge(p, q);
  return s;
}

std::vector<std::string> validate(const HodgeDatum& d) {
  std::vector<std::string> bad;
  auto at = [&](int p, int q) { return std::to_string(p) + "," + std::to_string(q); };

  if (d.n < 0) bad.push_back("dimension must be nonnegative");
  if (static_cast<int>(d.h.size()) != d.n + 1) {
    bad.push_back("hodge table must have dim+1 rows");
    return bad;
  }
  for (const auto& row : d.h)
    if (static_cast<int>(row.size()) != d.n + 1) {
      bad.push_back("hodge table must have dim+1 columns per row");
      return bad;
    }

  for (int p = 0; p <= d.n; ++p)
    for (int q = 0; q <= d.n; ++q) {
      if (d.hodge(p, q) < 0) bad.push_back("negative entry at (" + at(p, q) + ")");
      if (d.hodge(p, q) != d.hodge(q, p) && p < q)
        bad.push_back("Hodge symmetry violated at (" + at(q, p) + ")");
      if (d.hodge(p, q) != d.hodge(d.n - p, d.n - q) &&
          std::pair(p, q) < std::pair(d.n - p, d.n - q))
        bad.push_back("Serre duality violated at (" + at(p, q) + ")");
      if (p + q <= d.n && p >= 1 && q >= 1 && d.hodge(p - 1, q - 1) > d.hodge(p, q))
        bad.push_back("hard-Lefschetz monotonicity violated at (" + at(p, q) + ")");
    }

  if (d.hodge(0, 0) < 1) bad.push_back("h^{0,0} must be at least 1");

  if (d.field == Field::R) {
    if (!d.h_plus || !d.h_minus) {
      bad.push_back("field R requires h_plus and h_minus tables");
    } else if (static_cast<int>(d.h_plus->size()) != d.n + 1 ||
               static_cast<int>(d.h_minus->size()) != d.n + 1) {
      bad.push_back("h_plus/h_minus must have dim+1 entries");
    } else {
      for (int p = 0; p <= d.n; ++p)
        if ((*d.h_plus)[p] + (*d.h_minus)[p] != d.hodge(p, p))
          bad.push_back("h^{p,+}+h^{p,-} != h^{p,p} at p=" + std::to_string(p));
    }
  }
  return bad;
}

int filtration_dim(const HodgeDatum& d, FiltrationKind kind, int a, int m) {
  if (m < 0 || m > 2 * d.n) throw std::domain_error("filtration_dim: m outside [0, 2n]");
  int s = 0;
  for (int p = 0; p <= d.n; ++p) {
    int q = m - p;
    if (q < 0 || q > d.n) continue;
    bool keep = false;
    switch (kind) {
      case FiltrationKind::F: keep = p >= a; break;
      case FiltrationKind::Fbar: keep = q >= a; break;
      case FiltrationKind::Gamma: keep = std::min(p, q) >= a; break;
    }
    if (keep) s += d.hodge(p, q);
  }
  return s;
}

std::map<std::pair<int, int>, int> primitive_dims(const HodgeDatum& d) {
  if (!validate(d).empty()) throw std::invalid_argument("primitive_dims: invalid Hodge datum");
  std::map<std::pair<int, int>, int> prim;
  for (int p = 0; p <= d.n; ++p)
    for (int q = 0; q <= d.n; ++q)
      if (p + q <= d.n) prim[{p, q}] = d.hodge(p, q) - d.hodge(p - 1, q - 1);
  return prim;
}

HodgeDatum builtin_datum(const std::string& name) {
  HodgeDatum d;
  d.name = name;
  if (name == "point") {
    d.n = 0;
    d.h = {{1}};
  } else if (name == "elliptic_curve") {
    d.n = 1;
    d.h = {{1, 1}, {1, 1}};
  } else if (name == "p1") {
    d.n = 1;
    d.h = {{1, 0}, {0, 1}};
  } else if (name == "abelian_surface") {
    d.n = 2;
    d.h = {{1, 2, 1}, {2, 4, 2}, {1, 2, 1}};
  } else if (name == "k3") {
    d.n = 2;
    d.h = {{1, 0, 1}, {0, 20, 0}, {1, 0, 1}};
  } else {
    throw std::invalid_argument("unknown builtin datum: " + name);
  }
  return d;
}

std::vector<std::string> builtin_names() {
  return {"point", "elliptic_curve", "p1", "abelian_surface", "k3"};
}

}  // namespace arinf
