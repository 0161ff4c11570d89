#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arinf {

enum class Field { C, R };

// The only geometric input anything downstream needs: a Hodge diamond plus,
// over R, the de Rham-conjugation eigenspace splittings of the diagonal.
struct HodgeDatum {
  std::string name;
  int n = 0;                          // complex dimension
  std::vector<std::vector<int>> h;    // h[p][q], 0 <= p,q <= n
  Field field = Field::C;
  std::optional<std::vector<int>> h_plus;   // h^{p,+}, indexed by p
  std::optional<std::vector<int>> h_minus;  // h^{p,-}

  int hodge(int p, int q) const {
    if (p < 0 || q < 0 || p > n || q > n) return 0;
    return h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  }
  int dim_h(int m) const;      // dim H^m = sum_{p+q=m} h^{p,q}
  int total_hodge() const;     // sum over all (p,q)
};

enum class FiltrationKind { F, Fbar, Gamma };

// Empty report = valid datum. Each entry names the violated rule and indices.
std::vector<std::string> validate(const HodgeDatum& d);

// dim of the m-th graded piece cut by the filtration:
//   F:     sum over p+q=m, p >= a
//   Fbar:  sum over p+q=m, q >= a
//   Gamma: sum over p+q=m, min(p,q) >= a
// Throws std::domain_error for m outside [0, 2n].
int filtration_dim(const HodgeDatum& d, FiltrationKind kind, int a, int m);

// prim^{p,q} = h^{p,q} - h^{p-1,q-1} for p+q <= n; nonnegative iff the datum
// satisfies hard-Lefschetz monotonicity. Throws std::invalid_argument on an
// invalid datum.
std::map<std::pair<int, int>, int> primitive_dims(const HodgeDatum& d);

// Shipped example data; throws std::invalid_argument for unknown names.
// Names: point, elliptic_curve, p1, abelian_surface, k3.
HodgeDatum builtin_datum(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace arinf
