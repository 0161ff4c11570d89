#pragma once

#include "arinf/hodge.hpp"
#include "arinf/rational.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace arinf {

// One exact eigenvalue with its multiplicity and the observable traces
// Tr(a P_lambda), keyed by observable name. The identity observable is
// implicit with trace = multiplicity; names absent from the table weigh 0.
struct SpectralEntry {
  Rat lambda;
  long multiplicity = 0;
  std::map<std::string, std::complex<double>> weights;
};

// Descending unit-step progression lambda = start - j (j >= 0) with constant
// multiplicity and per-eigenvalue observable weights; lets zeta sums run over
// the whole infinite spectrum in closed Hurwitz form instead of truncating.
struct ProgressionTail {
  Rat start;
  long multiplicity = 0;
  std::map<std::string, std::complex<double>> weights;
};

struct SpectralMeasure {
  std::vector<SpectralEntry> head;
  std::vector<ProgressionTail> tails;
};

inline constexpr const char* kIdObservable = "id";
// sigma^L(w)^2 acts on degree m by the scalar (-1)^{n+m}.
inline constexpr const char* kWeylSquareObservable = "weyl_sq";

std::complex<double> observable_weight(const std::map<std::string, std::complex<double>>& w,
                                       long multiplicity, const std::string& name);

// Concatenation; zeta sums over it equal the sum of the parts' zetas.
SpectralMeasure measure_union(const std::vector<SpectralMeasure>& parts);

// sum_lambda Tr(a P_lambda) (s - lambda)^{-z}, arithmetic-progression tails
// summed through the Hurwitz zeta. Requires Re(s - lambda) > 0 on the head
// and Re(s - start) > 0 per tail; throws std::domain_error otherwise.
std::complex<double> zeta_two_var(const SpectralMeasure& m, const std::string& observable,
                                  std::complex<double> s, std::complex<double> z);

// Frobenius spectrum on the monodromy-invariant cohomology in degree m:
// eigenvalue min(p,q) - l (l >= 0) with multiplicity
// sum_{p+q=m, min(p,q)=c} h^{p,q}. Explicit head for l <= lmax plus one
// exact tail per distinct c. Entries carry kWeylSquareObservable with the
// scalar (-1)^{n+m} per eigenvector.
SpectralMeasure ar_cohomology(const HodgeDatum& d, int m, int lmax);

}  // namespace arinf
