#pragma once

#include "arinf/graded.hpp"
#include "arinf/regdet.hpp"
#include "arinf/spectral_measure.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace arinf {

// Truncated spectral-triple space: inertia invariants (layers l = k-2r-m in
// [0, u], the kernel of N^{u+1}) and coinvariants (k in [0, u], the cokernel
// of N^{u+1}, degree-shifted by one). Members index into the ambient window
// truncation; an element may lie in both parts and then counts twice.
struct TripleSpace {
  const GradedSpace* space = nullptr;
  int u = 0;
  std::vector<int> ker_members;
  std::vector<int> coker_members;
  std::vector<bool> ker_mask;
  std::vector<bool> coker_mask;
};

TripleSpace build_tu(const GradedSpace* space, int u);

// Window-free multiplicity of the Dirac eigenvalue v (the operator is the
// Frobenius grading, eigenvalue -r on grade r), split by part, with the
// signed variants weighted by (-1)^{n+m} per element.
struct DiracCount {
  long ker = 0;
  long coker = 0;
  long ker_signed = 0;
  long coker_signed = 0;
  long total() const { return ker + coker; }
};
DiracCount dirac_count(const HodgeDatum& datum, int u, long v);

// Eigenvalue line as realized inside the window; conclusive means every
// region element the closed form counts is materialized by the window.
struct DiracLine {
  long eigenvalue = 0;
  DiracCount count;
  bool conclusive = true;
};
std::vector<DiracLine> dirac_lines(const TripleSpace& tu, int vmin, int vmax);

// Head measure over the conclusive lines in [vmin, vmax]; weights carry the
// identity observable and the squared-Weyl sign observable.
SpectralMeasure dirac_spectrum(const TripleSpace& tu, int vmin, int vmax);

// Stabilization of v -> m_v toward both edges of the window range: detected
// as three consecutive equal conclusive values, never assumed.
struct StabilizationReport {
  bool stabilized = false;
  long plus_start = 0;    // m_v constant for v >= plus_start
  long plus_value = 0;
  long minus_start = 0;   // m_v constant for v <= minus_start
  long minus_value = 0;
  long zero_modes = 0;
  std::string note;
};
StabilizationReport detect_stabilization(const TripleSpace& tu);

// Spectral measure of |D| with zero modes dropped: head at the explicit
// eigenvalues, one arithmetic-progression tail per edge. Throws
// std::runtime_error when the window is too small to stabilize.
SpectralMeasure dirac_abs_measure(const TripleSpace& tu);

std::complex<double> zeta_dirac(const TripleSpace& tu, std::complex<double> z);
// Independent path: explicit closed-form summation of `terms` eigenvalues
// plus a three-term Euler-Maclaurin closure of the stabilized remainder.
std::complex<double> zeta_dirac_direct(const TripleSpace& tu, std::complex<double> z, long terms);

struct DimensionProbe {
  bool stabilized = false;
  long tail_plus = 0;
  long tail_minus = 0;
  long zero_modes = 0;
  double pole_location = 1.0;
  double residue = 0.0;           // numeric, symmetric limit of (z-1) zeta(z)
  double residue_expected = 0.0;  // stabilized tail multiplicities, both edges
  std::string note;
};
DimensionProbe dimension_spectrum_probe(const TripleSpace& tu);

// The Lefschetz operator and the normalized flip preserve both parts; checked
// entrywise over window-interior columns.
struct StabilityReport {
  bool lefschetz_ker = true;
  bool lefschetz_coker = true;
  bool flip_ker = true;
  bool flip_coker = true;
  long checked = 0;
};
StabilityReport part_stability(const TripleSpace& tu);

// Entrywise |[D, a]| <= n |a| for a in the unipotent image of the left
// representation (boundedness of Dirac commutators, uniform in the window).
struct CommutatorBound {
  double max_ratio = 0.0;
  double bound = 0.0;
  bool pass = false;
};
CommutatorBound dirac_commutator_bound(const GradedSpace& space, const Rat& s);

// Multiplicity the measure assigns to an integer eigenvalue (head + tails).
long measure_multiplicity_at(const SpectralMeasure& m, long v);

// N=0-layer spectrum of the u=0 triple against the cohomology measure, then
// the alternating determinant identity over the grid.
struct ZetaLReport {
  bool spectra_match = false;
  long compared = 0;
  DetComparison alternating;
};
ZetaLReport connect_zeta_identity(const HodgeDatum& datum, const Window& window,
                                  const std::vector<Rat>& s_grid, double tol);

// Layer tables: (r, l) -> count for the invariant part, (r, k) -> count for
// the coinvariant part.
std::map<std::pair<int, int>, int> ker_layer_table(const TripleSpace& tu);
std::map<std::pair<int, int>, int> coker_layer_table(const TripleSpace& tu);

}  // namespace arinf
