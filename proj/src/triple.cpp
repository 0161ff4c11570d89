#include "arinf/triple.hpp"

#include "arinf/operators.hpp"
#include "arinf/sl2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace arinf {

namespace {

int hbar_layer(const GradedIndex& ix) { return ix.k - 2 * ix.r - ix.p - ix.q; }

int degree_sign(const HodgeDatum& d, int m) { return ((d.n + m) % 2) ? -1 : 1; }

// Number of layers l in [0, u] whose ker condition holds at eigenvalue v:
// v <= min(p,q) + l and 2(-v) + m + l >= 0.
long ker_layers(int p, int q, int u, long v) {
  long count = 0;
  const long m = p + q;
  for (long l = 0; l <= u; ++l) {
    if (v <= std::min(p, q) + l && m + l - 2 * v >= 0) ++count;
  }
  return count;
}

}  // namespace

TripleSpace build_tu(const GradedSpace* space, int u) {
  if (u < 0) throw std::domain_error("cutoff u must be non-negative");
  TripleSpace tu;
  tu.space = space;
  tu.u = u;
  const int dim = space->dim();
  tu.ker_mask.assign(static_cast<std::size_t>(dim), false);
  tu.coker_mask.assign(static_cast<std::size_t>(dim), false);
  for (int i = 0; i < dim; ++i) {
    const auto& ix = space->basis()[static_cast<std::size_t>(i)];
    const int l = hbar_layer(ix);
    if (l >= 0 && l <= u) {
      tu.ker_members.push_back(i);
      tu.ker_mask[static_cast<std::size_t>(i)] = true;
    }
    if (ix.k >= 0 && ix.k <= u) {
      tu.coker_members.push_back(i);
      tu.coker_mask[static_cast<std::size_t>(i)] = true;
    }
  }
  return tu;
}

DiracCount dirac_count(const HodgeDatum& datum, int u, long v) {
  DiracCount out;
  for (int p = 0; p <= datum.n; ++p)
    for (int q = 0; q <= datum.n; ++q) {
      const int h = datum.hodge(p, q);
      if (h == 0) continue;
      const int sign = degree_sign(datum, p + q);
      const long kl = h * ker_layers(p, q, u, v);
      out.ker += kl;
      out.ker_signed += sign * kl;
      const int kappa = kappa_cut(p, q, static_cast<int>(-v));
      const long ck = (kappa <= u) ? static_cast<long>(h) * (u - kappa + 1) : 0;
      out.coker += ck;
      out.coker_signed += sign * ck;
    }
  return out;
}

std::vector<DiracLine> dirac_lines(const TripleSpace& tu, int vmin, int vmax) {
  const GradedSpace& space = *tu.space;
  const auto& w = space.window();
  std::vector<DiracLine> out;
  for (int v = vmin; v <= vmax; ++v) {
    DiracLine line;
    line.eigenvalue = v;
    line.count = dirac_count(space.datum(), tu.u, v);
    const int r = -v;
    bool ok = r >= w.rmin && r <= w.rmax;
    if (ok) {
      // Realizability: every counted element must appear in the window basis.
      long seen_ker = 0, seen_coker = 0;
      for (int i : tu.ker_members)
        if (space.basis()[static_cast<std::size_t>(i)].r == r) ++seen_ker;
      for (int i : tu.coker_members)
        if (space.basis()[static_cast<std::size_t>(i)].r == r) ++seen_coker;
      ok = seen_ker == line.count.ker && seen_coker == line.count.coker;
    }
    line.conclusive = ok;
    out.push_back(line);
  }
  return out;
}

SpectralMeasure dirac_spectrum(const TripleSpace& tu, int vmin, int vmax) {
  SpectralMeasure m;
  for (const auto& line : dirac_lines(tu, vmin, vmax)) {
    if (!line.conclusive) continue;
    SpectralEntry e;
    e.lambda = Rat(line.eigenvalue);
    e.multiplicity = line.count.total();
    e.weights[kIdObservable] = static_cast<double>(line.count.total());
    e.weights[kWeylSquareObservable] =
        static_cast<double>(line.count.ker_signed + line.count.coker_signed);
    m.head.push_back(std::move(e));
  }
  return m;
}

StabilizationReport detect_stabilization(const TripleSpace& tu) {
  const auto& w = tu.space->window();
  StabilizationReport rep;
  rep.zero_modes = dirac_count(tu.space->datum(), tu.u, 0).total();

  const int range_max = -w.rmin;
  const int range_min = -w.rmax;
  const auto lines = dirac_lines(tu, range_min, range_max);
  auto value = [&](int v) -> long {
    return lines[static_cast<std::size_t>(v - range_min)].count.total();
  };
  auto conclusive = [&](int v) -> bool {
    return lines[static_cast<std::size_t>(v - range_min)].conclusive;
  };

  // Work on the maximal conclusive interval around 0: window cuts (the k-cap
  // in particular) can truncate the extreme lines.
  if (range_min > 0 || range_max < 0 || !conclusive(0)) {
    rep.note = "window too small: eigenvalue 0 not materialized";
    return rep;
  }
  int vmax = 0;
  while (vmax + 1 <= range_max && conclusive(vmax + 1)) ++vmax;
  int vmin = 0;
  while (vmin - 1 >= range_min && conclusive(vmin - 1)) --vmin;

  if (vmax < 3) {
    rep.note = "window too small: no stabilization at the positive edge";
    return rep;
  }
  if (vmin > -3) {
    rep.note = "window too small: no stabilization at the negative edge";
    return rep;
  }
  if (value(vmax) != value(vmax - 1) || value(vmax) != value(vmax - 2)) {
    rep.note = "window too small: no stabilization at the positive edge";
    return rep;
  }
  if (value(vmin) != value(vmin + 1) || value(vmin) != value(vmin + 2)) {
    rep.note = "window too small: no stabilization at the negative edge";
    return rep;
  }
  rep.stabilized = true;
  rep.plus_value = value(vmax);
  rep.minus_value = value(vmin);
  int v = vmax;
  while (v - 1 >= 1 && value(v - 1) == rep.plus_value) --v;
  rep.plus_start = v;
  v = vmin;
  while (v + 1 <= -1 && value(v + 1) == rep.minus_value) ++v;
  rep.minus_start = v;
  return rep;
}

SpectralMeasure dirac_abs_measure(const TripleSpace& tu) {
  const auto st = detect_stabilization(tu);
  if (!st.stabilized) throw std::runtime_error(st.note);
  SpectralMeasure m;
  auto add_head = [&](long v) {
    const auto c = dirac_count(tu.space->datum(), tu.u, v);
    if (c.total() == 0) return;
    SpectralEntry e;
    e.lambda = Rat(v < 0 ? v : -v);  // encode |v| as s - lambda at s = 0
    e.multiplicity = c.total();
    e.weights[kIdObservable] = static_cast<double>(c.total());
    m.head.push_back(std::move(e));
  };
  for (long v = 1; v < st.plus_start; ++v) add_head(v);
  for (long v = -1; v > st.minus_start; --v) add_head(v);
  ProgressionTail plus;
  plus.start = Rat(-st.plus_start);
  plus.multiplicity = st.plus_value;
  plus.weights[kIdObservable] = static_cast<double>(st.plus_value);
  m.tails.push_back(std::move(plus));
  ProgressionTail minus;
  minus.start = Rat(st.minus_start);  // |v| = -v for v <= minus_start
  minus.multiplicity = st.minus_value;
  minus.weights[kIdObservable] = static_cast<double>(st.minus_value);
  m.tails.push_back(std::move(minus));
  return m;
}

std::complex<double> zeta_dirac(const TripleSpace& tu, std::complex<double> z) {
  return zeta_two_var(dirac_abs_measure(tu), kIdObservable, 0.0, z);
}

std::complex<double> zeta_dirac_direct(const TripleSpace& tu, std::complex<double> z, long terms) {
  const auto st = detect_stabilization(tu);
  if (!st.stabilized) throw std::runtime_error(st.note);
  if (terms < std::max(st.plus_start, -st.minus_start) + 2)
    throw std::domain_error("direct summation needs to reach the stabilized range");
  const auto& datum = tu.space->datum();
  std::complex<double> acc = 0.0;
  for (long v = 1; v <= terms; ++v) {
    const long mult = dirac_count(datum, tu.u, v).total() + dirac_count(datum, tu.u, -v).total();
    acc += static_cast<double>(mult) * std::exp(-z * std::log(static_cast<double>(v)));
  }
  // Three-term Euler-Maclaurin closure of the constant-multiplicity remainder.
  const double c = static_cast<double>(st.plus_value + st.minus_value);
  const double a = static_cast<double>(terms + 1);
  const std::complex<double> apz = std::exp(-z * std::log(a));
  acc += c * (apz * a / (z - 1.0) + 0.5 * apz + z * apz / a / 12.0);
  return acc;
}

DimensionProbe dimension_spectrum_probe(const TripleSpace& tu) {
  DimensionProbe probe;
  const auto st = detect_stabilization(tu);
  probe.zero_modes = st.zero_modes;
  if (!st.stabilized) {
    probe.note = st.note;
    return probe;
  }
  probe.stabilized = true;
  probe.tail_plus = st.plus_value;
  probe.tail_minus = st.minus_value;
  probe.residue_expected = static_cast<double>(st.plus_value + st.minus_value);
  const double delta = 1e-4;
  const std::complex<double> hi = zeta_dirac(tu, 1.0 + delta);
  const std::complex<double> lo = zeta_dirac(tu, 1.0 - delta);
  probe.residue = 0.5 * (delta * hi - delta * lo).real();
  probe.note = "simple pole at z = 1";
  return probe;
}

namespace {

bool columns_stay_in(const SparseOp& op, const std::vector<int>& members,
                     const std::vector<bool>& mask, const std::vector<bool>& allowed_cols) {
  for (int c : members) {
    if (!allowed_cols.empty() && !allowed_cols[static_cast<std::size_t>(c)]) continue;
    for (const auto& [row, v] : op.column(c))
      if (!mask[static_cast<std::size_t>(row)]) return false;
  }
  return true;
}

}  // namespace

StabilityReport part_stability(const TripleSpace& tu) {
  const GradedSpace& space = *tu.space;
  Sl2Structure sl2(&space);
  const SparseOp L = lefschetz_L(space, sl2);
  const auto St = duality_Stilde(space, sl2);
  std::vector<bool> interior = sl2.interior_mask();

  StabilityReport rep;
  rep.lefschetz_ker = columns_stay_in(L, tu.ker_members, tu.ker_mask, {});
  rep.lefschetz_coker = columns_stay_in(L, tu.coker_members, tu.coker_mask, {});
  rep.flip_ker = columns_stay_in(St.op, tu.ker_members, tu.ker_mask, interior);
  rep.flip_coker = columns_stay_in(St.op, tu.coker_members, tu.coker_mask, interior);
  rep.checked = static_cast<long>(tu.ker_members.size() + tu.coker_members.size());
  return rep;
}

CommutatorBound dirac_commutator_bound(const GradedSpace& space, const Rat& s) {
  Sl2Structure sl2(&space);
  const SparseOp a = rep_unipotent(sl2, Side::L, s);
  const SparseOp d = frobenius_Phi(space);
  const SparseOp comm = d.commutator(a);
  CommutatorBound out;
  out.bound = static_cast<double>(space.datum().n);
  for (int c = 0; c < a.cols(); ++c) {
    std::map<int, double> amag;
    for (const auto& [row, v] : a.column(c)) amag[row] = std::abs(v.to_complex());
    for (const auto& [row, v] : comm.column(c)) {
      const auto it = amag.find(row);
      const double denom = (it == amag.end()) ? 0.0 : it->second;
      if (denom == 0.0) {
        if (!v.is_zero()) out.max_ratio = std::numeric_limits<double>::infinity();
        continue;
      }
      out.max_ratio = std::max(out.max_ratio, std::abs(v.to_complex()) / denom);
    }
  }
  out.pass = out.max_ratio <= out.bound + 1e-12;
  return out;
}

long measure_multiplicity_at(const SpectralMeasure& m, long v) {
  long total = 0;
  for (const auto& e : m.head)
    if (e.lambda == Rat(v)) total += e.multiplicity;
  for (const auto& t : m.tails) {
    const Rat diff = t.start - Rat(v);
    if (diff >= 0 && boost::multiprecision::denominator(diff) == 1) total += t.multiplicity;
  }
  return total;
}

ZetaLReport connect_zeta_identity(const HodgeDatum& datum, const Window& window,
                                  const std::vector<Rat>& s_grid, double tol) {
  ZetaLReport rep;
  GradedSpace space(datum, window);
  TripleSpace tu = build_tu(&space, 0);

  // Layer l = 0 of the invariant part, bucketed by degree and eigenvalue.
  std::map<std::pair<int, long>, long> realized;
  for (int i : tu.ker_members) {
    const auto& ix = space.basis()[static_cast<std::size_t>(i)];
    ++realized[{ix.p + ix.q, static_cast<long>(-ix.r)}];
  }

  bool match = true;
  long compared = 0;
  for (int m = 0; m <= 2 * datum.n; ++m) {
    if (datum.dim_h(m) == 0) continue;
    const SpectralMeasure measure = ar_cohomology(datum, m, 4);
    // Compare over eigenvalues whose grade is realizable in the window and
    // whose layer-0 element always has k = 2r + m within the k-cut.
    for (long v = -window.rmax; v <= -window.rmin; ++v) {
      const int r = static_cast<int>(-v);
      if (2 * r + m < 0 || 2 * r + m > window.kmax) continue;
      const auto it = realized.find({m, v});
      const long got = (it == realized.end()) ? 0 : it->second;
      if (got != measure_multiplicity_at(measure, v)) match = false;
      ++compared;
    }
  }
  rep.spectra_match = match;
  rep.compared = compared;
  rep.alternating = check_alternating(datum, s_grid, tol);
  return rep;
}

std::map<std::pair<int, int>, int> ker_layer_table(const TripleSpace& tu) {
  std::map<std::pair<int, int>, int> out;
  for (int i : tu.ker_members) {
    const auto& ix = tu.space->basis()[static_cast<std::size_t>(i)];
    ++out[{ix.r, hbar_layer(ix)}];
  }
  return out;
}

std::map<std::pair<int, int>, int> coker_layer_table(const TripleSpace& tu) {
  std::map<std::pair<int, int>, int> out;
  for (int i : tu.coker_members) {
    const auto& ix = tu.space->basis()[static_cast<std::size_t>(i)];
    ++out[{ix.r, ix.k}];
  }
  return out;
}

}  // namespace arinf
