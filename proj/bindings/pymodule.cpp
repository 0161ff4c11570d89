#include "arinf/birkhoff.hpp"
#include "arinf/factors.hpp"
#include "arinf/graded.hpp"
#include "arinf/hodge.hpp"
#include "arinf/hurwitz.hpp"
#include "arinf/json_io.hpp"
#include "arinf/operators.hpp"
#include "arinf/regdet.hpp"
#include "arinf/sl2.hpp"
#include "arinf/triple.hpp"
#include "arinf/unipotent.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <tuple>

namespace py = pybind11;

namespace {

using WindowTuple = std::tuple<int, int, int>;

arinf::Window to_window(const WindowTuple& t) {
  return arinf::Window{std::get<0>(t), std::get<1>(t), std::get<2>(t)};
}

py::dict relation_dict(const arinf::RelationCheck& c) {
  py::dict d;
  d["name"] = c.name;
  d["exact"] = c.exact;
  d["pass"] = c.pass;
  d["residual"] = c.residual;
  d["tolerance"] = c.tolerance;
  d["checked"] = c.checked;
  d["detail"] = c.detail;
  return d;
}

py::dict comparison_dict(const arinf::DetComparison& c) {
  py::dict d;
  d["label"] = c.label;
  d["tolerance"] = c.tolerance;
  d["max_residual"] = c.max_residual;
  d["pass"] = c.pass;
  py::list pts;
  for (const auto& p : c.points) {
    py::dict e;
    e["s"] = arinf::to_string(p.s);
    e["residual"] = p.residual;
    e["order_det"] = p.order_det;
    e["order_factor"] = p.order_factor;
    e["pole_collision"] = p.pole_collision;
    pts.append(e);
  }
  d["points"] = pts;
  return d;
}

std::vector<arinf::Rat> to_rat_grid(const std::vector<std::string>& grid) {
  std::vector<arinf::Rat> out;
  for (const auto& s : grid) {
    const auto r = arinf::parse_rat(s);
    if (!r) throw std::invalid_argument("not a rational: " + s);
    out.push_back(*r);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_arinfinity, m) {
  m.doc() = "finite linear-algebra models of archimedean cohomology";

  m.def("builtin_names", &arinf::builtin_names, "Names of the shipped example data.");

  m.def(
      "validate_spec",
      [](const std::string& spec) {
        try {
          const auto d = arinf::resolve_datum(spec);
          (void)d;
          return std::vector<std::string>{};
        } catch (const std::invalid_argument& e) {
          return std::vector<std::string>{e.what()};
        }
      },
      py::arg("spec"), "Violation list for a spec file or builtin name; empty means valid.");

  m.def(
      "dims",
      [](const std::string& spec, const WindowTuple& window) {
        const auto d = arinf::resolve_datum(spec);
        const arinf::GradedSpace space(d, to_window(window));
        py::dict out;
        out["dimension"] = space.dim();
        py::dict total;
        const auto& w = space.window();
        for (int i = 2 * w.rmin; i <= 2 * d.n + 2 * w.rmax; ++i) {
          const int dim = space.dim_total_degree(i);
          if (dim) total[py::int_(i)] = dim;
        }
        out["total_degree"] = total;
        py::list bid;
        for (int deg = 0; deg <= 2 * d.n; ++deg)
          for (int r = w.rmin; r <= w.rmax; ++r) {
            const int dim = space.dim_bidegree(deg, r);
            if (dim) bid.append(py::make_tuple(deg, 2 * r, dim));
          }
        out["bidegree"] = bid;
        return out;
      },
      py::arg("spec"), py::arg("window") = WindowTuple{-6, 6, 12},
      "Dimension tables of the window truncation.");

  m.def(
      "check_relations",
      [](const std::string& spec, const std::string& group, const WindowTuple& window) {
        const auto d = arinf::resolve_datum(spec);
        const arinf::GradedSpace space(d, to_window(window));
        const arinf::Sl2Structure sl2(&space);
        py::list out;
        for (const auto& c : arinf::check_relations(sl2, group, arinf::default_samples()))
          out.append(relation_dict(c));
        return out;
      },
      py::arg("spec"), py::arg("group"), py::arg("window") = WindowTuple{-6, 6, 12},
      "Relation suite: group in {'sl2', 'weyl', 'fn', 'dualities'}.");

  m.def(
      "local_factor",
      [](const std::string& spec, int deg, std::complex<double> s) {
        const auto lc = arinf::local_factor(arinf::resolve_datum(spec), deg, s);
        return py::make_tuple(lc.log_mag, lc.phase, lc.order);
      },
      py::arg("spec"), py::arg("m"), py::arg("s"),
      "Archimedean local factor as (log_magnitude, phase, pole_order).");

  m.def(
      "alternating_factor",
      [](const std::string& spec, std::complex<double> s) {
        const auto lc = arinf::alternating_product(arinf::resolve_datum(spec), s);
        return py::make_tuple(lc.log_mag, lc.phase, lc.order);
      },
      py::arg("spec"), py::arg("s"));

  m.def(
      "regdet_check",
      [](const std::string& spec, int deg, const std::vector<std::string>& grid, double tol) {
        return comparison_dict(
            arinf::check_deninger(arinf::resolve_datum(spec), deg, to_rat_grid(grid), tol));
      },
      py::arg("spec"), py::arg("m"), py::arg("s_grid"), py::arg("tol") = 1e-8,
      "Regularized determinant vs Gamma factor on a rational grid.");

  m.def(
      "regdet_check_alternating",
      [](const std::string& spec, const std::vector<std::string>& grid, double tol) {
        return comparison_dict(
            arinf::check_alternating(arinf::resolve_datum(spec), to_rat_grid(grid), tol));
      },
      py::arg("spec"), py::arg("s_grid"), py::arg("tol") = 1e-8);

  m.def(
      "hurwitz_zeta",
      [](std::complex<double> z, std::complex<double> a) { return arinf::hurwitz_zeta(z, a); },
      py::arg("z"), py::arg("a"));

  m.def(
      "log_gamma",
      [](std::complex<double> z) {
        const auto lc = arinf::log_gamma(z);
        return py::make_tuple(lc.log_mag, lc.phase, lc.order);
      },
      py::arg("z"));

  m.def(
      "dirac_multiplicity",
      [](const std::string& spec, int u, long v) {
        const auto c = arinf::dirac_count(arinf::resolve_datum(spec), u, v);
        return py::make_tuple(c.ker, c.coker);
      },
      py::arg("spec"), py::arg("u"), py::arg("v"),
      "Dirac eigenvalue multiplicity split (invariant part, coinvariant part).");

  m.def(
      "zeta_dirac",
      [](const std::string& spec, int u, std::complex<double> z, const WindowTuple& window) {
        const auto d = arinf::resolve_datum(spec);
        const arinf::GradedSpace space(d, to_window(window));
        const auto tu = arinf::build_tu(&space, u);
        return py::make_tuple(arinf::zeta_dirac(tu, z), arinf::zeta_dirac_direct(tu, z, 10000));
      },
      py::arg("spec"), py::arg("u"), py::arg("z"), py::arg("window") = WindowTuple{-6, 6, 12},
      "Dirac zeta by the head+tail path and by direct summation.");

  m.def(
      "dimension_probe",
      [](const std::string& spec, int u, const WindowTuple& window) {
        const auto d = arinf::resolve_datum(spec);
        const arinf::GradedSpace space(d, to_window(window));
        const auto tu = arinf::build_tu(&space, u);
        const auto p = arinf::dimension_spectrum_probe(tu);
        py::dict out;
        out["stabilized"] = p.stabilized;
        out["tail_plus"] = p.tail_plus;
        out["tail_minus"] = p.tail_minus;
        out["zero_modes"] = p.zero_modes;
        out["pole_location"] = p.pole_location;
        out["residue"] = p.residue;
        out["residue_expected"] = p.residue_expected;
        out["note"] = p.note;
        return out;
      },
      py::arg("spec"), py::arg("u"), py::arg("window") = WindowTuple{-6, 6, 12});

  m.def(
      "birkhoff_suite",
      [](int jordan_size, double mu, double lambda) {
        const auto N = arinf::NilpotentMat::jordan(jordan_size);
        py::dict out;
        auto dist = [](const arinf::Mat& a, const arinf::Mat& b) {
          return (a - b).cwiseAbs().maxCoeff();
        };
        arinf::Mat fact = arinf::Mat::Identity(jordan_size, jordan_size);
        py::dict dk;
        for (int k = 1; k < N.nu && k <= 3; ++k) {
          fact = fact * N.N / static_cast<double>(k);
          dk[py::int_(k)] = dist(arinf::dk_oracle(N, k), fact);
        }
        out["dk_quadrature"] = dk;
        const auto rg = arinf::renorm_group(N, lambda, {1.0, 0.1, 0.01, 1e-3});
        out["renorm_distance"] = rg.final_distance;
        out["monodromy_log"] = dist(
            arinf::log_recovery(arinf::monodromy_rep(N)) / std::complex<double>(0.0, -2.0 * 3.14159265358979323846),
            N.N);
        out["connection_residue"] = dist(arinf::connection_residue(N, mu, 0.5, 2048), N.N);
        out["formal_log_exp"] = arinf::formal_log_exp_is_identity(jordan_size + 1);
        out["scaling"] = arinf::scaling_consistency(N, lambda, mu, 0.5).loop_identity;
        return out;
      },
      py::arg("jordan_size") = 4, py::arg("mu") = 2.0, py::arg("lambda") = 2.0,
      "Residuals of the factorization and flow identities on a Jordan block.");
}
