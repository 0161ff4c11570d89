#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arinf/birkhoff.hpp"
#include "arinf/unipotent.hpp"
#include "arinf/operators.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

using namespace arinf;

namespace {

constexpr double kTau = 6.283185307179586477;

using Cx = std::complex<double>;

double dist(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

Mat npow_over_fact(const NilpotentMat& N, int k) {
  Mat acc = Mat::Identity(N.N.rows(), N.N.cols());
  for (int j = 1; j <= k; ++j) acc = acc * N.N / static_cast<double>(j);
  return acc;
}

}  // namespace

TEST_CASE("nilpotency is verified on construction") {
  CHECK(NilpotentMat::jordan(1).nu == 1);
  CHECK(NilpotentMat::jordan(4).nu == 4);
  CHECK_THROWS_AS(NilpotentMat{Mat::Identity(3, 3)}, std::invalid_argument);
  Mat half = Mat::Zero(2, 2);
  half(0, 1) = 1.0;
  half(1, 0) = 1e-6;  // not nilpotent, just small
  CHECK_THROWS_AS(NilpotentMat{half}, std::invalid_argument);
  Mat rect = Mat::Zero(2, 3);
  CHECK_THROWS_AS(NilpotentMat{rect}, std::invalid_argument);

  const GradedSpace space(builtin_datum("elliptic_curve"), Window{-2, 2, 4});
  const NilpotentMat N = NilpotentMat::from_window(space);
  CHECK(N.N.rows() == space.dim());
  CHECK(N.nu >= 2);
  CHECK(phi_diagonal(space).size() == static_cast<std::size_t>(space.dim()));
}

TEST_CASE("exponentials of a nilpotent") {
  const NilpotentMat N = NilpotentMat::jordan(4);
  const Cx c{0.7, -1.3};
  CHECK(dist(nil_exp(N, c) * nil_exp(N, -c), Mat::Identity(4, 4)) <= 1e-14);
  const NilpotentMat J2 = NilpotentMat::jordan(2);
  Mat expect = Mat::Identity(2, 2);
  expect(0, 1) = c;
  CHECK(dist(nil_exp(J2, c), expect) <= 1e-15);
  CHECK_THROWS_AS(phi_minus(N, 0.0), std::domain_error);
  CHECK_THROWS_AS(loop_phi(N, 2.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(phi_plus(N, 0.0, 1.0), std::domain_error);
}

TEST_CASE("iterated-integral coefficients: three readings of d_k") {
  const NilpotentMat N = NilpotentMat::jordan(5);
  for (int k = 1; k <= 2; ++k) {
    CAPTURE(k);
    CHECK(dist(dk_oracle(N, k), npow_over_fact(N, k)) <= 1e-6);
  }
  CHECK(dist(dk_mc(N, 3, 400000, 12345), npow_over_fact(N, 3)) <= 2e-3);
  for (int k = 0; k <= 4; ++k) {
    CAPTURE(k);
    CHECK(dist(dk_laurent(N, k, 0.5, 64), npow_over_fact(N, k)) <= 1e-12);
    CHECK(dist(dk_laurent(N, k, 0.25, 128), npow_over_fact(N, k)) <= 1e-12);
  }
  CHECK_THROWS_AS(dk_oracle(N, -1), std::domain_error);
  CHECK_THROWS_AS(dk_mc(N, 0, 10, 1), std::domain_error);
}

TEST_CASE("loop equals the product of the factors") {
  const NilpotentMat N = NilpotentMat::jordan(4);
  for (const double mu : {1.0, 2.0, 10.0})
    for (const Cx z : {Cx(0.7, 0.0), Cx(-0.4, 0.0), Cx(0.3, 0.9)}) {
      const Mat lhs = loop_phi(N, mu, z);
      const Mat rhs = phi_minus(N, z).inverse() * phi_plus(N, mu, z);
      CHECK(dist(lhs, rhs) <= 1e-12);
    }
}

TEST_CASE("positive factor is analytic through z = 0") {
  const NilpotentMat N = NilpotentMat::jordan(3);
  const double mu = 3.0;
  // limit value exp(log(mu) N)
  CHECK(dist(phi_plus(N, mu, Cx(1e-9, 0.0)), nil_exp(N, std::log(mu))) <= 1e-8);
  // continuity across the series/direct switch at |z| = 1e-6
  const Mat below = phi_plus(N, mu, Cx(9.9e-7, 0.0));
  const Mat above = phi_plus(N, mu, Cx(1.01e-6, 0.0));
  CHECK(dist(below, above) <= 1e-6);
}

TEST_CASE("scaling identities hold in abstract and attached form") {
  const NilpotentMat J = NilpotentMat::jordan(3);
  for (const double lambda : {0.5, 2.0, 2.718281828459045})
    for (const double mu : {1.0, 2.0, 10.0})
      for (const double eps : {1.0, 0.1, 0.01}) {
        const ScalingResidual r = scaling_consistency(J, lambda, mu, eps);
        CAPTURE(lambda);
        CAPTURE(mu);
        CAPTURE(eps);
        CHECK(r.loop_identity <= 1e-10);
        CHECK(r.plus_identity <= 1e-10);
      }

  const GradedSpace space(builtin_datum("p1"), Window{-2, 2, 4});
  const NilpotentMat N = NilpotentMat::from_window(space);
  const std::vector<double> phi = phi_diagonal(space);
  for (const double lambda : {0.5, 2.0}) {
    const ScalingResidual r = scaling_consistency(N, lambda, 2.0, 0.1, &phi);
    CHECK(r.loop_identity <= 1e-10);
    CHECK(r.plus_identity <= 1e-10);
  }
}

TEST_CASE("renormalization-group limit recovers exp(t N)") {
  const NilpotentMat J2 = NilpotentMat::jordan(2);
  const std::vector<double> eps{1.0, 0.1, 0.01, 1e-3, 1e-4, 1e-5, 1e-6};
  const RenormReport rep = renorm_group(J2, 2.0, eps);
  CHECK(rep.steps.size() == eps.size());
  CHECK(rep.final_distance <= 1e-5);
  // the walk actually contracts
  CHECK(rep.steps.back().distance <= rep.steps.front().distance);
  CHECK(one_parameter_residual(J2, 2.0, 3.0) <= 1e-8);
}

TEST_CASE("theta flow reduces the simplex integrand") {
  const GradedSpace space(builtin_datum("elliptic_curve"), Window{-2, 2, 4});
  const NilpotentMat N = NilpotentMat::from_window(space);
  const std::vector<double> phi = phi_diagonal(space);
  CHECK(integrand_reduction_residual(N, phi, {0.3, 1.1}) <= 1e-12);
  CHECK(integrand_reduction_residual(N, phi, {0.5, 0.2, 2.0}) <= 1e-12);
  const Mat A = N.N;
  CHECK(dist(theta_conj(theta_conj(A, phi, 0.7), phi, -0.7), A) <= 1e-13);
  CHECK_THROWS_AS(theta_conj(Mat::Identity(2, 2), phi, 1.0), std::invalid_argument);
}

TEST_CASE("flat-connection residue is N for the whole isomonodromic family") {
  const NilpotentMat N = NilpotentMat::jordan(4);
  for (const double mu : {1.0, 2.0, 2.718281828459045, 10.0}) {
    const Mat a = connection_residue(N, mu, 0.5, 256);
    const Mat b = connection_residue(N, mu, 0.25, 256);
    CAPTURE(mu);
    CHECK(dist(a, N.N) <= 1e-8);
    CHECK(dist(a, b) <= 1e-9);  // radius independence
  }
}

TEST_CASE("monodromy exponential and its branch-free logarithm") {
  for (int size = 2; size <= 5; ++size) {
    const NilpotentMat N = NilpotentMat::jordan(size);
    const Mat T0 = monodromy_rep(N);
    const Mat logT = log_recovery(T0);
    CHECK(dist(logT, Cx(0.0, -kTau) * N.N) <= 1e-12);
  }
  const NilpotentMat N = NilpotentMat::jordan(3);
  CHECK(dist(gauge_residue(N, 2.0, 0.5, 256), Cx(0.0, kTau) * N.N) <= 1e-8);
  CHECK(dist(residue_phi(N), N.N) <= 1e-10);
}

TEST_CASE("formal log of exp is the identity in every truncation order") {
  for (int order = 1; order <= 8; ++order) {
    CAPTURE(order);
    CHECK(formal_log_exp_is_identity(order));
  }
  const RatSeries e = series_exp(5);
  REQUIRE(e.size() == 5);
  CHECK(e[0] == Rat(1));
  CHECK(e[1] == Rat(1));
  CHECK(e[2] == Rat(1, 2));
  CHECK(e[3] == Rat(1, 6));
  CHECK(e[4] == Rat(1, 24));
  const RatSeries back = series_compose_log(e, 5);
  CHECK(back[0] == Rat(0));
  CHECK(back[1] == Rat(1));
  CHECK(back[2] == Rat(0));
  CHECK(back[3] == Rat(0));
}

TEST_CASE("exact unipotent log-exp identity, dense and windowed") {
  for (int size = 2; size <= 5; ++size) CHECK(nilpotent_log_exp_identity(rat_jordan(size)));
  const GradedSpace space(builtin_datum("elliptic_curve"), Window{-2, 2, 4});
  const SparseOp N = monodromy_N(space);
  const int nu = NilpotentMat::from_window(space).nu;
  CHECK(nilpotent_log_exp_identity(N, nu));
}
