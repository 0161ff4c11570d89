#pragma once

#include "arinf/graded.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace arinf {

using Mat = Eigen::MatrixXcd;

// Square matrix with verified nilpotency: the power chain N, N^2, ... must
// reach zero within the dimension; the order nu (smallest with N^nu = 0) is
// recorded so every exponential below is an explicit nu-term sum.
struct NilpotentMat {
  Mat N;
  int nu = 0;

  explicit NilpotentMat(Mat n);
  static NilpotentMat jordan(int size);
  static NilpotentMat from_window(const GradedSpace& space);
};

// Diagonal of the Frobenius operator (-r per basis element), for the
// conjugation form of the scaling flow on attached windows.
std::vector<double> phi_diagonal(const GradedSpace& space);

Mat nil_exp(const NilpotentMat& N, std::complex<double> c);  // exp(c N)

Mat phi_minus(const NilpotentMat& N, std::complex<double> z);  // exp(-N/z), z != 0
// exp(((mu^z - 1)/z) N), principal branch, entire in z (series at z ~ 0).
Mat phi_plus(const NilpotentMat& N, std::complex<double> mu, std::complex<double> z);
// exp((mu^z / z) N) = phi_minus(z)^{-1} phi_plus(z).
Mat loop_phi(const NilpotentMat& N, std::complex<double> mu, std::complex<double> z);

// Iterated-integral coefficient over the ordered simplex
// s1 >= ... >= sk >= 0 of e^{-(s1+...+sk)} N^k, three independent readings:
// nested composite Gauss-Legendre quadrature (nodes_per_unit controls the
// density), Monte-Carlo with inverse-CDF exponentials (seeded, deterministic),
// and Laurent-coefficient extraction of exp(N/z) on a circle. All must equal
// N^k / k!.
Mat dk_oracle(const NilpotentMat& N, int k, int nodes_per_unit = 10);
Mat dk_mc(const NilpotentMat& N, int k, long samples, unsigned long long seed);
Mat dk_laurent(const NilpotentMat& N, int k, double radius, int points);

// theta_t conjugation of A by exp(-t Phi) given the Phi diagonal.
Mat theta_conj(const Mat& A, const std::vector<double>& phi_diag, double t);
// max-entry residual of theta_{-s1}(N)...theta_{-sk}(N) = e^{-sum s} N^k.
double integrand_reduction_residual(const NilpotentMat& N, const std::vector<double>& phi_diag,
                                    const std::vector<double>& s);

// Max-entry residuals of the two scaling identities
//   loop_{lambda mu}(eps) = theta_{t eps}(loop_mu(eps)),        t = log lambda
//   phi+_{lambda mu}(eps) = exp(((lambda^eps-1)/eps) N) theta_{t eps}(phi+_mu(eps))
// with theta applied by conjugation when phi_diag is supplied (attached mode)
// and by the scalar rule theta_s(N^k) = e^{ks} N^k otherwise.
struct ScalingResidual {
  double loop_identity = 0.0;
  double plus_identity = 0.0;
};
ScalingResidual scaling_consistency(const NilpotentMat& N, double lambda, double mu, double eps,
                                    const std::vector<double>* phi_diag = nullptr);

// phi-(eps) theta_{t eps}(phi-(eps)^{-1}) along eps -> 0, against exp(tN).
struct RenormStep {
  double eps = 0.0;
  double cauchy = 0.0;     // distance to the previous product
  double distance = 0.0;   // distance to exp(tN)
};
struct RenormReport {
  std::vector<RenormStep> steps;
  Mat final_value;
  double final_distance = 0.0;
};
RenormReport renorm_group(const NilpotentMat& N, double lambda, const std::vector<double>& eps_seq);

// | exp(t1 N) exp(t2 N) - exp((t1+t2) N) | at the renormalization limit.
double one_parameter_residual(const NilpotentMat& N, double lambda1, double lambda2);

// Trapezoid contour residue at 0 of N (1/z + d/dz (mu^z-1)/z) dz; equals N
// for every mu (isomonodromic family).
Mat connection_residue(const NilpotentMat& N, std::complex<double> mu, double radius, int points);

Mat monodromy_rep(const NilpotentMat& N);  // exp(-2 pi i N)
// Finite branch-free log of a unipotent matrix.
Mat log_recovery(const Mat& T0);

// -phi+(z)^{-1} (log pi(gamma)/z) phi+(z) + phi+(z)^{-1} phi+'(z); its
// contour residue equals -log pi(gamma) = 2 pi i N.
Mat gauge_potential(const NilpotentMat& N, std::complex<double> mu, std::complex<double> z);
Mat gauge_residue(const NilpotentMat& N, std::complex<double> mu, double radius, int points);

// d/dz exp(N z) at 0 by Newton forward differences: exact for polynomials,
// recovers N.
Mat residue_phi(const NilpotentMat& N);

}  // namespace arinf
