#include "arinf/birkhoff.hpp"

#include "arinf/operators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace arinf {

namespace {

constexpr double kPi = 3.14159265358979323846;

double max_abs(const Mat& a) { return a.cwiseAbs().maxCoeff(); }

std::complex<double> cpow(std::complex<double> mu, std::complex<double> z) {
  return std::exp(z * std::log(mu));
}

// (mu^z - 1)/z continued through z = 0 with the entire-series form.
std::complex<double> horo_exponent(std::complex<double> mu, std::complex<double> z) {
  const std::complex<double> l = std::log(mu);
  if (std::abs(z) < 1e-6) {
    const std::complex<double> u = z * l;
    return l * (1.0 + u / 2.0 + u * u / 6.0 + u * u * u / 24.0);
  }
  return (cpow(mu, z) - 1.0) / z;
}

std::complex<double> horo_exponent_derivative(std::complex<double> mu, std::complex<double> z) {
  const std::complex<double> l = std::log(mu);
  if (std::abs(z) < 1e-6) {
    const std::complex<double> u = z * l;
    return l * l * (0.5 + u / 3.0 + u * u / 8.0);
  }
  return (cpow(mu, z) * l * z - (cpow(mu, z) - 1.0)) / (z * z);
}

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
void gl_rule(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 64; ++it) {
      double p0 = 1.0, p1 = t;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double step = p1 / dp;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    x[i] = -t;
    x[n - 1 - i] = t;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

// Composite Gauss-Legendre value of the nested ordered-simplex integral
// F_level(upper) = int_0^upper e^{-s} F_{level+1}(s) ds, F_{k+1} = 1.
double simplex_level(int level, int k, double upper, const std::vector<double>& x,
                     const std::vector<double>& w) {
  if (level > k) return 1.0;
  if (upper <= 0.0) return 0.0;
  const int panels = std::max(1, static_cast<int>(std::ceil(upper)));
  const double h = upper / panels;
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = p * h;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double s = a + 0.5 * h * (x[i] + 1.0);
      acc += 0.5 * h * w[i] * std::exp(-s) * simplex_level(level + 1, k, s, x, w);
    }
  }
  return acc;
}

Mat mat_power(const NilpotentMat& N, int k) {
  Mat acc = Mat::Identity(N.N.rows(), N.N.cols());
  for (int i = 0; i < k; ++i) acc = acc * N.N;
  return acc;
}

// (1/2 pi i) closed contour integral by the P-point trapezoid rule,
// f sampled on |z| = radius.
template <typename F>
Mat contour_residue(int dim, double radius, int points, F&& f) {
  Mat acc = Mat::Zero(dim, dim);
  for (int j = 0; j < points; ++j) {
    const double th = 2.0 * kPi * j / points;
    const std::complex<double> z = radius * std::complex<double>(std::cos(th), std::sin(th));
    acc += f(z) * z;
  }
  return acc / static_cast<double>(points);
}

}  // namespace

NilpotentMat::NilpotentMat(Mat n) : N(std::move(n)) {
  if (N.rows() != N.cols()) throw std::invalid_argument("nilpotent matrix must be square");
  const double scale = std::max(1.0, max_abs(N));
  Mat p = Mat::Identity(N.rows(), N.cols());
  for (int j = 0; j <= N.rows(); ++j) {
    if (max_abs(p) <= 1e-12 * scale) {
      nu = j;
      return;
    }
    p = p * N;
  }
  throw std::invalid_argument("matrix is not nilpotent: power chain never reaches zero");
}

NilpotentMat NilpotentMat::jordan(int size) {
  Mat n = Mat::Zero(size, size);
  for (int i = 0; i + 1 < size; ++i) n(i, i + 1) = 1.0;
  return NilpotentMat(n);
}

NilpotentMat NilpotentMat::from_window(const GradedSpace& space) {
  const auto dense = monodromy_N(space).to_dense_complex();
  const int d = static_cast<int>(dense.size());
  Mat n(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) n(r, c) = dense[r][c];
  return NilpotentMat(std::move(n));
}

std::vector<double> phi_diagonal(const GradedSpace& space) {
  std::vector<double> d;
  d.reserve(space.basis().size());
  for (const auto& ix : space.basis()) d.push_back(-static_cast<double>(ix.r));
  return d;
}

Mat nil_exp(const NilpotentMat& N, std::complex<double> c) {
  Mat acc = Mat::Identity(N.N.rows(), N.N.cols());
  Mat term = acc;
  for (int j = 1; j < N.nu; ++j) {
    term = term * N.N * (c / static_cast<double>(j));
    acc += term;
  }
  return acc;
}

Mat phi_minus(const NilpotentMat& N, std::complex<double> z) {
  if (z == 0.0) throw std::domain_error("phi_minus has an essential singularity at z = 0");
  return nil_exp(N, -1.0 / z);
}

Mat phi_plus(const NilpotentMat& N, std::complex<double> mu, std::complex<double> z) {
  if (mu == 0.0) throw std::domain_error("scale factor mu must be nonzero");
  return nil_exp(N, horo_exponent(mu, z));
}

Mat loop_phi(const NilpotentMat& N, std::complex<double> mu, std::complex<double> z) {
  if (mu == 0.0) throw std::domain_error("scale factor mu must be nonzero");
  if (z == 0.0) throw std::domain_error("loop value needs z != 0");
  return nil_exp(N, cpow(mu, z) / z);
}

Mat dk_oracle(const NilpotentMat& N, int k, int nodes_per_unit) {
  if (k < 0) throw std::domain_error("coefficient index must be non-negative");
  if (k == 0) return Mat::Identity(N.N.rows(), N.N.cols());
  std::vector<double> x, w;
  gl_rule(std::max(2, nodes_per_unit), x, w);
  const double scalar = simplex_level(1, k, 40.0, x, w);
  return scalar * mat_power(N, k);
}

Mat dk_mc(const NilpotentMat& N, int k, long samples, unsigned long long seed) {
  if (k < 1) throw std::domain_error("coefficient index must be positive");
  std::mt19937_64 rng(seed);
  const double inv = 1.0 / 9007199254740992.0;  // 2^-53
  long hits = 0;
  std::vector<double> s(k);
  for (long n = 0; n < samples; ++n) {
    for (int i = 0; i < k; ++i) {
      const double u = static_cast<double>(rng() >> 11) * inv;
      s[i] = -std::log1p(-u);
    }
    bool ordered = true;
    for (int i = 0; i + 1 < k; ++i)
      if (s[i] < s[i + 1]) {
        ordered = false;
        break;
      }
    if (ordered) ++hits;
  }
  const double scalar = static_cast<double>(hits) / static_cast<double>(samples);
  return scalar * mat_power(N, k);
}

Mat dk_laurent(const NilpotentMat& N, int k, double radius, int points) {
  if (k < 0) throw std::domain_error("coefficient index must be non-negative");
  return contour_residue(static_cast<int>(N.N.rows()), radius, points,
                         [&](std::complex<double> z) -> Mat {
                           return nil_exp(N, 1.0 / z) * std::pow(z, k - 1);
                         });
}

Mat theta_conj(const Mat& A, const std::vector<double>& phi_diag, double t) {
  if (static_cast<int>(phi_diag.size()) != A.rows())
    throw std::invalid_argument("Phi diagonal does not match the matrix dimension");
  Mat out = A;
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c)
      out(r, c) *= std::exp(t * (phi_diag[c] - phi_diag[r]));
  return out;
}

double integrand_reduction_residual(const NilpotentMat& N, const std::vector<double>& phi_diag,
                                    const std::vector<double>& s) {
  Mat prod = Mat::Identity(N.N.rows(), N.N.cols());
  double total = 0.0;
  for (double si : s) {
    prod = prod * theta_conj(N.N, phi_diag, -si);
    total += si;
  }
  const Mat target = std::exp(-total) * mat_power(N, static_cast<int>(s.size()));
  return max_abs(prod - target);
}

ScalingResidual scaling_consistency(const NilpotentMat& N, double lambda, double mu, double eps,
                                    const std::vector<double>* phi_diag) {
  if (lambda <= 0.0 || mu <= 0.0 || eps == 0.0)
    throw std::domain_error("scaling check needs lambda, mu > 0 and eps != 0");
  const double t = std::log(lambda);
  const Mat loop_lhs = loop_phi(N, lambda * mu, eps);
  const Mat plus_lhs = phi_plus(N, lambda * mu, eps);

  Mat loop_rhs, plus_tail;
  if (phi_diag != nullptr) {
    loop_rhs = theta_conj(loop_phi(N, mu, eps), *phi_diag, t * eps);
    plus_tail = theta_conj(phi_plus(N, mu, eps), *phi_diag, t * eps);
  } else {
    const double scale = std::exp(t * eps);
    loop_rhs = nil_exp(N, cpow(mu, eps) / eps * scale);
    plus_tail = nil_exp(N, horo_exponent(mu, eps) * scale);
  }
  const Mat plus_rhs = nil_exp(N, horo_exponent(lambda, eps)) * plus_tail;

  ScalingResidual out;
  out.loop_identity = max_abs(loop_lhs - loop_rhs);
  out.plus_identity = max_abs(plus_lhs - plus_rhs);
  return out;
}

RenormReport renorm_group(const NilpotentMat& N, double lambda, const std::vector<double>& eps_seq) {
  if (lambda <= 0.0) throw std::domain_error("renormalization flow needs lambda > 0");
  const double t = std::log(lambda);
  const Mat limit = nil_exp(N, t);
  RenormReport report;
  Mat prev;
  for (double eps : eps_seq) {
    const Mat a = phi_minus(N, eps);
    const Mat b = nil_exp(N, std::exp(t * eps) / eps);
    const Mat prod = a * b;
    RenormStep step;
    step.eps = eps;
    step.cauchy = report.steps.empty() ? 0.0 : max_abs(prod - prev);
    step.distance = max_abs(prod - limit);
    report.steps.push_back(step);
    prev = prod;
  }
  report.final_value = prev;
  report.final_distance = report.steps.empty() ? 0.0 : report.steps.back().distance;
  return report;
}

double one_parameter_residual(const NilpotentMat& N, double lambda1, double lambda2) {
  const double t1 = std::log(lambda1);
  const double t2 = std::log(lambda2);
  return max_abs(nil_exp(N, t1) * nil_exp(N, t2) - nil_exp(N, t1 + t2));
}

Mat connection_residue(const NilpotentMat& N, std::complex<double> mu, double radius, int points) {
  return contour_residue(static_cast<int>(N.N.rows()), radius, points,
                         [&](std::complex<double> z) -> Mat {
                           return N.N * (1.0 / z + horo_exponent_derivative(mu, z));
                         });
}

Mat monodromy_rep(const NilpotentMat& N) {
  return nil_exp(N, std::complex<double>(0.0, -2.0 * kPi));
}

Mat log_recovery(const Mat& T0) {
  const Mat u = T0 - Mat::Identity(T0.rows(), T0.cols());
  Mat term = u;
  Mat acc = u;
  for (int j = 2; j <= T0.rows(); ++j) {
    term = term * u;
    acc += term * (((j % 2) ? 1.0 : -1.0) / j);
  }
  return acc;
}

Mat gauge_potential(const NilpotentMat& N, std::complex<double> mu, std::complex<double> z) {
  if (z == 0.0) throw std::domain_error("gauge potential needs z != 0");
  const std::complex<double> g = horo_exponent(mu, z);
  const Mat plus = nil_exp(N, g);
  const Mat plus_inv = nil_exp(N, -g);
  const Mat log_pi = std::complex<double>(0.0, -2.0 * kPi) * N.N;
  const Mat plus_prime = horo_exponent_derivative(mu, z) * N.N * plus;
  return -plus_inv * (log_pi / z) * plus + plus_inv * plus_prime;
}

Mat gauge_residue(const NilpotentMat& N, std::complex<double> mu, double radius, int points) {
  return contour_residue(static_cast<int>(N.N.rows()), radius, points,
                         [&](std::complex<double> z) { return gauge_potential(N, mu, z); });
}

Mat residue_phi(const NilpotentMat& N) {
  // Newton forward differences of the polynomial z -> exp(N z) at step 1:
  // f'(0) = sum_{m>=1} (-1)^{m+1} Delta^m f(0) / m, exact once m exceeds nu.
  const int terms = N.nu + 1;
  std::vector<Mat> diff;
  diff.reserve(terms + 1);
  for (int j = 0; j <= terms; ++j) diff.push_back(nil_exp(N, static_cast<double>(j)));
  Mat acc = Mat::Zero(N.N.rows(), N.N.cols());
  for (int m = 1; m <= terms; ++m) {
    for (std::size_t i = 0; i + m <= static_cast<std::size_t>(terms); ++i)
      diff[i] = diff[i + 1] - diff[i];
    acc += diff[0] * (((m % 2) ? 1.0 : -1.0) / m);
  }
  return acc;
}

}  // namespace arinf
