#include "doflab/matkernel.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace doflab {

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex& z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!all_finite(m))
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

Complex unit_root(std::int64_t k, std::int64_t n) {
  k %= n;
  if (k < 0) k += n;
  // Exact values at multiples of pi/2.
  if ((4 * k) % n == 0) {
    switch ((4 * k) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, -1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, 1.0};
    }
  }
  const double theta = -2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(n);
  return {std::cos(theta), std::sin(theta)};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::int64_t rows = std::int64_t(a.rows()) * b.rows();
  const std::int64_t cols = std::int64_t(a.cols()) * b.cols();
  if (rows * cols > kMaxMatrixElements)
    throw std::length_error("kron: result of " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " exceeds the element cap");
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  require_finite(m, "singular_values");
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("SVD did not converge on a " +
                             std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " matrix");
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

int numerical_rank(const ComplexMatrix& m, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw std::domain_error("numerical_rank: rel_tol must lie in (0, 1)");
  const std::vector<double> s = singular_values(m);
  if (s.empty() || s.front() == 0.0) return 0;
  const double threshold = rel_tol * s.front();
  int rank = 0;
  for (double v : s)
    if (v > threshold) ++rank;
  return rank;
}

double min_singular_value(const ComplexMatrix& m) {
  return singular_values(m).back();
}

double shannon_logdet(const ComplexMatrix& g, const ComplexMatrix& noise_cov,
                      double power_per_stream) {
  require_finite(g, "shannon_logdet: channel");
  require_finite(noise_cov, "shannon_logdet: noise covariance");
  if (noise_cov.rows() != noise_cov.cols())
    throw std::domain_error("shannon_logdet: noise covariance must be square");
  if (g.rows() != noise_cov.rows())
    throw std::domain_error("shannon_logdet: channel rows must match noise covariance");
  if (!(power_per_stream >= 0.0) || !std::isfinite(power_per_stream))
    throw std::domain_error("shannon_logdet: power must be a nonnegative real");

  const double scale = std::max(1.0, noise_cov.cwiseAbs().maxCoeff());
  if ((noise_cov - noise_cov.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::domain_error("shannon_logdet: noise covariance is not Hermitian");

  Eigen::LLT<ComplexMatrix> llt(noise_cov);
  if (llt.info() != Eigen::Success)
    throw std::domain_error(
        "shannon_logdet: noise covariance is not positive definite");

  // Whiten and use det(I_n + rho B B^H) = det(I_k + rho B^H B).
  const ComplexMatrix b = llt.matrixL().solve(g);
  ComplexMatrix c = ComplexMatrix::Identity(g.cols(), g.cols());
  c.noalias() += power_per_stream * (b.adjoint() * b);
  Eigen::LLT<ComplexMatrix> cllt(c);
  if (cllt.info() != Eigen::Success)
    throw std::runtime_error("shannon_logdet: Cholesky of I + rho*B^H*B failed");
  double log_det = 0.0;
  const ComplexMatrix l = cllt.matrixL();
  for (Eigen::Index i = 0; i < l.rows(); ++i)
    log_det += 2.0 * std::log(l(i, i).real());
  return std::max(0.0, log_det / std::numbers::ln2);
}

ComplexMatrix dft_matrix(int n) {
  if (n < 1) throw std::domain_error("dft_matrix: n must be positive");
  ComplexMatrix f(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      f(r, c) = unit_root(std::int64_t(r) * c, n);
  return f;
}

std::string matrix_to_csv(const ComplexMatrix& m) {
  std::string out;
  char buf[64];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g", m(r, c).real(),
                    m(r, c).imag());
      if (c > 0) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace doflab
