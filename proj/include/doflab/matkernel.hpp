#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace doflab {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Everything in this project is small
// (at most N1^2 x N1^2 with N1 <= 16), so no structure exploitation.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr double kDefaultRankTol = 1e-10;
inline constexpr double kDefaultNullTol = 1e-9;

// Hard cap on result sizes for the product constructions below.
inline constexpr std::int64_t kMaxMatrixElements = std::int64_t(1) << 24;

bool all_finite(const ComplexMatrix& m);

// Throws std::invalid_argument if `m` contains NaN or Inf entries.
void require_finite(const ComplexMatrix& m, const char* what);

// exp(-j*2*pi*k/n), with exact values on quarter-circle multiples so that
// small DFT matrices come out bit-exact. Negative k gives the conjugate root.
Complex unit_root(std::int64_t k, std::int64_t n);

// Kronecker product; block (i,j) of the result is a(i,j) * b.
// Throws std::length_error if the result would exceed kMaxMatrixElements.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Singular values in descending order.
// Throws std::runtime_error (with the matrix dimensions) if the SVD fails.
std::vector<double> singular_values(const ComplexMatrix& m);

// Number of singular values strictly greater than rel_tol * sigma_max.
// rel_tol must lie in (0, 1). The zero matrix has rank 0.
int numerical_rank(const ComplexMatrix& m, double rel_tol = kDefaultRankTol);

double min_singular_value(const ComplexMatrix& m);

// log2 det(I + rho * K^-1 G G^H) for an n x k channel G, Hermitian
// positive-definite noise covariance K (n x n) and per-stream power rho.
// Throws std::domain_error if K is not Hermitian positive definite.
double shannon_logdet(const ComplexMatrix& g, const ComplexMatrix& noise_cov,
                      double power_per_stream);

// n x n DFT matrix with entry (r, c) = exp(-j*2*pi*r*c/n), 0-indexed.
ComplexMatrix dft_matrix(int n);

// One CSV row per matrix row; each entry contributes a "re,im" field pair.
std::string matrix_to_csv(const ComplexMatrix& m);

}  // namespace doflab
