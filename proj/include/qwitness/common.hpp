#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

namespace qwitness {

using Complex = std::complex<double>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ComplexMatrix = DenseMatrix<Complex>;
using ComplexVector = DenseVector<Complex>;
using RealMatrix = DenseMatrix<double>;
using RealVector = DenseVector<double>;
using CountMatrix = DenseMatrix<std::int64_t>;

// Central tolerances. Tests and docs reference these names, not literals.
inline constexpr double HERM_TOL = 1e-10;   // Hermiticity residual (max-norm)
inline constexpr double EIG_TOL = 1e-9;     // eigendecomposition residuals
inline constexpr double EPS_DECIDE = 1e-9;  // strict-inequality margin for witness decisions
inline constexpr double STATE_TOL = 1e-10;  // state norm / trace deviation
inline constexpr double PSD_TOL = 1e-9;     // density eigenvalue floor

// omega = 2*pi/d, the elementary phase step of the d-level clock operator.
double omega(int d);

// e^{i*angle}
Complex phase(double angle);

// Dense multipartite state vectors are capped at d^n <= max_dim() entries
// (operators at max_dim()^2). Default 4096; the CLI honours QWITNESS_MAX_DIM.
std::size_t max_dim();
void set_max_dim(std::size_t cap);

}  // namespace qwitness
