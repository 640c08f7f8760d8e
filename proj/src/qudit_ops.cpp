#include "qwitness/qudit_ops.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qwitness/linalg.hpp"

namespace qwitness {

namespace {

void check_dimension(int d) {
  if (d < 2) throw std::invalid_argument("qudit dimension must be >= 2");
}

Eigen::Index power_dim(int d, int parties) {
  Eigen::Index dim = 1;
  for (int i = 0; i < parties; ++i) dim = checked_tensor_dim(dim, d);
  return dim;
}

void check_size_cap(int d, int n) {
  const Eigen::Index dim = power_dim(d, n);
  if (static_cast<std::size_t>(dim) > max_dim())
    throw std::length_error("state size d^n = " + std::to_string(dim) +
                            " exceeds the cap of " + std::to_string(max_dim()) +
                            " (set_max_dim / QWITNESS_MAX_DIM)");
}

}  // namespace

QuditState::QuditState(int d, int parties, bool pure, ComplexVector v,
                       ComplexMatrix m)
    : d_(d), parties_(parties), pure_(pure), vec_(std::move(v)), mat_(std::move(m)) {}

QuditState QuditState::pure(int d, int parties, ComplexVector amplitudes) {
  check_dimension(d);
  if (parties < 1) throw std::invalid_argument("QuditState: parties must be >= 1");
  const Eigen::Index dim = power_dim(d, parties);
  if (amplitudes.size() != dim)
    throw std::invalid_argument("QuditState: amplitude vector has length " +
                                std::to_string(amplitudes.size()) +
                                ", expected d^parties = " + std::to_string(dim));
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > STATE_TOL)
    throw std::invalid_argument("QuditState: pure vector is not unit norm (|norm-1| = " +
                                std::to_string(std::abs(norm - 1.0)) + ")");
  return QuditState(d, parties, true, std::move(amplitudes), ComplexMatrix());
}

QuditState QuditState::density(int d, int parties, ComplexMatrix rho) {
  check_dimension(d);
  if (parties < 1) throw std::invalid_argument("QuditState: parties must be >= 1");
  const Eigen::Index dim = power_dim(d, parties);
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("QuditState: density matrix has side " +
                                std::to_string(rho.rows()) +
                                ", expected d^parties = " + std::to_string(dim));
  if (!is_hermitian(rho, STATE_TOL))
    throw std::invalid_argument("QuditState: density matrix is not Hermitian within STATE_TOL");
  const double trace = rho.trace().real();
  if (std::abs(trace - 1.0) > STATE_TOL)
    throw std::invalid_argument("QuditState: density trace deviates from 1 by " +
                                std::to_string(std::abs(trace - 1.0)));
  if (dim <= 512) {
    // Full positivity check; above this side length only the diagonal is
    // screened and positivity rests on the builder.
    const auto eig = hermitian_eigs(rho);
    const double min_eig = eig.eigenvalues(eig.eigenvalues.size() - 1);
    if (min_eig < -PSD_TOL)
      throw std::invalid_argument("QuditState: density has eigenvalue " +
                                  std::to_string(min_eig) + " below -PSD_TOL");
  } else {
    for (Eigen::Index i = 0; i < dim; ++i)
      if (rho(i, i).real() < -PSD_TOL)
        throw std::invalid_argument("QuditState: density has negative diagonal entry");
  }
  return QuditState(d, parties, false, ComplexVector(), std::move(rho));
}

const ComplexVector& QuditState::amplitudes() const {
  if (!pure_) throw std::logic_error("QuditState: amplitudes() requires a pure state");
  return vec_;
}

const ComplexMatrix& QuditState::density_ref() const {
  if (pure_) throw std::logic_error("QuditState: density_ref() requires a density state");
  return mat_;
}

ComplexMatrix QuditState::to_density() const {
  if (pure_) return vec_ * vec_.adjoint();
  return mat_;
}

Complex QuditState::expectation(const ComplexMatrix& op) const {
  if (op.rows() != dim() || op.cols() != dim())
    throw std::invalid_argument("QuditState: operator side " + std::to_string(op.rows()) +
                                " does not match state dimension " + std::to_string(dim()));
  if (pure_) return (vec_.adjoint() * op * vec_)(0, 0);
  // tr(rho * op) without forming the product
  return op.cwiseProduct(mat_.transpose()).sum();
}

double QuditState::real_expectation(const ComplexMatrix& op, double imag_tol) const {
  const Complex e = expectation(op);
  if (std::abs(e.imag()) > imag_tol)
    throw std::runtime_error("expectation has imaginary residual " +
                             std::to_string(e.imag()));
  return e.real();
}

ComplexMatrix pauli_z(int d) {
  check_dimension(d);
  const double w = omega(d);
  ComplexMatrix z = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) z(j, j) = phase(w * j);
  return z;
}

ComplexMatrix pauli_x(int d) {
  check_dimension(d);
  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return x;
}

ComplexMatrix fourier_matrix(int d) {
  check_dimension(d);
  const double w = omega(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix f(d, d);
  for (int a = 0; a < d; ++a)
    for (int k = 0; k < d; ++k) f(a, k) = phase(w * ((a * k) % d)) * scale;
  return f;
}

QuditState x_basis_state(int d, int k) {
  check_dimension(d);
  if (k < 0 || k >= d)
    throw std::invalid_argument("x_basis_state: index k out of range");
  return QuditState::pure(d, 1, fourier_matrix(d).col(k));
}

QuditState mes(int d) {
  check_dimension(d);
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) psi(static_cast<Eigen::Index>(j) * d + j) = amp;
  return QuditState::pure(d, 2, std::move(psi));
}

ComplexVector bell_vector(int d, int l, int m) {
  check_dimension(d);
  if (l < 0 || l >= d || m < 0 || m >= d)
    throw std::invalid_argument("bell_vector: indices out of range");
  const double w = omega(d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
  // (X_A^l Z_B^m) (1/sqrt d) sum_j |j>|j> = (1/sqrt d) sum_j e^{iwmj} |j+l>|j>
  for (int j = 0; j < d; ++j)
    psi(static_cast<Eigen::Index>((j + l) % d) * d + j) = amp * phase(w * ((m * j) % d));
  return psi;
}

QuditState bell_state(int d, int l, int m) {
  return QuditState::pure(d, 2, bell_vector(d, l, m));
}

ComplexMatrix bell_basis(int d) {
  check_dimension(d);
  ComplexMatrix basis(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);
  for (int l = 0; l < d; ++l)
    for (int m = 0; m < d; ++m)
      basis.col(static_cast<Eigen::Index>(l) * d + m) = bell_vector(d, l, m);
  return basis;
}

ComplexMatrix cz_matrix(int d) {
  check_dimension(d);
  const double w = omega(d);
  const Eigen::Index dim = static_cast<Eigen::Index>(d) * d;
  ComplexMatrix cz = ComplexMatrix::Zero(dim, dim);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const Eigen::Index idx = static_cast<Eigen::Index>(j) * d + k;
      cz(idx, idx) = phase(w * ((j * k) % d));
    }
  return cz;
}

QuditState ghz_state(int d, int n) {
  check_dimension(d);
  if (n < 2) throw std::invalid_argument("ghz_state: parties must be >= 2");
  check_size_cap(d, n);
  const Eigen::Index dim = power_dim(d, n);
  // index of |k,k,...,k> = k * (d^{n-1} + ... + 1)
  const Eigen::Index stride = (dim - 1) / (d - 1);
  ComplexVector psi = ComplexVector::Zero(dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) psi(k * stride) = amp;
  return QuditState::pure(d, n, std::move(psi));
}

QuditState cluster_state(int d, int n) {
  check_dimension(d);
  if (n < 2) throw std::invalid_argument("cluster_state: parties must be >= 2");
  check_size_cap(d, n);
  const Eigen::Index dim = power_dim(d, n);
  const double w = omega(d);
  const double amp = std::pow(static_cast<double>(d), -0.5 * n);
  ComplexVector psi(dim);
  std::vector<int> digits(n);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    Eigen::Index rem = idx;
    for (int site = n - 1; site >= 0; --site) {
      digits[site] = static_cast<int>(rem % d);
      rem /= d;
    }
    long long cross = 0;
    for (int site = 0; site + 1 < n; ++site)
      cross += static_cast<long long>(digits[site]) * digits[site + 1];
    psi(idx) = amp * phase(-w * static_cast<double>(cross % d));
  }
  return QuditState::pure(d, n, std::move(psi));
}

RealVector basis_probabilities(const QuditState& state, BasisLabel basis) {
  if (state.parties() > 2)
    throw std::invalid_argument("basis_probabilities: supports 1- and 2-party states");
  if (basis == BasisLabel::ZBasis) {
    if (state.is_pure()) return state.amplitudes().cwiseAbs2();
    return state.density_ref().diagonal().real();
  }
  const ComplexMatrix f1 = fourier_matrix(state.d());
  const ComplexMatrix u = state.parties() == 1 ? f1 : tensor(f1, f1);
  if (state.is_pure()) {
    const ComplexVector amps = u.adjoint() * state.amplitudes();
    return amps.cwiseAbs2();
  }
  const ComplexMatrix transformed = u.adjoint() * state.density_ref() * u;
  return transformed.diagonal().real();
}

}  // namespace qwitness
