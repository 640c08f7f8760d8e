#include "qwitness/witnesses.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qwitness/linalg.hpp"

namespace qwitness {

namespace {

void check_dimension(int d) {
  if (d < 2) throw std::invalid_argument("witness operator: dimension must be >= 2");
}

}  // namespace

ComplexMatrix correlation_operator_c(int d) {
  check_dimension(d);
  const Eigen::Index dim = static_cast<Eigen::Index>(d) * d;
  ComplexMatrix c = ComplexMatrix::Zero(dim, dim);
  for (int j = 0; j < d; ++j) {
    const Eigen::Index idx = static_cast<Eigen::Index>(j) * d + j;
    c(idx, idx) += 1.0;
  }
  const ComplexMatrix f = fourier_matrix(d);
  for (int j = 0; j < d; ++j) {
    ComplexVector v(dim);
    // |j-bar> (x) |-j-bar>
    const ComplexVector& a = f.col(j);
    const ComplexVector& b = f.col((d - j) % d);
    for (int s = 0; s < d; ++s)
      for (int t = 0; t < d; ++t) v(static_cast<Eigen::Index>(s) * d + t) = a(s) * b(t);
    c += v * v.adjoint();
  }
  return c;
}

ComplexMatrix amplitude_operator_r(int d) {
  check_dimension(d);
  const ComplexMatrix z = pauli_z(d);
  const ComplexMatrix x = pauli_x(d);
  const ComplexMatrix zd = z.adjoint();
  const ComplexMatrix xd = x.adjoint();
  return 0.5 * (tensor(z, zd) + tensor(zd, z)) + 0.5 * (tensor(x, x) + tensor(xd, xd));
}

ComplexMatrix amplitude_operator_r_projector(int d) {
  check_dimension(d);
  const double w = omega(d);
  const Eigen::Index dim = static_cast<Eigen::Index>(d) * d;
  ComplexMatrix zpart = ComplexMatrix::Zero(dim, dim);
  ComplexMatrix xweights = ComplexMatrix::Zero(dim, dim);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const Eigen::Index idx = static_cast<Eigen::Index>(j) * d + k;
      zpart(idx, idx) = std::cos(w * (j - k));
      xweights(idx, idx) = std::cos(w * (j + k));
    }
  const ComplexMatrix f2 = tensor(fourier_matrix(d), fourier_matrix(d));
  return zpart + f2 * xweights * f2.adjoint();
}

BellCoefficients bell_coefficients(const ComplexMatrix& op, int d) {
  check_dimension(d);
  const Eigen::Index dim = static_cast<Eigen::Index>(d) * d;
  if (op.rows() != dim || op.cols() != dim)
    throw std::invalid_argument("bell_coefficients: operator side must be d^2");
  const ComplexMatrix basis = bell_basis(d);
  const ComplexMatrix in_bell = basis.adjoint() * op * basis;

  double max_off = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      if (i != j) max_off = std::max(max_off, std::abs(in_bell(i, j)));
  if (max_off > 1e-9)
    throw std::invalid_argument(
        "bell_coefficients: operator is not Bell-diagonal (largest off-diagonal "
        "magnitude " + std::to_string(max_off) + ")");

  BellCoefficients out{d, RealMatrix(d, d)};
  for (int l = 0; l < d; ++l)
    for (int m = 0; m < d; ++m)
      out.coeffs(l, m) = in_bell(static_cast<Eigen::Index>(l) * d + m,
                                 static_cast<Eigen::Index>(l) * d + m).real();
  return out;
}

double mes_fraction_lower_bound(double c_value, double r_value, int d) {
  check_dimension(d);
  const double cw = std::cos(omega(d));
  const double from_c = c_value - 1.0;
  const double from_r = (r_value - (1.0 + cw)) / (1.0 - cw);
  return std::max(from_c, from_r);
}

int schmidt_lb_from_fraction(double fraction, int d) {
  check_dimension(d);
  for (int k = d; k >= 2; --k)
    if (fraction > (k - 1.0) / d + EPS_DECIDE) return k;
  return 1;
}

WitnessReport make_witness_report(int d, double c_value, double r_value,
                                  double m_value) {
  check_dimension(d);
  WitnessReport rep;
  rep.d = d;
  rep.c_value = c_value;
  rep.r_value = r_value;
  rep.c_bound = 1.0 + 1.0 / d;
  rep.r_bound = m_value;
  rep.c_margin = c_value - rep.c_bound;
  rep.r_margin = r_value - rep.r_bound;
  rep.c_violation = rep.c_margin > EPS_DECIDE;
  rep.r_violation = rep.r_margin > EPS_DECIDE;
  rep.mes_fraction_lb = mes_fraction_lower_bound(c_value, r_value, d);
  rep.mes_fraction_lb_clamped = std::min(std::max(rep.mes_fraction_lb, 0.0), 1.0);
  rep.schmidt_lb = schmidt_lb_from_fraction(rep.mes_fraction_lb, d);
  return rep;
}

WitnessReport evaluate_witnesses(const QuditState& rho, const BoundResult& bound) {
  if (rho.parties() != 2)
    throw std::invalid_argument("evaluate_witnesses: two-qudit state required");
  if (rho.d() != bound.d)
    throw std::invalid_argument("evaluate_witnesses: state dimension " +
                                std::to_string(rho.d()) +
                                " does not match bound dimension " +
                                std::to_string(bound.d));
  const int d = rho.d();
  const double c_value = rho.real_expectation(correlation_operator_c(d));
  const double r_value = rho.real_expectation(amplitude_operator_r(d));
  return make_witness_report(d, c_value, r_value, bound.m_value);
}

std::pair<double, double> operator_upper_bound_check(int d) {
  check_dimension(d);
  const Eigen::Index dim = static_cast<Eigen::Index>(d) * d;
  const ComplexVector phi = mes(d).amplitudes();
  const ComplexMatrix proj = phi * phi.adjoint();
  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
  const double cw = std::cos(omega(d));

  const ComplexMatrix slack_c = id + proj - correlation_operator_c(d);
  const ComplexMatrix slack_r =
      (1.0 - cw) * proj + (1.0 + cw) * id - amplitude_operator_r(d);
  const auto min_eig = [](const ComplexMatrix& a) {
    const auto eig = hermitian_eigs(a);
    return eig.eigenvalues(eig.eigenvalues.size() - 1);
  };
  return {min_eig(slack_c), min_eig(slack_r)};
}

std::pair<RealVector, RealVector> schmidt_number_thresholds(int d, double m_value) {
  check_dimension(d);
  if (m_value < 1.0 || m_value >= 2.0)
    throw std::invalid_argument("schmidt_number_thresholds: m_value must lie in [1, 2)");
  const double cw = std::cos(omega(d));
  RealVector c_thresholds(d);
  RealVector r_thresholds(d);
  for (int k = 1; k <= d; ++k) {
    c_thresholds(k - 1) = 1.0 + (k - 1.0) / d;
    r_thresholds(k - 1) = ((d - k + 1.0) * cw + (d + k - 1.0)) / d;
  }
  return {c_thresholds, r_thresholds};
}

}  // namespace qwitness
