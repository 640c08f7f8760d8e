#pragma once

#include "qwitness/common.hpp"

namespace qwitness {

enum class BasisLabel { ZBasis, XBasis };

// Pure vector or density matrix on (C^d)^{(x)n}. Values are immutable after
// construction; the factories validate normalization, Hermiticity and
// positivity. Composite indices are party-1-major: |a>|b> sits at a*d + b.
class QuditState {
 public:
  static QuditState pure(int d, int parties, ComplexVector amplitudes);
  static QuditState density(int d, int parties, ComplexMatrix rho);

  int d() const { return d_; }
  int parties() const { return parties_; }
  bool is_pure() const { return pure_; }
  Eigen::Index dim() const { return pure_ ? vec_.size() : mat_.rows(); }

  const ComplexVector& amplitudes() const;  // pure states only
  const ComplexMatrix& density_ref() const; // density states only
  ComplexMatrix to_density() const;         // either kind

  Complex expectation(const ComplexMatrix& op) const;
  // Expectation of a Hermitian operator; throws if |Im| exceeds imag_tol.
  double real_expectation(const ComplexMatrix& op, double imag_tol = EPS_DECIDE) const;

 private:
  QuditState(int d, int parties, bool pure, ComplexVector v, ComplexMatrix m);

  int d_;
  int parties_;
  bool pure_;
  ComplexVector vec_;
  ComplexMatrix mat_;
};

// Clock operator Z = sum_j e^{i omega j} |j><j|, omega = 2 pi / d.
ComplexMatrix pauli_z(int d);

// Shift operator X = sum_j |j+1 mod d><j|.
ComplexMatrix pauli_x(int d);

// Column k is the X-basis ket: F(a,k) = e^{i omega a k} / sqrt(d).
ComplexMatrix fourier_matrix(int d);

// |k-bar> = Z^k |0-bar>, the k-th X-basis state.
QuditState x_basis_state(int d, int k);

// Maximally entangled two-qudit state (1/sqrt d) sum_j |jj>.
QuditState mes(int d);

// |Phi_{l,m}> = (X^l (x) Z^m) |Phi_{0,0}>.
QuditState bell_state(int d, int l, int m);
ComplexVector bell_vector(int d, int l, int m);

// d^2 x d^2 unitary whose column l*d+m is |Phi_{l,m}>.
ComplexMatrix bell_basis(int d);

// Two-qudit controlled-Z: diagonal phases e^{i omega j k}.
ComplexMatrix cz_matrix(int d);

// (1/sqrt d) sum_k |k>^{(x)n}
QuditState ghz_state(int d, int n);

// Chain cluster state: (prod_m CZ^dag_{m,m+1}) |0-bar>^{(x)n}. With this
// construction T_1 = X_1^dag Z_2 and T_m = Z_{m-1} X_m^dag Z_{m+1} stabilize
// the state exactly.
QuditState cluster_state(int d, int n);

// Outcome probabilities of a joint measurement in the Z- or X-basis,
// row-major over (j,k) for two parties. Supports 1- and 2-party states.
RealVector basis_probabilities(const QuditState& state, BasisLabel basis);

}  // namespace qwitness
