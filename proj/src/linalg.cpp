#include "qwitness/linalg.hpp"

#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace qwitness {

double max_abs(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs(a - a.adjoint().eval()) <= tol;
}

Eigen::Index checked_tensor_dim(Eigen::Index a, Eigen::Index b) {
  if (a <= 0 || b <= 0)
    throw std::invalid_argument("tensor: dimensions must be positive");
  if (a > std::numeric_limits<Eigen::Index>::max() / b)
    throw std::length_error("tensor: dimension product overflows");
  return a * b;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw std::invalid_argument("tensor: inputs must be square");
  checked_tensor_dim(a.rows(), b.rows());
  return Eigen::kroneckerProduct(a, b);
}

EigenDecomposition hermitian_eigs(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("hermitian_eigs: matrix must be square");
  if (!is_hermitian(a))
    throw std::invalid_argument(
        "hermitian_eigs: input violates the HERM_TOL Hermiticity contract");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigs: eigensolver did not converge");
  // Eigen sorts ascending; flip to descending.
  EigenDecomposition out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

double operator_norm(const ComplexMatrix& a) {
  return hermitian_eigs(a).eigenvalues.cwiseAbs().maxCoeff();
}

}  // namespace qwitness
