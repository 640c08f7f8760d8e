#pragma once

#include "qwitness/common.hpp"

namespace qwitness {

// Full spectrum of a Hermitian matrix. Eigenvalues are sorted descending;
// eigenvector columns are orthonormal and aligned with the eigenvalues.
struct EigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

double max_abs(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = HERM_TOL);

// Checked product of two tensor-factor dimensions; throws std::length_error
// when the product overflows Eigen::Index.
Eigen::Index checked_tensor_dim(Eigen::Index a, Eigen::Index b);

// Kronecker product of square matrices:
// (a (x) b)[i*bd+k, j*bd+l] = a[i,j] * b[k,l].
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Requires max|a - a^dag| <= HERM_TOL.
EigenDecomposition hermitian_eigs(const ComplexMatrix& a);

// max_i |lambda_i| of a Hermitian matrix.
double operator_norm(const ComplexMatrix& a);

}  // namespace qwitness
