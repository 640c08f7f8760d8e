#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwitness/linalg.hpp"
#include "test_support.hpp"

using namespace qwitness;
using qwtest::naive_kron;
using qwtest::random_complex_matrix;
using qwtest::random_hermitian;

TEST_CASE("tensor: identity and diagonal cases") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK(max_abs(tensor(i2, i2) - ComplexMatrix::Identity(4, 4)) == 0.0);

  ComplexMatrix z2 = ComplexMatrix::Zero(2, 2);
  z2(0, 0) = 1.0;
  z2(1, 1) = -1.0;
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  expected(1, 1) = -1.0;
  expected(2, 2) = -1.0;
  expected(3, 3) = 1.0;
  CHECK(max_abs(tensor(z2, z2) - expected) == 0.0);
}

TEST_CASE("tensor: elementwise oracle and trace multiplicativity") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix a = random_complex_matrix(3, 3, rng);
    const ComplexMatrix b = random_complex_matrix(3, 3, rng);
    const ComplexMatrix t = tensor(a, b);
    CHECK(max_abs(t - naive_kron(a, b)) == 0.0);
    CHECK(std::abs(t.trace() - a.trace() * b.trace()) < 1e-12);
  }
}

TEST_CASE("tensor: associativity is exact") {
  // Exact-entry matrices keep the scalar products bit-identical.
  ComplexMatrix a(2, 2), b(2, 2), c(2, 2);
  a << Complex(1, 0), Complex(0, 2), Complex(-3, 0), Complex(0.5, -1);
  b << Complex(0, 1), Complex(2, 0), Complex(1, 1), Complex(-0.25, 0);
  c << Complex(4, 0), Complex(0, -2), Complex(0.5, 0), Complex(1, 0);
  CHECK(max_abs(tensor(tensor(a, b), c) - tensor(a, tensor(b, c))) == 0.0);
}

TEST_CASE("tensor: error paths") {
  CHECK_THROWS_AS(checked_tensor_dim(Eigen::Index(1) << 40, Eigen::Index(1) << 40),
                  std::length_error);
  CHECK_THROWS_AS(tensor(ComplexMatrix::Zero(2, 3), ComplexMatrix::Identity(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("hermitian_eigs: diagonal matrix sorts descending") {
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a(0, 0) = 3.0;
  a(1, 1) = 1.0;
  a(2, 2) = 2.0;
  const auto eig = hermitian_eigs(a);
  CHECK(eig.eigenvalues(0) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(eig.eigenvalues(1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(eig.eigenvalues(2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eigs: Pauli X spectrum") {
  const auto eig = hermitian_eigs(pauli_x(2));
  CHECK(eig.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eig.eigenvalues(1) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eigs: random 10x10 contract") {
  SplitMix64 rng(23);
  const ComplexMatrix a = random_hermitian(10, rng);
  const auto eig = hermitian_eigs(a);

  CHECK(std::abs(eig.eigenvalues.sum() - a.trace().real()) < 1e-9);

  // eigenpair residuals
  for (Eigen::Index i = 0; i < 10; ++i) {
    const ComplexVector residual =
        a * eig.eigenvectors.col(i) - eig.eigenvalues(i) * eig.eigenvectors.col(i);
    CHECK(residual.cwiseAbs().maxCoeff() < EIG_TOL);
  }

  // orthonormal columns
  const ComplexMatrix gram = eig.eigenvectors.adjoint() * eig.eigenvectors;
  CHECK(max_abs(gram - ComplexMatrix::Identity(10, 10)) < EIG_TOL);

  // reconstruction
  ComplexMatrix rebuilt = ComplexMatrix::Zero(10, 10);
  for (Eigen::Index i = 0; i < 10; ++i)
    rebuilt += eig.eigenvalues(i) * eig.eigenvectors.col(i) *
               eig.eigenvectors.col(i).adjoint();
  CHECK(max_abs(rebuilt - a) < EIG_TOL);
}

TEST_CASE("hermitian_eigs: rejects non-Hermitian input") {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigs(a), std::invalid_argument);
}

TEST_CASE("operator_norm: pinned values") {
  CHECK(operator_norm(ComplexMatrix::Identity(7, 7)) == doctest::Approx(1.0));
  ComplexMatrix a = ComplexMatrix::Zero(4, 4);
  a(0, 0) = 2.0;
  a(2, 2) = -2.0;
  CHECK(operator_norm(a) == doctest::Approx(2.0));

  // (Z+Z^dag)/2 for d=5 is diag(cos(w j)); the norm is max_j |cos(w j)|.
  const int d = 5;
  const ComplexMatrix z = pauli_z(d);
  double expected = 0.0;
  for (int j = 0; j < d; ++j)
    expected = std::max(expected, std::abs(std::cos(omega(d) * j)));
  CHECK(expected == doctest::Approx(1.0));
  CHECK(operator_norm(0.5 * (z + z.adjoint().eval())) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("operator_norm: invariance under unitary conjugation") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 4; ++trial) {
    const ComplexMatrix a = random_hermitian(8, rng);
    const ComplexMatrix u = hermitian_eigs(random_hermitian(8, rng)).eigenvectors;
    const ComplexMatrix conjugated = u * a * u.adjoint();
    CHECK(std::abs(operator_norm(a) - operator_norm(conjugated)) < 1e-9);
  }
}
