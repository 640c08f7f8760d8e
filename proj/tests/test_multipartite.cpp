#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qwitness/bounds.hpp"
#include "qwitness/linalg.hpp"
#include "qwitness/multipartite.hpp"
#include "test_support.hpp"

using namespace qwitness;
using qwtest::random_product_pure;
using qwtest::random_product_vector;

TEST_CASE("ghz stabilizers: qubit pair matches the Pauli pair") {
  const ComplexMatrix z = pauli_z(2);
  const ComplexMatrix x = pauli_x(2);
  const StabilizerSet set = ghz_stabilizers(2, 2);
  REQUIRE(set.ops.size() == 2);
  CHECK(max_abs(set.ops[0] - tensor(x, x)) < 1e-15);
  CHECK(max_abs(set.ops[1] - tensor(z, z)) < 1e-15); // Z^dag = Z for d=2
}

TEST_CASE("stabilizer sets: unitarity and canonical eigenstate") {
  for (const auto& [d, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
    const ComplexMatrix id = ComplexMatrix::Identity(
        ghz_stabilizer(d, n, 1).rows(), ghz_stabilizer(d, n, 1).rows());

    const StabilizerSet ghz_set = ghz_stabilizers(d, n);
    const ComplexVector g = ghz_state(d, n).amplitudes();
    for (const ComplexMatrix& op : ghz_set.ops) {
      CHECK(max_abs(op * op.adjoint() - id) < 1e-10);
      CHECK((op * g - g).cwiseAbs().maxCoeff() < 1e-10);
      CHECK((op.adjoint() * g - g).cwiseAbs().maxCoeff() < 1e-10);
    }

    const StabilizerSet cluster_set = cluster_stabilizers(d, n);
    const ComplexVector c = cluster_state(d, n).amplitudes();
    for (const ComplexMatrix& op : cluster_set.ops) {
      CHECK(max_abs(op * op.adjoint() - id) < 1e-10);
      CHECK((op * c - c).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("cluster stabilizer: pinned qubit chain form") {
  const ComplexMatrix z = pauli_z(2);
  const ComplexMatrix x = pauli_x(2);
  const ComplexMatrix t2 = cluster_stabilizer(2, 3, 2);
  CHECK(max_abs(t2 - tensor(tensor(z, x), z)) < 1e-15); // X^dag = X at d=2
}

TEST_CASE("pair tests: canonical states give value 2") {
  for (int d : {2, 3, 4}) {
    const double m_value = separable_bound_m(d).m_value;
    for (int n : {2, 3}) {
      const PairTest ghz = ghz_pair_test(ghz_state(d, n), 2, m_value);
      CHECK(std::abs(ghz.value - 2.0) < 1e-10);
      CHECK(ghz.violates);

      const PairTest cluster = cluster_pair_test(cluster_state(d, n), 2, m_value);
      CHECK(std::abs(cluster.value - 2.0) < 1e-10);
      CHECK(cluster.violates);
    }
  }
}

TEST_CASE("pair tests: pinned non-entangled values") {
  const int d = 3;
  const int n = 3;
  const double m_value = separable_bound_m(d).m_value;

  // |0>^n: X-terms vanish, Z-terms give 1
  ComplexVector e0 = ComplexVector::Zero(27);
  e0(0) = 1.0;
  const QuditState zeros = QuditState::pure(d, n, e0);
  const PairTest ghz = ghz_pair_test(zeros, 2, m_value);
  CHECK(std::abs(ghz.value - 1.0) < 1e-10);
  CHECK_FALSE(ghz.violates);

  // |0-bar>^n: every T_m contains a Z factor with vanishing expectation, so
  // the whole product vanishes
  ComplexVector pbar = ComplexVector::Ones(27);
  pbar /= pbar.norm();
  const PairTest cluster = cluster_pair_test(QuditState::pure(d, n, pbar), 2, m_value);
  CHECK(std::abs(cluster.value) < 1e-10);
  CHECK_FALSE(cluster.violates);

  // |0-bar>|0> saturates the cluster test at 1: <T_1> = <X^dag><Z> = 1 while
  // <T_2> = 0
  ComplexVector mixed_prod = ComplexVector::Zero(9);
  for (int j = 0; j < 3; ++j) mixed_prod(3 * j) = 1.0 / std::sqrt(3.0);
  const PairTest saturating =
      cluster_pair_test(QuditState::pure(3, 2, mixed_prod), 2, m_value);
  CHECK(std::abs(saturating.value - 1.0) < 1e-10);
  CHECK_FALSE(saturating.violates);

  // maximally mixed: all stabilizers traceless
  const QuditState mixed =
      QuditState::density(2, 2, ComplexMatrix::Identity(4, 4) / 4.0);
  CHECK(std::abs(ghz_pair_test(mixed, 2, 1.0).value) < 1e-12);
  CHECK(std::abs(cluster_pair_test(mixed, 2, 1.0).value) < 1e-12);
}

TEST_CASE("pair tests: product states never exceed the bound") {
  for (int d : {2, 3, 4, 5}) {
    const double m_value = separable_bound_m(d).m_value;
    for (int n : {2, 3}) {
      SplitMix64 rng(d * 100 + n);
      for (int trial = 0; trial < 100; ++trial) {
        const QuditState product = random_product_pure(d, n, rng);
        for (int m = 2; m <= n; ++m) {
          CHECK(ghz_pair_test(product, m, m_value).value <= m_value + 1e-9);
          CHECK(cluster_pair_test(product, m, m_value).value <= m_value + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("pair tests: mixtures of product states stay bounded") {
  const int d = 3;
  const int n = 2;
  const double m_value = separable_bound_m(d).m_value;
  SplitMix64 rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    ComplexMatrix rho = ComplexMatrix::Zero(9, 9);
    double total = 0.0;
    const int terms = 2 + static_cast<int>(rng.next() % 4);
    std::vector<double> weights(terms);
    for (double& w : weights) {
      w = rng.next_double() + 1e-9;
      total += w;
    }
    for (int t = 0; t < terms; ++t) {
      const ComplexVector v = random_product_vector(d, n, rng);
      rho += (weights[t] / total) * (v * v.adjoint());
    }
    const QuditState state = QuditState::density(d, n, rho);
    CHECK(ghz_pair_test(state, 2, m_value).value <= m_value + 1e-9);
    CHECK(cluster_pair_test(state, 2, m_value).value <= m_value + 1e-9);
  }
}

TEST_CASE("qubit pair test reduces to the ZZ+XX witness") {
  const ComplexMatrix zz_xx =
      tensor(pauli_z(2), pauli_z(2)) + tensor(pauli_x(2), pauli_x(2));
  const double m2 = separable_bound_m(2).m_value;
  CHECK(std::abs(m2 - 1.0) < 1e-9);

  SplitMix64 rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    const QuditState state = qwtest::random_pure_state(2, 2, rng);
    const double direct = std::abs(state.real_expectation(zz_xx));
    CHECK(std::abs(ghz_pair_test(state, 2, m2).value - direct) < 1e-12);
  }
}

TEST_CASE("error paths: site range, party count, size cap") {
  const double m = 1.0;
  CHECK_THROWS_AS(ghz_pair_test(ghz_state(2, 3), 1, m), std::invalid_argument);
  CHECK_THROWS_AS(ghz_pair_test(ghz_state(2, 3), 4, m), std::invalid_argument);
  CHECK_THROWS_AS(cluster_pair_test(mes(2), 3, m), std::invalid_argument);
  CHECK_THROWS_AS(ghz_stabilizer(8, 5, 1), std::length_error);
  CHECK_THROWS_AS(parse_stabilizer_kind("foo"), std::invalid_argument);
  CHECK(parse_stabilizer_kind("ghz") == StabilizerKind::GHZ);
  CHECK(parse_stabilizer_kind("cluster") == StabilizerKind::Cluster);
}
