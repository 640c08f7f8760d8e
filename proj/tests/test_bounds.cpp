#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "qwitness/bounds.hpp"
#include "qwitness/linalg.hpp"
#include "test_support.hpp"

using namespace qwitness;
using qwtest::random_pure_state;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("chi_theta: endpoint and interior cases") {
  CHECK(max_abs(chi_theta(2, 0.0) - pauli_z(2)) < 1e-15);

  const ComplexMatrix x3 = pauli_x(3);
  CHECK(max_abs(chi_theta(3, kPi / 2) - 0.5 * (x3 + x3.adjoint().eval())) < 1e-15);

  const ComplexMatrix chi = chi_theta(4, kPi / 4);
  CHECK(max_abs(chi - chi.adjoint().eval()) < 1e-14);

  CHECK_THROWS_AS(chi_theta(3, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(chi_theta(3, kPi), std::invalid_argument);
  CHECK_THROWS_AS(chi_theta(3, 0.3, 1.5), std::invalid_argument);
}

TEST_CASE("chi_theta: weighted form") {
  const int d = 4;
  const double theta = 0.7;
  const double p = 0.3;
  const ComplexMatrix z = pauli_z(d);
  const ComplexMatrix x = pauli_x(d);
  const ComplexMatrix manual =
      0.5 * (std::sqrt(p) * std::cos(theta) * (z + z.adjoint()) +
             std::sqrt(1.0 - p) * std::sin(theta) * (x + x.adjoint()));
  CHECK(max_abs(chi_theta(d, theta, p) - manual) < 1e-15);
}

TEST_CASE("separable_bound_m: pinned low-d values and optima") {
  const BoundResult b2 = separable_bound_m(2);
  CHECK(std::abs(b2.m_value - 1.0) < 1e-9);
  CHECK(std::abs(b2.theta_star - kPi / 4) < 1e-6);

  const BoundResult b3 = separable_bound_m(3);
  CHECK(std::abs(b3.m_value - 1.0) < 1e-9);
  const bool at_end = std::abs(b3.theta_star) < 1e-9 ||
                      std::abs(b3.theta_star - kPi / 2) < 1e-9;
  CHECK(at_end);
  CHECK(b3.theta_star == doctest::Approx(0.0)); // ties pick the smaller theta

  for (int d : {4, 7, 12}) {
    const BoundResult b = separable_bound_m(d);
    CHECK(std::abs(b.theta_star - kPi / 4) < 1e-6);
    CHECK(b.m_value >= 1.0 - 1e-12);
    CHECK(b.m_value < 2.0);
  }
  CHECK_THROWS_AS(separable_bound_m(1), std::invalid_argument);
  CHECK_THROWS_AS(separable_bound_m(3, -1.0), std::invalid_argument);
}

TEST_CASE("separable_bound_m: optimizer state attains the bound") {
  for (int d : {2, 3, 5, 10}) {
    const BoundResult b = separable_bound_m(d);
    const auto [z, x] = unitary_amplitude_pair(b.optimizer_state);
    CHECK(std::abs(std::norm(z) + std::norm(x) - b.m_value) < 1e-6);
  }
}

TEST_CASE("separable_bound_m: weighted variant closed form at d=2") {
  // chi^p_theta for d=2 has eigenvalues +-sqrt(p cos^2 + (1-p) sin^2),
  // so M_2(p) = max(p, 1-p).
  for (double p : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    const BoundResult b = separable_bound_m(2, 1e-10, p);
    CHECK(std::abs(b.m_value - std::max(p, 1.0 - p)) < 1e-9);
  }
  // weighted bound never exceeds max(p, 1-p) * M_d
  const double md = separable_bound_m(6).m_value;
  const BoundResult weighted = separable_bound_m(6, 1e-10, 0.7);
  CHECK(weighted.m_value <= 0.7 * md + 1e-9);
  CHECK(weighted.m_value >= 0.7 - 1e-9); // Z eigenstate reaches p * 1
}

TEST_CASE("direct_state_oracle_m: pinned values and cross-check") {
  CHECK(std::abs(direct_state_oracle_m(2, 8, 7) - 1.0) < 1e-6);
  CHECK(std::abs(direct_state_oracle_m(3, 8, 7) - 1.0) < 1e-6);
  for (int d : {4, 5, 7, 10}) {
    const double oracle = direct_state_oracle_m(d, 32, 0x5eed);
    const double bound = separable_bound_m(d).m_value;
    CHECK(oracle <= bound + 1e-6);
    CHECK(std::abs(oracle - bound) < 1e-5);
  }
}

TEST_CASE("mub_uncertainty_lhs: pinned states and Monte Carlo ceiling") {
  ComplexVector e0 = ComplexVector::Zero(2);
  e0(0) = 1.0;
  CHECK(mub_uncertainty_lhs(QuditState::pure(2, 1, e0)) == doctest::Approx(1.5));

  for (int d : {2, 3, 5}) {
    const QuditState mixed =
        QuditState::density(d, 1, ComplexMatrix::Identity(d, d) / double(d));
    CHECK(mub_uncertainty_lhs(mixed) == doctest::Approx(2.0 / d).epsilon(1e-12));
  }

  const int d = 5;
  SplitMix64 rng(99);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const double lhs = mub_uncertainty_lhs(random_pure_state(d, 1, rng));
    worst = std::max(worst, lhs);
  }
  CHECK(worst <= 1.0 + 1.0 / d + 1e-10);

  CHECK_THROWS_AS(mub_uncertainty_lhs(mes(2)), std::invalid_argument);
}

TEST_CASE("unitary_amplitude_pair: eigenstates and polygon membership") {
  ComplexVector e0 = ComplexVector::Zero(4);
  e0(0) = 1.0;
  const auto [z0, x0] = unitary_amplitude_pair(QuditState::pure(4, 1, e0));
  CHECK(std::abs(z0 - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(x0) < 1e-12);

  const auto [zb, xb] = unitary_amplitude_pair(x_basis_state(4, 0));
  CHECK(std::abs(zb) < 1e-12);
  CHECK(std::abs(xb - Complex(1, 0)) < 1e-12);

  const auto [zm, xm] = unitary_amplitude_pair(
      QuditState::density(5, 1, ComplexMatrix::Identity(5, 5) / 5.0));
  CHECK(std::abs(zm) < 1e-12);
  CHECK(std::abs(xm) < 1e-12);

  // Both amplitudes stay inside the regular d-gon inscribed in the unit
  // circle: Re(z e^{-i w (j+1/2)}) <= cos(w/2) for every edge j.
  for (int d : {3, 5}) {
    SplitMix64 rng(123);
    const double w = omega(d);
    for (int trial = 0; trial < 500; ++trial) {
      const auto [z, x] = unitary_amplitude_pair(random_pure_state(d, 1, rng));
      for (int j = 0; j < d; ++j) {
        const Complex edge_normal = phase(-w * (j + 0.5));
        CHECK((z * edge_normal).real() <= std::cos(w / 2) + 1e-12);
        CHECK((x * edge_normal).real() <= std::cos(w / 2) + 1e-12);
      }
    }
  }
}

TEST_CASE("uncertainty relation holds for random states and angles") {
  for (int d : {2, 3, 5, 8}) {
    SplitMix64 rng(d * 1000 + 1);
    for (int ti = 0; ti < 12; ++ti) {
      const double theta = (kPi / 2) * ti / 11.0;
      const double norm = operator_norm(chi_theta(d, theta));
      for (int trial = 0; trial < 200; ++trial) {
        const auto [z, x] = unitary_amplitude_pair(random_pure_state(d, 1, rng));
        const double lhs = std::abs(z) * std::cos(theta) + std::abs(x) * std::sin(theta);
        CHECK(lhs <= norm + 1e-9);
      }
    }
  }
}

TEST_CASE("theta symmetry under Fourier exchange of the two operators") {
  for (int d : {2, 4, 7}) {
    const ComplexMatrix z = pauli_z(d);
    const ComplexMatrix x = pauli_x(d);
    SplitMix64 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
      const double theta = (kPi / 2) * rng.next_double();
      const ComplexMatrix swapped =
          0.5 * (std::cos(theta) * (x + x.adjoint()) + std::sin(theta) * (z + z.adjoint()));
      CHECK(std::abs(operator_norm(swapped) - operator_norm(chi_theta(d, kPi / 2 - theta))) <
            1e-9);
      CHECK(std::abs(operator_norm(chi_theta(d, theta)) -
                     operator_norm(chi_theta(d, kPi / 2 - theta))) < 1e-9);
    }
  }
}

TEST_CASE("fourier_distributions: normalization") {
  SplitMix64 rng(77);
  const auto dist = fourier_distributions(random_pure_state(6, 1, rng));
  CHECK(dist.p.sum() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(dist.p_bar.sum() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(dist.p.minCoeff() >= -1e-12);
  CHECK(dist.p_bar.minCoeff() >= -1e-12);
}
