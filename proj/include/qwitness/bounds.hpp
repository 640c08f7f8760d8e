#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "qwitness/common.hpp"
#include "qwitness/qudit_ops.hpp"

namespace qwitness {

// Result of the separable-bound optimization M_d = (max_theta ||chi_theta||)^2.
struct BoundResult {
  int d;
  double m_value;
  double theta_star;          // radians in [0, pi/2]
  QuditState optimizer_state; // top eigenvector of chi at theta_star
  int iterations;             // total norm evaluations
  double residual;            // final theta bracket width
};

// Z- and X-basis outcome distributions of a single-qudit state.
struct FourierDistributionPair {
  RealVector p;
  RealVector p_bar;
};

// chi_theta = (1/2) [ (Z+Z^dag) cos(theta) + (X+X^dag) sin(theta) ].
// With a weight p in [0,1] the convex-sum variant is used instead:
// (1/2) [ sqrt(p) (Z+Z^dag) cos(theta) + sqrt(1-p) (X+X^dag) sin(theta) ].
ComplexMatrix chi_theta(int d, double theta,
                        std::optional<double> weight = std::nullopt);

// Maximizes ||chi_theta|| over theta in [0, pi/2]: 181-point coarse grid,
// golden-section refinement to tol, then m_value = norm^2.
BoundResult separable_bound_m(int d, double tol = 1e-10,
                              std::optional<double> weight = std::nullopt);

// Independent oracle: multi-start finite-difference ascent of
// |<Z>|^2 + |<X>|^2 over unit vectors in C^d. Best value found.
double direct_state_oracle_m(int d, int restarts = 32,
                             std::uint64_t seed = 0x5eed);

// sum_j (P^2(j) + Pbar^2(j)) for a single-qudit state; the mutually-unbiased
// pair obeys lhs <= 1 + 1/d.
double mub_uncertainty_lhs(const QuditState& state);

// (<Z>, <X>); each lies inside the regular d-gon inscribed in the unit circle.
std::pair<Complex, Complex> unitary_amplitude_pair(const QuditState& state);

FourierDistributionPair fourier_distributions(const QuditState& state);

}  // namespace qwitness
