#include "qwitness/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwitness/linalg.hpp"
#include "qwitness/rng.hpp"

namespace qwitness {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr int kGridPoints = 181;        // coarse scan over [0, pi/2]
constexpr int kGoldenIterationCap = 200;

void check_single_qudit(const QuditState& state, const char* where) {
  if (state.parties() != 1)
    throw std::invalid_argument(std::string(where) + ": single-qudit state required");
}

}  // namespace

ComplexMatrix chi_theta(int d, double theta, std::optional<double> weight) {
  if (theta < -1e-12 || theta > kHalfPi + 1e-12)
    throw std::invalid_argument("chi_theta: theta must lie in [0, pi/2]");
  double wz = 1.0;
  double wx = 1.0;
  if (weight) {
    if (*weight < 0.0 || *weight > 1.0)
      throw std::invalid_argument("chi_theta: weight must lie in [0, 1]");
    // Rescaling argument for the weighted scan: with (a, b) =
    // (sqrt(p) cos t, sqrt(1-p) sin t) and r = hypot(a, b), the pair equals
    // r (cos t', sin t') for t' = atan2(b, a), and the weighted operator is
    // r * chi_{t'}. The unweighted norm bound at t' therefore rescales to
    // a|<Z>| + b|<X>| <= ||weighted chi_t||, and maximizing over t in
    // [0, pi/2] sweeps all t', so the identical theta scan yields the
    // weighted bound max_phi [ p|<Z>|^2 + (1-p)|<X>|^2 ].
    wz = std::sqrt(*weight);
    wx = std::sqrt(1.0 - *weight);
  }
  const ComplexMatrix z = pauli_z(d);
  const ComplexMatrix x = pauli_x(d);
  return 0.5 * (wz * std::cos(theta) * (z + z.adjoint()) +
                wx * std::sin(theta) * (x + x.adjoint()));
}

BoundResult separable_bound_m(int d, double tol, std::optional<double> weight) {
  if (d < 2) throw std::invalid_argument("separable_bound_m: dimension must be >= 2");
  if (tol <= 0.0) throw std::invalid_argument("separable_bound_m: tol must be positive");

  int evals = 0;
  const auto norm_at = [&](double theta) {
    ++evals;
    return operator_norm(chi_theta(d, theta, weight));
  };

  // Coarse grid; ties keep the smallest theta.
  double best_theta = 0.0;
  double best_norm = -1.0;
  int best_index = 0;
  for (int i = 0; i < kGridPoints; ++i) {
    const double theta = kHalfPi * i / (kGridPoints - 1);
    const double value = norm_at(theta);
    if (value > best_norm) {
      best_norm = value;
      best_theta = theta;
      best_index = i;
    }
  }

  // Golden-section refinement around the best grid point.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = kHalfPi * std::max(best_index - 1, 0) / (kGridPoints - 1);
  double b = kHalfPi * std::min(best_index + 1, kGridPoints - 1) / (kGridPoints - 1);
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = norm_at(x1);
  double f2 = norm_at(x2);
  const auto track = [&](double theta, double value) {
    if (value > best_norm) {
      best_norm = value;
      best_theta = theta;
    }
  };
  track(x1, f1);
  track(x2, f2);
  int iter = 0;
  while (b - a > tol && iter < kGoldenIterationCap) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = norm_at(x1);
      track(x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = norm_at(x2);
      track(x2, f2);
    }
    ++iter;
  }
  if (b - a > tol)
    throw std::runtime_error(
        "separable_bound_m: theta refinement stalled after " + std::to_string(iter) +
        " iterations (bracket " + std::to_string(b - a) + " > tol)");

  // The norm is theta-independent at d=2 and has its unique interior maximum
  // at pi/4 for d >= 4; when pi/4 ties the best value, report it.
  const double quarter = std::numbers::pi / 4.0;
  const double f_quarter = norm_at(quarter);
  double theta_star = best_theta;
  double norm_star = best_norm;
  if (f_quarter >= best_norm - 1e-12) {
    theta_star = quarter;
    norm_star = f_quarter;
  }

  const ComplexMatrix chi = chi_theta(d, theta_star, weight);
  const EigenDecomposition eig = hermitian_eigs(chi);
  Eigen::Index top = 0;
  double top_abs = std::abs(eig.eigenvalues(0));
  for (Eigen::Index i = 1; i < eig.eigenvalues.size(); ++i) {
    if (std::abs(eig.eigenvalues(i)) > top_abs) {
      top_abs = std::abs(eig.eigenvalues(i));
      top = i;
    }
  }
  QuditState optimizer = QuditState::pure(d, 1, eig.eigenvectors.col(top));

  return BoundResult{d,      norm_star * norm_star, theta_star,
                     optimizer, evals,              b - a};
}

namespace {

// |<Z>|^2 + |<X>|^2 for the (unnormalized) coordinates x = (Re psi, Im psi).
// Z is diagonal and X a cyclic shift, so both expectations cost O(d).
double amplitude_objective(const std::vector<double>& x, int d, double w) {
  double n2 = 0.0;
  for (double v : x) n2 += v * v;
  if (n2 < 1e-300) return 0.0;
  Complex z_sum{0.0, 0.0};
  Complex x_sum{0.0, 0.0};
  for (int j = 0; j < d; ++j) {
    const double re = x[j];
    const double im = x[d + j];
    z_sum += (re * re + im * im) * phase(w * j);
    const int jn = (j + 1) % d;
    // conj(psi_{j+1}) * psi_j
    const Complex prod(x[jn] * re + x[d + jn] * im, x[jn] * im - x[d + jn] * re);
    x_sum += prod;
  }
  return (std::norm(z_sum) + std::norm(x_sum)) / (n2 * n2);
}

}  // namespace

double direct_state_oracle_m(int d, int restarts, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("direct_state_oracle_m: dimension must be >= 2");
  if (restarts < 1) throw std::invalid_argument("direct_state_oracle_m: restarts must be >= 1");

  const double w = omega(d);
  const int ncoord = 2 * d;
  const double fd_step = 1e-6;
  const int iteration_cap = 800;

  SplitMix64 root(seed);
  double best = 0.0;
  for (int r = 0; r < restarts; ++r) {
    SplitMix64 rng = root.split();
    std::vector<double> x(ncoord);
    for (double& v : x) v = 2.0 * rng.next_double() - 1.0;

    double fx = amplitude_objective(x, d, w);
    double step = 0.1;
    std::vector<double> grad(ncoord);
    std::vector<double> trial(ncoord);
    for (int iter = 0; iter < iteration_cap; ++iter) {
      double gnorm2 = 0.0;
      for (int i = 0; i < ncoord; ++i) {
        const double keep = x[i];
        x[i] = keep + fd_step;
        const double fp = amplitude_objective(x, d, w);
        x[i] = keep - fd_step;
        const double fm = amplitude_objective(x, d, w);
        x[i] = keep;
        grad[i] = (fp - fm) / (2.0 * fd_step);
        gnorm2 += grad[i] * grad[i];
      }
      const double gnorm = std::sqrt(gnorm2);
      if (gnorm < 1e-11) break;

      bool improved = false;
      while (step > 1e-12) {
        for (int i = 0; i < ncoord; ++i) trial[i] = x[i] + (step / gnorm) * grad[i];
        const double ft = amplitude_objective(trial, d, w);
        if (ft > fx + 1e-15) {
          x = trial;
          fx = ft;
          step = std::min(step * 1.6, 0.5);
          improved = true;
          break;
        }
        step *= 0.5;
      }
      if (!improved) break;
    }
    if (fx > best) best = fx;
  }
  return best;
}

double mub_uncertainty_lhs(const QuditState& state) {
  check_single_qudit(state, "mub_uncertainty_lhs");
  const RealVector p = basis_probabilities(state, BasisLabel::ZBasis);
  const RealVector p_bar = basis_probabilities(state, BasisLabel::XBasis);
  return p.squaredNorm() + p_bar.squaredNorm();
}

std::pair<Complex, Complex> unitary_amplitude_pair(const QuditState& state) {
  check_single_qudit(state, "unitary_amplitude_pair");
  return {state.expectation(pauli_z(state.d())),
          state.expectation(pauli_x(state.d()))};
}

FourierDistributionPair fourier_distributions(const QuditState& state) {
  check_single_qudit(state, "fourier_distributions");
  return {basis_probabilities(state, BasisLabel::ZBasis),
          basis_probabilities(state, BasisLabel::XBasis)};
}

}  // namespace qwitness
