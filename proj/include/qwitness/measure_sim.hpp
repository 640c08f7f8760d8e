#pragma once

#include <cstdint>
#include <utility>

#include "qwitness/bounds.hpp"
#include "qwitness/common.hpp"
#include "qwitness/qudit_ops.hpp"
#include "qwitness/witnesses.hpp"

namespace qwitness {

// Outcome counts of one joint measurement setting. counts(j, k) is the
// number of shots that produced outcome pair (j, k); reproducible exactly
// from (state, basis, shots, seed).
struct ShotRecord {
  int d;
  BasisLabel basis;
  std::int64_t shots;
  CountMatrix counts;
  std::uint64_t seed;
};

struct EstimateReport {
  double c_hat;
  double c_se;
  double r_hat;
  double r_se;
  std::int64_t shots_per_setting;
};

// Certification from finite-shot data: a violation is flagged only when
// estimate - bound > sigmas * SE. Fraction/Schmidt conclusions use the
// sigmas-deflated estimates.
struct ShotCertification {
  WitnessReport point; // point estimates read as exact values
  double c_se;
  double r_se;
  double sigmas;
  bool c_certified;
  bool r_certified;
  double mes_fraction_lb_confident;
  int schmidt_lb_confident;
};

// Multinomial draw via inverse-CDF over cumulative sums in fixed index
// order, driven by SplitMix64(seed). Throws when the probabilities deviate
// from 1 by more than 1e-9.
std::vector<std::int64_t> sample_from_probabilities(const RealVector& probs,
                                                    std::int64_t shots,
                                                    std::uint64_t seed);

// Joint two-qudit measurement in the Z- or X-basis; outcome (j,k) is drawn
// with probability <jk|rho|jk> resp. <j-bar k-bar|rho|j-bar k-bar>.
ShotRecord sample_joint_basis(const QuditState& rho, BasisLabel basis,
                              std::int64_t shots, std::uint64_t seed);

// c-hat = sum_j z[j,j]/Nz + sum_j x[j,-j mod d]/Nx; SE from the binomial
// variance of the two correlated-cell aggregates, combined in quadrature.
std::pair<double, double> estimate_c(const ShotRecord& z, const ShotRecord& x);

// r-hat = sum_jk (z[j,k]/Nz) cos[w(j-k)] + sum_jk (x[j,k]/Nx) cos[w(j+k)];
// SE from the empirical variance of the per-shot scores.
std::pair<double, double> estimate_r(const ShotRecord& z, const ShotRecord& x);

EstimateReport estimate_report(const ShotRecord& z, const ShotRecord& x);

ShotCertification certify_from_shots(const ShotRecord& z, const ShotRecord& x,
                                     const BoundResult& bound, double sigmas);

}  // namespace qwitness
