#include "qwitness/measure_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwitness/rng.hpp"

namespace qwitness {

std::vector<std::int64_t> sample_from_probabilities(const RealVector& probs,
                                                    std::int64_t shots,
                                                    std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
  const Eigen::Index n = probs.size();
  if (n == 0) throw std::invalid_argument("sample: empty probability vector");

  std::vector<double> clamped(static_cast<std::size_t>(n));
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double p = probs(i);
    if (p < 0.0) {
      if (p < -1e-9)
        throw std::invalid_argument("sample: probability " + std::to_string(p) +
                                    " below zero");
      p = 0.0;
    }
    clamped[static_cast<std::size_t>(i)] = p;
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("sample: probabilities sum to " + std::to_string(total) +
                                " (deficit beyond 1e-9)");

  std::vector<double> cum(clamped.size());
  double running = 0.0;
  for (std::size_t i = 0; i < clamped.size(); ++i) {
    running += clamped[i] / total;
    cum[i] = running;
  }
  cum.back() = 1.0;

  std::vector<std::int64_t> counts(clamped.size(), 0);
  SplitMix64 rng(seed);
  for (std::int64_t s = 0; s < shots; ++s) {
    const double u = rng.next_double();
    const auto it = std::upper_bound(cum.begin(), cum.end(), u);
    const std::size_t idx = std::min(static_cast<std::size_t>(it - cum.begin()),
                                     cum.size() - 1);
    ++counts[idx];
  }
  return counts;
}

ShotRecord sample_joint_basis(const QuditState& rho, BasisLabel basis,
                              std::int64_t shots, std::uint64_t seed) {
  if (rho.parties() != 2)
    throw std::invalid_argument("sample_joint_basis: two-party state required");
  const int d = rho.d();
  const RealVector probs = basis_probabilities(rho, basis);
  const auto flat = sample_from_probabilities(probs, shots, seed);

  ShotRecord record{d, basis, shots, CountMatrix::Zero(d, d), seed};
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      record.counts(j, k) = flat[static_cast<std::size_t>(j) * d + k];
  return record;
}

namespace {

void check_record_pair(const ShotRecord& z, const ShotRecord& x) {
  if (z.d != x.d)
    throw std::invalid_argument("estimate: records have mismatched dimensions");
  if (z.basis != BasisLabel::ZBasis || x.basis != BasisLabel::XBasis)
    throw std::invalid_argument("estimate: need one Z-basis and one X-basis record");
  if (z.shots < 1 || x.shots < 1)
    throw std::invalid_argument("estimate: records must contain shots");
}

}  // namespace

std::pair<double, double> estimate_c(const ShotRecord& z, const ShotRecord& x) {
  check_record_pair(z, x);
  const int d = z.d;
  std::int64_t z_hits = 0;
  std::int64_t x_hits = 0;
  for (int j = 0; j < d; ++j) {
    z_hits += z.counts(j, j);
    x_hits += x.counts(j, (d - j) % d);
  }
  const double pz = static_cast<double>(z_hits) / static_cast<double>(z.shots);
  const double px = static_cast<double>(x_hits) / static_cast<double>(x.shots);
  const double se = std::sqrt(pz * (1.0 - pz) / static_cast<double>(z.shots) +
                              px * (1.0 - px) / static_cast<double>(x.shots));
  return {pz + px, se};
}

std::pair<double, double> estimate_r(const ShotRecord& z, const ShotRecord& x) {
  check_record_pair(z, x);
  const int d = z.d;
  const double w = omega(d);

  const auto setting_stats = [d](const ShotRecord& rec, auto score) {
    double mean = 0.0;
    double second = 0.0;
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const double frac = static_cast<double>(rec.counts(j, k)) /
                            static_cast<double>(rec.shots);
        const double s = score(j, k);
        mean += frac * s;
        second += frac * s * s;
      }
    const double var = std::max(second - mean * mean, 0.0) /
                       static_cast<double>(rec.shots);
    return std::pair<double, double>{mean, var};
  };

  const auto [mean_z, var_z] =
      setting_stats(z, [w](int j, int k) { return std::cos(w * (j - k)); });
  const auto [mean_x, var_x] =
      setting_stats(x, [w](int j, int k) { return std::cos(w * (j + k)); });
  return {mean_z + mean_x, std::sqrt(var_z + var_x)};
}

EstimateReport estimate_report(const ShotRecord& z, const ShotRecord& x) {
  const auto [c_hat, c_se] = estimate_c(z, x);
  const auto [r_hat, r_se] = estimate_r(z, x);
  return {c_hat, c_se, r_hat, r_se, std::min(z.shots, x.shots)};
}

ShotCertification certify_from_shots(const ShotRecord& z, const ShotRecord& x,
                                     const BoundResult& bound, double sigmas) {
  check_record_pair(z, x);
  if (sigmas <= 0.0)
    throw std::invalid_argument("certify_from_shots: sigmas must be positive");
  if (z.d != bound.d)
    throw std::invalid_argument("certify_from_shots: record dimension does not match bound");

  const int d = z.d;
  const auto [c_hat, c_se] = estimate_c(z, x);
  const auto [r_hat, r_se] = estimate_r(z, x);

  ShotCertification cert{
      make_witness_report(d, c_hat, r_hat, bound.m_value),
      c_se,
      r_se,
      sigmas,
      false,
      false,
      0.0,
      1,
  };
  cert.c_certified = cert.point.c_margin > sigmas * c_se;
  cert.r_certified = cert.point.r_margin > sigmas * r_se;
  cert.mes_fraction_lb_confident =
      mes_fraction_lower_bound(c_hat - sigmas * c_se, r_hat - sigmas * r_se, d);
  cert.schmidt_lb_confident = schmidt_lb_from_fraction(cert.mes_fraction_lb_confident, d);
  return cert;
}

}  // namespace qwitness
