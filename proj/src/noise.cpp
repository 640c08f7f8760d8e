#include "qwitness/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qwitness/bounds.hpp"
#include "qwitness/witnesses.hpp"

namespace qwitness {

namespace {

void check_dimension(int d) {
  if (d < 2) throw std::invalid_argument("noise: dimension must be >= 2");
}

// Dense second mixture component (the p = 0 endpoint).
ComplexMatrix noise_component(int d, NoiseFamily family) {
  const Eigen::Index dim = static_cast<Eigen::Index>(d) * d;
  switch (family) {
    case NoiseFamily::PsiHalfShift: {
      const ComplexVector v = bell_vector(d, d / 2, d / 2);
      return v * v.adjoint();
    }
    case NoiseFamily::PhiUnitShift: {
      const ComplexVector v = bell_vector(d, 1, 0);
      return v * v.adjoint();
    }
    case NoiseFamily::Isotropic:
      return ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
  }
  throw std::logic_error("noise_component: unknown family");
}

ComplexMatrix witness_operator(int d, WitnessKind witness) {
  return witness == WitnessKind::Cd ? correlation_operator_c(d)
                                    : amplitude_operator_r(d);
}

double witness_bound(int d, WitnessKind witness, const std::optional<double>& m_value) {
  if (witness == WitnessKind::Cd) return 1.0 + 1.0 / d;
  if (!m_value)
    throw std::invalid_argument("threshold: m_value is required for the Rd witness");
  return *m_value;
}

}  // namespace

QuditState noisy_state(int d, NoiseFamily family, double p) {
  check_dimension(d);
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("noisy_state: p must lie in [0, 1]");
  const ComplexVector phi = mes(d).amplitudes();
  const ComplexMatrix rho = p * (phi * phi.adjoint()) + (1.0 - p) * noise_component(d, family);
  return QuditState::density(d, 2, rho);
}

ThresholdResult threshold(int d, NoiseFamily family, WitnessKind witness,
                          std::optional<double> m_value) {
  check_dimension(d);
  const double bound = witness_bound(d, witness, m_value);
  const RealMatrix coeffs = bell_coefficients(witness_operator(d, witness), d).coeffs;

  // <W>(p) = p*e1 + (1-p)*e0 with e1 the Phi_00 coefficient and e0 the
  // second-component expectation, both read off the Bell diagonal.
  const double e1 = coeffs(0, 0);
  double e0 = 0.0;
  switch (family) {
    case NoiseFamily::PsiHalfShift:
      e0 = coeffs(d / 2, d / 2);
      break;
    case NoiseFamily::PhiUnitShift:
      e0 = coeffs(1, 0);
      break;
    case NoiseFamily::Isotropic:
      e0 = coeffs.sum() / (static_cast<double>(d) * d);
      break;
  }

  ThresholdResult result{d, family, witness, std::nullopt, ThresholdMethod::ClosedForm};
  const double slope = e1 - e0;
  if (slope <= 0.0) {
    if (e0 > bound) result.p_star = 0.0;
    return result;
  }
  const double p = (bound - e0) / slope;
  if (p <= 1.0) result.p_star = std::max(p, 0.0);
  return result;
}

ThresholdResult threshold_bisection(int d, NoiseFamily family, WitnessKind witness,
                                    std::optional<double> m_value) {
  check_dimension(d);
  const double bound = witness_bound(d, witness, m_value);
  const ComplexMatrix w = witness_operator(d, witness);
  const ComplexVector phi = mes(d).amplitudes();
  const ComplexMatrix pure = phi * phi.adjoint();
  const ComplexMatrix component = noise_component(d, family);

  const auto margin = [&](double p) {
    const ComplexMatrix rho = p * pure + (1.0 - p) * component;
    return w.cwiseProduct(rho.transpose()).sum().real() - bound;
  };

  ThresholdResult result{d, family, witness, std::nullopt, ThresholdMethod::Bisection};
  if (margin(0.0) > 0.0) {
    result.p_star = 0.0;
    return result;
  }
  if (margin(1.0) <= 0.0) return result;
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (margin(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  result.p_star = std::min(std::max(hi, 0.0), 1.0);
  return result;
}

std::pair<std::optional<PInterval>, std::optional<PInterval>>
exclusive_regions(int d, double m_value) {
  check_dimension(d);
  const auto psi_c = threshold(d, NoiseFamily::PsiHalfShift, WitnessKind::Cd);
  const auto psi_r = threshold(d, NoiseFamily::PsiHalfShift, WitnessKind::Rd, m_value);
  const auto phi_c = threshold(d, NoiseFamily::PhiUnitShift, WitnessKind::Cd);
  const auto phi_r = threshold(d, NoiseFamily::PhiUnitShift, WitnessKind::Rd, m_value);

  std::optional<PInterval> x_region;
  if (psi_c.p_star) {
    const double hi = psi_r.p_star.value_or(1.0);
    if (hi - *psi_c.p_star > EPS_DECIDE) x_region = PInterval{*psi_c.p_star, hi};
  }
  std::optional<PInterval> y_region;
  if (phi_r.p_star) {
    const double hi = phi_c.p_star.value_or(1.0);
    if (hi - *phi_r.p_star > EPS_DECIDE) y_region = PInterval{*phi_r.p_star, hi};
  }
  return {x_region, y_region};
}

std::vector<ThresholdResult> threshold_row(int d, double m_value) {
  std::vector<ThresholdResult> row;
  row.reserve(6);
  for (NoiseFamily family : {NoiseFamily::PsiHalfShift, NoiseFamily::PhiUnitShift,
                             NoiseFamily::Isotropic}) {
    for (WitnessKind witness : {WitnessKind::Cd, WitnessKind::Rd}) {
      const auto closed = threshold(d, family, witness, m_value);
      const auto bisect = threshold_bisection(d, family, witness, m_value);
      if (closed.p_star.has_value() != bisect.p_star.has_value())
        throw std::runtime_error("threshold_row: closed form and bisection disagree "
                                 "on detectability at d=" + std::to_string(d));
      if (closed.p_star &&
          std::abs(*closed.p_star - *bisect.p_star) > 1e-8)
        throw std::runtime_error("threshold_row: closed form and bisection differ by " +
                                 std::to_string(std::abs(*closed.p_star - *bisect.p_star)) +
                                 " at d=" + std::to_string(d));
      row.push_back(closed);
    }
  }
  return row;
}

std::vector<ThresholdResult> figure2_scan(int d_min, int d_max) {
  if (d_min < 2 || d_min > d_max)
    throw std::invalid_argument("figure2_scan: need 2 <= d_min <= d_max");
  if (static_cast<std::size_t>(d_max) * d_max > max_dim())
    throw std::length_error("figure2_scan: d_max^2 exceeds the size cap");
  std::vector<ThresholdResult> table;
  table.reserve(static_cast<std::size_t>(d_max - d_min + 1) * 6);
  for (int d = d_min; d <= d_max; ++d) {
    const double m_value = separable_bound_m(d).m_value;
    const auto row = threshold_row(d, m_value);
    table.insert(table.end(), row.begin(), row.end());
  }
  return table;
}

std::string family_name(NoiseFamily family) {
  switch (family) {
    case NoiseFamily::PsiHalfShift: return "psi";
    case NoiseFamily::PhiUnitShift: return "phi";
    case NoiseFamily::Isotropic: return "iso";
  }
  throw std::logic_error("family_name: unknown family");
}

NoiseFamily parse_family(const std::string& name) {
  if (name == "psi") return NoiseFamily::PsiHalfShift;
  if (name == "phi") return NoiseFamily::PhiUnitShift;
  if (name == "iso") return NoiseFamily::Isotropic;
  throw std::invalid_argument("unknown noise family '" + name + "' (psi|phi|iso)");
}

std::string witness_name(WitnessKind witness) {
  return witness == WitnessKind::Cd ? "c" : "r";
}

WitnessKind parse_witness(const std::string& name) {
  if (name == "c") return WitnessKind::Cd;
  if (name == "r") return WitnessKind::Rd;
  throw std::invalid_argument("unknown witness '" + name + "' (c|r)");
}

std::string method_name(ThresholdMethod method) {
  return method == ThresholdMethod::ClosedForm ? "closed_form" : "bisection";
}

}  // namespace qwitness
