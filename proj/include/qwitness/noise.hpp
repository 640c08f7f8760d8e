#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwitness/common.hpp"
#include "qwitness/qudit_ops.hpp"

namespace qwitness {

// The three noisy-MES families:
//   PsiHalfShift: p Phi_00 + (1-p) Phi_{floor(d/2),floor(d/2)}
//   PhiUnitShift: p Phi_00 + (1-p) Phi_{1,0}
//   Isotropic:    p Phi_00 + (1-p) I/d^2
enum class NoiseFamily { PsiHalfShift, PhiUnitShift, Isotropic };

enum class WitnessKind { Cd, Rd };

enum class ThresholdMethod { ClosedForm, Bisection };

struct ThresholdResult {
  int d;
  NoiseFamily family;
  WitnessKind witness;
  std::optional<double> p_star; // empty when the family never violates
  ThresholdMethod method;
};

// Half-open p-interval (lo, hi]; counted non-empty when hi - lo > EPS_DECIDE.
struct PInterval {
  double lo;
  double hi;
};

QuditState noisy_state(int d, NoiseFamily family, double p);

// Smallest p at which the witness expectation strictly exceeds its bound.
// Expectations are affine in p, so the root is solved in closed form from
// the Bell coefficients. m_value is required for the Rd witness.
ThresholdResult threshold(int d, NoiseFamily family, WitnessKind witness,
                          std::optional<double> m_value = std::nullopt);

// Independent route: bisection of the dense-matrix margin tr(W rho(p)) - bound,
// 60 fixed iterations.
ThresholdResult threshold_bisection(int d, NoiseFamily family, WitnessKind witness,
                                    std::optional<double> m_value = std::nullopt);

// X: p-range where psi(p) violates the C-witness but not the R-witness.
// Y: p-range where phi(p) violates the R-witness but not the C-witness.
// Both empty for d <= 3, both non-empty for d >= 4.
std::pair<std::optional<PInterval>, std::optional<PInterval>>
exclusive_regions(int d, double m_value);

// All six (family x witness) thresholds for one d; closed form cross-checked
// against bisection to 1e-8.
std::vector<ThresholdResult> threshold_row(int d, double m_value);

// threshold_row over d = d_min..d_max, ordered by (d, family, witness).
std::vector<ThresholdResult> figure2_scan(int d_min, int d_max);

std::string family_name(NoiseFamily family);
NoiseFamily parse_family(const std::string& name);
std::string witness_name(WitnessKind witness);
WitnessKind parse_witness(const std::string& name);
std::string method_name(ThresholdMethod method);

}  // namespace qwitness
