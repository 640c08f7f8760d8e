#pragma once

#include <utility>

#include "qwitness/bounds.hpp"
#include "qwitness/common.hpp"
#include "qwitness/qudit_ops.hpp"

namespace qwitness {

struct WitnessReport {
  int d;
  double c_value;
  double r_value;
  double c_bound;  // 1 + 1/d
  double r_bound;  // M_d
  double c_margin; // value - bound
  double r_margin;
  bool c_violation; // margin > EPS_DECIDE
  bool r_violation;
  double mes_fraction_lb;         // raw max of the two fidelity bounds (may be < 0)
  double mes_fraction_lb_clamped; // clamped to [0, 1]
  int schmidt_lb;                 // in [1, d]
};

// Diagonal coefficients of an operator in the Bell basis, indexed (l, m).
struct BellCoefficients {
  int d;
  RealMatrix coeffs;
};

// C_d = sum_j ( |jj><jj| + |j-bar,-j-bar><j-bar,-j-bar| ). Trace 2d,
// spectrum in [0, 2].
ComplexMatrix correlation_operator_c(int d);

// R_d = (1/2)(Z(x)Z^dag + Z^dag(x)Z) + (1/2)(X(x)X + X^dag(x)X^dag).
ComplexMatrix amplitude_operator_r(int d);

// Same operator assembled from rank-one projections:
// sum_{j,k} cos[w(j-k)] |j><j|(x)|k><k| + cos[w(j+k)] |j-bar><j-bar|(x)|k-bar><k-bar|.
// This is the form a two-setting measurement estimates.
ComplexMatrix amplitude_operator_r_projector(int d);

// Requires op Bell-diagonal within 1e-9; coeffs[l,m] = <Phi_{l,m}|op|Phi_{l,m}>.
BellCoefficients bell_coefficients(const ComplexMatrix& op, int d);

WitnessReport make_witness_report(int d, double c_value, double r_value,
                                  double m_value);

// Evaluates <C_d> and <R_d> on a two-qudit state and derives margins,
// MES-fraction and Schmidt-number lower bounds.
WitnessReport evaluate_witnesses(const QuditState& rho, const BoundResult& bound);

// Minimum eigenvalues of (I + Phi_00 - C_d) and
// ((1-cos w) Phi_00 + (1+cos w) I - R_d); both must be >= -EPS_DECIDE.
std::pair<double, double> operator_upper_bound_check(int d);

// Per k = 1..d: C-threshold 1+(k-1)/d and R-threshold
// ((d-k+1) cos w + (d+k-1)) / d. Exceeding either strictly certifies
// Schmidt number >= k. m_value is carried for report context only and is
// validated to lie in [1, 2).
std::pair<RealVector, RealVector> schmidt_number_thresholds(int d, double m_value);

// max( c - 1, (r - (1+cos w)) / (1-cos w) ); raw, may be negative.
double mes_fraction_lower_bound(double c_value, double r_value, int d);

// Largest k in [1, d] with fraction > (k-1)/d + EPS_DECIDE.
int schmidt_lb_from_fraction(double fraction, int d);

}  // namespace qwitness
