#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwitness/bounds.hpp"
#include "qwitness/noise.hpp"

namespace qwitness {

// Locale-independent float formatting with 12 significant digits ('.' decimal).
std::string format_double(double v);

struct Figure1Row {
  int d;
  double m_value;
  double theta_star;
  RealVector p;     // optimizer-state Z distribution
  RealVector p_bar; // optimizer-state X distribution
};

struct Figure2Row {
  int d;
  double m_value;
  std::vector<ThresholdResult> cells; // six, ordered (family, witness)
  std::optional<PInterval> x_region;
  std::optional<PInterval> y_region;
};

std::vector<Figure1Row> figure1_rows(int d_min, int d_max, double tol = 1e-10);
std::vector<Figure2Row> figure2_rows(int d_min, int d_max);

// Full CSV payloads, config comment line included. Distribution columns are
// quoted semicolon-joined lists.
std::string figure1_csv(int d_min, int d_max, double tol = 1e-10);
std::string figure2_csv(int d_min, int d_max);

}  // namespace qwitness
