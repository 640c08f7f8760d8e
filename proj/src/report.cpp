#include "qwitness/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace qwitness {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string join_distribution(const RealVector& dist) {
  std::string out = "\"";
  for (Eigen::Index i = 0; i < dist.size(); ++i) {
    if (i > 0) out += ";";
    out += format_double(dist(i));
  }
  out += "\"";
  return out;
}

void check_range(int d_min, int d_max) {
  if (d_min < 2 || d_min > d_max)
    throw std::invalid_argument("figure range: need 2 <= dmin <= dmax");
}

}  // namespace

std::vector<Figure1Row> figure1_rows(int d_min, int d_max, double tol) {
  check_range(d_min, d_max);
  std::vector<Figure1Row> rows;
  rows.reserve(static_cast<std::size_t>(d_max - d_min + 1));
  for (int d = d_min; d <= d_max; ++d) {
    const BoundResult bound = separable_bound_m(d, tol);
    const FourierDistributionPair dist = fourier_distributions(bound.optimizer_state);
    rows.push_back({d, bound.m_value, bound.theta_star, dist.p, dist.p_bar});
  }
  return rows;
}

std::vector<Figure2Row> figure2_rows(int d_min, int d_max) {
  check_range(d_min, d_max);
  if (static_cast<std::size_t>(d_max) * d_max > max_dim())
    throw std::length_error("figure range: d_max^2 exceeds the size cap");
  std::vector<Figure2Row> rows;
  rows.reserve(static_cast<std::size_t>(d_max - d_min + 1));
  for (int d = d_min; d <= d_max; ++d) {
    const double m_value = separable_bound_m(d).m_value;
    const auto [x_region, y_region] = exclusive_regions(d, m_value);
    rows.push_back({d, m_value, threshold_row(d, m_value), x_region, y_region});
  }
  return rows;
}

std::string figure1_csv(int d_min, int d_max, double tol) {
  const auto rows = figure1_rows(d_min, d_max, tol);
  std::string out = "# schema=qwitness/1 subcommand=figure which=1 dmin=" +
                    std::to_string(d_min) + " dmax=" + std::to_string(d_max) +
                    " tol=" + format_double(tol) + " format=csv\n";
  out += "d,m_value,theta_star,p_dist,pbar_dist\n";
  for (const auto& row : rows) {
    out += std::to_string(row.d) + "," + format_double(row.m_value) + "," +
           format_double(row.theta_star) + "," + join_distribution(row.p) + "," +
           join_distribution(row.p_bar) + "\n";
  }
  return out;
}

std::string figure2_csv(int d_min, int d_max) {
  const auto rows = figure2_rows(d_min, d_max);
  std::string out = "# schema=qwitness/1 subcommand=figure which=2 dmin=" +
                    std::to_string(d_min) + " dmax=" + std::to_string(d_max) +
                    " format=csv\n";
  out += "d,family,witness,p_star,method,x_lo,x_hi,y_lo,y_hi\n";
  for (const auto& row : rows) {
    const std::string x_lo = row.x_region ? format_double(row.x_region->lo) : "";
    const std::string x_hi = row.x_region ? format_double(row.x_region->hi) : "";
    const std::string y_lo = row.y_region ? format_double(row.y_region->lo) : "";
    const std::string y_hi = row.y_region ? format_double(row.y_region->hi) : "";
    for (const auto& cell : row.cells) {
      out += std::to_string(cell.d) + "," + family_name(cell.family) + "," +
             witness_name(cell.witness) + "," +
             (cell.p_star ? format_double(*cell.p_star) : "") + "," +
             method_name(cell.method) + "," + x_lo + "," + x_hi + "," + y_lo +
             "," + y_hi + "\n";
    }
  }
  return out;
}

}  // namespace qwitness
