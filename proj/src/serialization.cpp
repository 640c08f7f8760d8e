#include "qwitness/serialization.hpp"

#include <fstream>
#include <stdexcept>
#include <vector>

namespace qwitness {

using nlohmann::json;

nlohmann::json state_to_json(const QuditState& state) {
  std::vector<double> re;
  std::vector<double> im;
  if (state.is_pure()) {
    const ComplexVector& v = state.amplitudes();
    re.reserve(v.size());
    im.reserve(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      re.push_back(v(i).real());
      im.push_back(v(i).imag());
    }
  } else {
    const ComplexMatrix& rho = state.density_ref();
    re.reserve(rho.size());
    im.reserve(rho.size());
    for (Eigen::Index r = 0; r < rho.rows(); ++r)
      for (Eigen::Index c = 0; c < rho.cols(); ++c) {
        re.push_back(rho(r, c).real());
        im.push_back(rho(r, c).imag());
      }
  }
  return json{{"d", state.d()},
              {"parties", state.parties()},
              {"kind", state.is_pure() ? "pure" : "density"},
              {"re", re},
              {"im", im}};
}

QuditState state_from_json(const nlohmann::json& j) {
  const int d = j.at("d").get<int>();
  const int parties = j.at("parties").get<int>();
  const std::string kind = j.at("kind").get<std::string>();
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != im.size())
    throw std::invalid_argument("state json: re/im length mismatch");

  if (kind == "pure") {
    ComplexVector v(static_cast<Eigen::Index>(re.size()));
    for (std::size_t i = 0; i < re.size(); ++i)
      v(static_cast<Eigen::Index>(i)) = Complex(re[i], im[i]);
    return QuditState::pure(d, parties, std::move(v));
  }
  if (kind == "density") {
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(double(re.size()))));
    if (static_cast<std::size_t>(n) * n != re.size())
      throw std::invalid_argument("state json: density entry count is not a square");
    ComplexMatrix rho(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) {
        const std::size_t idx = static_cast<std::size_t>(r) * n + c;
        rho(r, c) = Complex(re[idx], im[idx]);
      }
    return QuditState::density(d, parties, std::move(rho));
  }
  throw std::invalid_argument("state json: kind must be 'pure' or 'density'");
}

QuditState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file '" + path + "'");
  json j;
  in >> j;
  return state_from_json(j);
}

void save_state(const std::string& path, const QuditState& state) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write state file '" + path + "'");
  out << state_to_json(state).dump(2) << "\n";
}

nlohmann::json shot_record_to_json(const ShotRecord& record) {
  std::vector<std::int64_t> counts;
  counts.reserve(record.counts.size());
  for (int j = 0; j < record.d; ++j)
    for (int k = 0; k < record.d; ++k) counts.push_back(record.counts(j, k));
  return json{{"d", record.d},
              {"basis", basis_name(record.basis)},
              {"shots", record.shots},
              {"seed", record.seed},
              {"counts", counts}};
}

ShotRecord shot_record_from_json(const nlohmann::json& j) {
  const int d = j.at("d").get<int>();
  const auto counts = j.at("counts").get<std::vector<std::int64_t>>();
  if (counts.size() != static_cast<std::size_t>(d) * d)
    throw std::invalid_argument("shot record json: counts length must be d^2");
  ShotRecord record{d, parse_basis(j.at("basis").get<std::string>()),
                    j.at("shots").get<std::int64_t>(), CountMatrix::Zero(d, d),
                    j.at("seed").get<std::uint64_t>()};
  std::int64_t total = 0;
  for (int jj = 0; jj < d; ++jj)
    for (int k = 0; k < d; ++k) {
      record.counts(jj, k) = counts[static_cast<std::size_t>(jj) * d + k];
      total += record.counts(jj, k);
    }
  if (total != record.shots)
    throw std::invalid_argument("shot record json: counts do not sum to shots");
  return record;
}

nlohmann::json witness_report_to_json(const WitnessReport& report) {
  return json{{"d", report.d},
              {"c_value", report.c_value},
              {"r_value", report.r_value},
              {"c_bound", report.c_bound},
              {"r_bound", report.r_bound},
              {"c_margin", report.c_margin},
              {"r_margin", report.r_margin},
              {"c_violation", report.c_violation},
              {"r_violation", report.r_violation},
              {"mes_fraction_lb", report.mes_fraction_lb},
              {"mes_fraction_lb_clamped", report.mes_fraction_lb_clamped},
              {"schmidt_lb", report.schmidt_lb}};
}

nlohmann::json bound_result_to_json(const BoundResult& result) {
  return json{{"d", result.d},
              {"m_value", result.m_value},
              {"theta_star", result.theta_star},
              {"iterations", result.iterations},
              {"residual", result.residual},
              {"optimizer_state", state_to_json(result.optimizer_state)}};
}

nlohmann::json threshold_result_to_json(const ThresholdResult& result) {
  json j{{"d", result.d},
         {"family", family_name(result.family)},
         {"witness", witness_name(result.witness)},
         {"method", method_name(result.method)}};
  if (result.p_star)
    j["p_star"] = *result.p_star;
  else
    j["p_star"] = nullptr;
  return j;
}

nlohmann::json estimate_report_to_json(const EstimateReport& report) {
  return json{{"c_hat", report.c_hat},
              {"c_se", report.c_se},
              {"r_hat", report.r_hat},
              {"r_se", report.r_se},
              {"shots_per_setting", report.shots_per_setting}};
}

nlohmann::json certification_to_json(const ShotCertification& cert) {
  return json{{"point", witness_report_to_json(cert.point)},
              {"c_se", cert.c_se},
              {"r_se", cert.r_se},
              {"sigmas", cert.sigmas},
              {"c_certified", cert.c_certified},
              {"r_certified", cert.r_certified},
              {"mes_fraction_lb_confident", cert.mes_fraction_lb_confident},
              {"schmidt_lb_confident", cert.schmidt_lb_confident}};
}

nlohmann::json pair_test_to_json(const PairTest& test) {
  return json{{"value", test.value}, {"violates", test.violates}};
}

std::string basis_name(BasisLabel basis) {
  return basis == BasisLabel::ZBasis ? "Z" : "X";
}

BasisLabel parse_basis(const std::string& name) {
  if (name == "Z") return BasisLabel::ZBasis;
  if (name == "X") return BasisLabel::XBasis;
  throw std::invalid_argument("unknown basis '" + name + "' (Z|X)");
}

}  // namespace qwitness
