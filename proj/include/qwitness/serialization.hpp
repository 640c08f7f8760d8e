#pragma once

#include <string>

#include <json.hpp>

#include "qwitness/bounds.hpp"
#include "qwitness/measure_sim.hpp"
#include "qwitness/multipartite.hpp"
#include "qwitness/noise.hpp"
#include "qwitness/qudit_ops.hpp"
#include "qwitness/witnesses.hpp"

namespace qwitness {

// State schema: { "d", "parties", "kind": "pure"|"density", "re", "im" }
// with row-major density matrices.
nlohmann::json state_to_json(const QuditState& state);
QuditState state_from_json(const nlohmann::json& j);

QuditState load_state(const std::string& path);
void save_state(const std::string& path, const QuditState& state);

nlohmann::json shot_record_to_json(const ShotRecord& record);
ShotRecord shot_record_from_json(const nlohmann::json& j);

nlohmann::json witness_report_to_json(const WitnessReport& report);
nlohmann::json bound_result_to_json(const BoundResult& result);
nlohmann::json threshold_result_to_json(const ThresholdResult& result);
nlohmann::json estimate_report_to_json(const EstimateReport& report);
nlohmann::json certification_to_json(const ShotCertification& cert);
nlohmann::json pair_test_to_json(const PairTest& test);

std::string basis_name(BasisLabel basis);
BasisLabel parse_basis(const std::string& name);

}  // namespace qwitness
