// qwitness: command-line front end for the qudit correlation-witness toolkit.
// Subcommands cover separable bounds, witness evaluation, noise thresholds,
// figure-data emission, multipartite stabilizer tests and shot simulation.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwitness/bounds.hpp"
#include "qwitness/measure_sim.hpp"
#include "qwitness/multipartite.hpp"
#include "qwitness/noise.hpp"
#include "qwitness/qudit_ops.hpp"
#include "qwitness/report.hpp"
#include "qwitness/rng.hpp"
#include "qwitness/serialization.hpp"
#include "qwitness/witnesses.hpp"

namespace {

using nlohmann::json;
using namespace qwitness;

std::string config_comment(const json& config) {
  std::string out = "# schema=qwitness/1";
  for (auto it = config.begin(); it != config.end(); ++it) {
    out += " " + it.key() + "=";
    out += it->is_string() ? it->get<std::string>() : it->dump();
  }
  out += "\n";
  return out;
}

void emit_json(const json& config, json body) {
  body["schema"] = "qwitness/1";
  body["config"] = config;
  std::cout << body.dump(2) << "\n";
}

// Shared state input: a JSON file or one of the canonical shorthands.
struct StateInput {
  std::string path;
  int mes_d = 0;
  std::string bell;   // "l,m", needs --d
  std::string noisy;  // "family,p", needs --d
};

void add_state_options(CLI::App* cmd, StateInput& input) {
  cmd->add_option("--state", input.path, "state file (JSON schema qwitness/1)");
  cmd->add_option("--mes", input.mes_d, "use the maximally entangled state of this dimension");
  cmd->add_option("--bell", input.bell, "use Bell state l,m (requires --d)");
  cmd->add_option("--noisy", input.noisy, "use noisy MES family,p with family psi|phi|iso (requires --d)");
}

QuditState resolve_state(const StateInput& input, int d_flag) {
  const int provided = (!input.path.empty()) + (input.mes_d > 0) +
                       (!input.bell.empty()) + (!input.noisy.empty());
  if (provided != 1)
    throw std::invalid_argument("provide exactly one of --state, --mes, --bell, --noisy");
  if (!input.path.empty()) return load_state(input.path);
  if (input.mes_d > 0) return mes(input.mes_d);
  if (!input.bell.empty()) {
    if (d_flag < 2) throw std::invalid_argument("--bell requires --d");
    int l = 0;
    int m = 0;
    if (std::sscanf(input.bell.c_str(), "%d,%d", &l, &m) != 2)
      throw std::invalid_argument("--bell expects 'l,m'");
    return bell_state(d_flag, l, m);
  }
  if (d_flag < 2) throw std::invalid_argument("--noisy requires --d");
  char family[8] = {0};
  double p = 0.0;
  if (std::sscanf(input.noisy.c_str(), "%3[a-z],%lf", family, &p) != 2)
    throw std::invalid_argument("--noisy expects 'family,p'");
  return noisy_state(d_flag, parse_family(family), p);
}

json state_input_config(const StateInput& input) {
  json j;
  if (!input.path.empty()) j["state"] = input.path;
  if (input.mes_d > 0) j["mes"] = input.mes_d;
  if (!input.bell.empty()) j["bell"] = input.bell;
  if (!input.noisy.empty()) j["noisy"] = input.noisy;
  return j;
}

int run_bound(int d, std::optional<double> weight, double tol, const std::string& format) {
  json config{{"subcommand", "bound"}, {"d", d}, {"tol", tol}, {"format", format}};
  config["weight"] = weight ? json(*weight) : json(nullptr);
  const BoundResult result = separable_bound_m(d, tol, weight);
  if (format == "csv") {
    std::cout << config_comment(config)
              << "d,m_value,theta_star,iterations,residual\n"
              << d << "," << format_double(result.m_value) << ","
              << format_double(result.theta_star) << "," << result.iterations << ","
              << format_double(result.residual) << "\n";
  } else {
    emit_json(config, bound_result_to_json(result));
  }
  return 0;
}

int run_witness(const StateInput& input, int d_flag, double tol,
                const std::string& format, const std::string& dump_path) {
  const QuditState state = resolve_state(input, d_flag);
  if (state.parties() != 2)
    throw std::invalid_argument("witness: a two-qudit state is required");
  if (d_flag >= 2 && d_flag != state.d())
    throw std::invalid_argument("witness: --d does not match the state dimension");
  if (!dump_path.empty()) save_state(dump_path, state);

  json config = state_input_config(input);
  config["subcommand"] = "witness";
  config["d"] = state.d();
  config["tol"] = tol;
  config["format"] = format;

  const BoundResult bound = separable_bound_m(state.d(), tol);
  const WitnessReport report = evaluate_witnesses(state, bound);
  if (format == "csv") {
    std::cout << config_comment(config)
              << "d,c_value,r_value,c_bound,r_bound,c_margin,r_margin,"
                 "c_violation,r_violation,mes_fraction_lb,mes_fraction_lb_clamped,"
                 "schmidt_lb\n"
              << report.d << "," << format_double(report.c_value) << ","
              << format_double(report.r_value) << "," << format_double(report.c_bound)
              << "," << format_double(report.r_bound) << ","
              << format_double(report.c_margin) << "," << format_double(report.r_margin)
              << "," << (report.c_violation ? 1 : 0) << ","
              << (report.r_violation ? 1 : 0) << ","
              << format_double(report.mes_fraction_lb) << ","
              << format_double(report.mes_fraction_lb_clamped) << ","
              << report.schmidt_lb << "\n";
  } else {
    emit_json(config, witness_report_to_json(report));
  }
  return 0;
}

int run_threshold(int d, const std::string& family, const std::string& witness,
                  const std::string& format) {
  json config{{"subcommand", "threshold"},
              {"d", d},
              {"family", family},
              {"witness", witness},
              {"format", format}};
  const WitnessKind kind = parse_witness(witness);
  std::optional<double> m_value;
  if (kind == WitnessKind::Rd) m_value = separable_bound_m(d).m_value;
  const ThresholdResult result = threshold(d, parse_family(family), kind, m_value);
  if (format == "csv") {
    std::cout << config_comment(config) << "d,family,witness,p_star,method\n"
              << d << "," << family << "," << witness << ","
              << (result.p_star ? format_double(*result.p_star) : "") << ","
              << method_name(result.method) << "\n";
  } else {
    json body = threshold_result_to_json(result);
    if (m_value) body["m_value"] = *m_value;
    emit_json(config, body);
  }
  return 0;
}

int run_figure(int which, int d_min, int d_max, double tol, const std::string& format) {
  if (format == "csv") {
    std::cout << (which == 1 ? figure1_csv(d_min, d_max, tol) : figure2_csv(d_min, d_max));
    return 0;
  }
  json config{{"subcommand", "figure"}, {"which", which}, {"dmin", d_min},
              {"dmax", d_max}, {"format", format}};
  json rows = json::array();
  if (which == 1) {
    config["tol"] = tol;
    for (const auto& row : figure1_rows(d_min, d_max, tol)) {
      json r{{"d", row.d}, {"m_value", row.m_value}, {"theta_star", row.theta_star}};
      r["p_dist"] = std::vector<double>(row.p.begin(), row.p.end());
      r["pbar_dist"] = std::vector<double>(row.p_bar.begin(), row.p_bar.end());
      rows.push_back(r);
    }
  } else {
    for (const auto& row : figure2_rows(d_min, d_max)) {
      json cells = json::array();
      for (const auto& cell : row.cells) cells.push_back(threshold_result_to_json(cell));
      json r{{"d", row.d}, {"m_value", row.m_value}, {"thresholds", cells}};
      r["x_region"] = row.x_region ? json{{"lo", row.x_region->lo}, {"hi", row.x_region->hi}}
                                   : json(nullptr);
      r["y_region"] = row.y_region ? json{{"lo", row.y_region->lo}, {"hi", row.y_region->hi}}
                                   : json(nullptr);
      rows.push_back(r);
    }
  }
  emit_json(config, json{{"rows", rows}});
  return 0;
}

int run_multipartite(const std::string& kind, int d, int n, const StateInput& input,
                     int site, const std::string& format, const std::string& dump_path) {
  const StabilizerKind stab_kind = parse_stabilizer_kind(kind);
  const int provided = (!input.path.empty()) + (input.mes_d > 0) +
                       (!input.bell.empty()) + (!input.noisy.empty());
  const QuditState state =
      provided == 0
          ? (stab_kind == StabilizerKind::GHZ ? ghz_state(d, n) : cluster_state(d, n))
          : resolve_state(input, d);
  if (state.d() != d || state.parties() != n)
    throw std::invalid_argument("multipartite: state does not match --d/--n");
  if (!dump_path.empty()) save_state(dump_path, state);

  json config = state_input_config(input);
  config["subcommand"] = "multipartite";
  config["kind"] = kind;
  config["d"] = d;
  config["n"] = n;
  config["site"] = site;
  config["format"] = format;

  const double m_value = separable_bound_m(d).m_value;
  const PairTest test = stab_kind == StabilizerKind::GHZ
                            ? ghz_pair_test(state, site, m_value)
                            : cluster_pair_test(state, site, m_value);
  if (format == "csv") {
    std::cout << config_comment(config) << "kind,d,n,site,value,m_value,violates\n"
              << kind << "," << d << "," << n << "," << site << ","
              << format_double(test.value) << "," << format_double(m_value) << ","
              << (test.violates ? 1 : 0) << "\n";
  } else {
    json body = pair_test_to_json(test);
    body["kind"] = kind;
    body["d"] = d;
    body["n"] = n;
    body["site"] = site;
    body["m_value"] = m_value;
    emit_json(config, body);
  }
  return 0;
}

int run_simulate(const StateInput& input, int d_flag, std::int64_t shots,
                 std::uint64_t seed, double sigmas, const std::string& dump_path) {
  const QuditState state = resolve_state(input, d_flag);
  if (state.parties() != 2)
    throw std::invalid_argument("simulate: a two-qudit state is required");
  if (d_flag >= 2 && d_flag != state.d())
    throw std::invalid_argument("simulate: --d does not match the state dimension");
  if (!dump_path.empty()) save_state(dump_path, state);

  json config = state_input_config(input);
  config["subcommand"] = "simulate";
  config["d"] = state.d();
  config["shots"] = shots;
  config["seed"] = seed;
  config["sigmas"] = sigmas;
  config["format"] = "json";

  // One derived seed per setting so the two records are independent streams.
  SplitMix64 root(seed);
  const std::uint64_t seed_z = root.next();
  const std::uint64_t seed_x = root.next();
  const ShotRecord z = sample_joint_basis(state, BasisLabel::ZBasis, shots, seed_z);
  const ShotRecord x = sample_joint_basis(state, BasisLabel::XBasis, shots, seed_x);

  const BoundResult bound = separable_bound_m(state.d());
  const ShotCertification cert = certify_from_shots(z, x, bound, sigmas);
  emit_json(config, json{{"z_record", shot_record_to_json(z)},
                         {"x_record", shot_record_to_json(x)},
                         {"estimate", estimate_report_to_json(estimate_report(z, x))},
                         {"certification", certification_to_json(cert)}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("QWITNESS_MAX_DIM")) {
    try {
      set_max_dim(std::stoull(env));
    } catch (const std::exception&) {
      std::cerr << "qwitness: invalid QWITNESS_MAX_DIM '" << env << "'\n";
      return 2;
    }
  }

  CLI::App app{"Fourier-correlation entanglement witnesses for qudit systems"};
  app.require_subcommand(1);

  // bound
  int bound_d = 2;
  std::optional<double> bound_weight;
  double bound_tol = 1e-10;
  std::string bound_format = "json";
  auto* bound_cmd = app.add_subcommand("bound", "separable bound M_d and optimizer");
  bound_cmd->add_option("--d", bound_d, "local dimension")->required()->check(CLI::Range(2, 1 << 20));
  bound_cmd->add_option("--weight", bound_weight, "convex-sum weight p in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  bound_cmd->add_option("--tol", bound_tol, "theta refinement tolerance");
  bound_cmd->add_option("--format", bound_format)->check(CLI::IsMember({"json", "csv"}));

  // witness
  StateInput witness_state;
  int witness_d = 0;
  double witness_tol = 1e-10;
  std::string witness_format = "json";
  std::string witness_dump;
  auto* witness_cmd = app.add_subcommand("witness", "evaluate both witnesses on a state");
  add_state_options(witness_cmd, witness_state);
  witness_cmd->add_option("--d", witness_d, "expected local dimension");
  witness_cmd->add_option("--tol", witness_tol, "bound tolerance");
  witness_cmd->add_option("--format", witness_format)->check(CLI::IsMember({"json", "csv"}));
  witness_cmd->add_option("--dump-state", witness_dump, "write the effective input state to this file");

  // threshold
  int threshold_d = 2;
  std::string threshold_family;
  std::string threshold_witness;
  std::string threshold_format = "json";
  auto* threshold_cmd = app.add_subcommand("threshold", "noise tolerance threshold p*");
  threshold_cmd->add_option("--d", threshold_d)->required()->check(CLI::Range(2, 64));
  threshold_cmd->add_option("--family", threshold_family)->required()
      ->check(CLI::IsMember({"psi", "phi", "iso"}));
  threshold_cmd->add_option("--witness", threshold_witness)->required()
      ->check(CLI::IsMember({"c", "r"}));
  threshold_cmd->add_option("--format", threshold_format)->check(CLI::IsMember({"json", "csv"}));

  // figure
  int figure_which = 1;
  int figure_dmin = 2;
  int figure_dmax = 20;
  double figure_tol = 1e-10;
  std::string figure_format = "csv";
  auto* figure_cmd = app.add_subcommand("figure", "emit plot data tables");
  figure_cmd->add_option("--which", figure_which)->required()->check(CLI::IsMember({1, 2}));
  figure_cmd->add_option("--dmin", figure_dmin)->check(CLI::Range(2, 4096));
  figure_cmd->add_option("--dmax", figure_dmax)->check(CLI::Range(2, 4096));
  figure_cmd->add_option("--tol", figure_tol, "bound tolerance (figure 1)");
  figure_cmd->add_option("--format", figure_format)->check(CLI::IsMember({"json", "csv"}));

  // multipartite
  std::string multi_kind;
  int multi_d = 2;
  int multi_n = 2;
  StateInput multi_state;
  int multi_site = 2;
  std::string multi_format = "json";
  std::string multi_dump;
  auto* multi_cmd = app.add_subcommand("multipartite", "stabilizer pair test");
  multi_cmd->add_option("--kind", multi_kind)->required()->check(CLI::IsMember({"ghz", "cluster"}));
  multi_cmd->add_option("--d", multi_d)->required()->check(CLI::Range(2, 4096));
  multi_cmd->add_option("--n", multi_n)->required()->check(CLI::Range(2, 64));
  add_state_options(multi_cmd, multi_state);
  multi_cmd->add_option("--site", multi_site, "pair-test site m in 2..n");
  multi_cmd->add_option("--format", multi_format)->check(CLI::IsMember({"json", "csv"}));
  multi_cmd->add_option("--dump-state", multi_dump, "write the effective input state to this file");

  // simulate
  StateInput sim_state;
  int sim_d = 0;
  std::int64_t sim_shots = 0;
  std::uint64_t sim_seed = 1;
  double sim_sigmas = 5.0;
  std::string sim_format = "json";
  std::string sim_dump;
  auto* sim_cmd = app.add_subcommand("simulate", "finite-shot two-setting experiment");
  add_state_options(sim_cmd, sim_state);
  sim_cmd->add_option("--d", sim_d, "expected local dimension");
  sim_cmd->add_option("--shots", sim_shots, "shots per measurement setting")->required();
  sim_cmd->add_option("--seed", sim_seed, "64-bit seed");
  sim_cmd->add_option("--sigmas", sim_sigmas, "certification confidence multiplier");
  sim_cmd->add_option("--format", sim_format)->check(CLI::IsMember({"json"}));
  sim_cmd->add_option("--dump-state", sim_dump, "write the effective input state to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "qwitness: " << e.what() << "\n";
    return 2;
  }

  try {
    if (bound_cmd->parsed())
      return run_bound(bound_d, bound_weight, bound_tol, bound_format);
    if (witness_cmd->parsed())
      return run_witness(witness_state, witness_d, witness_tol, witness_format, witness_dump);
    if (threshold_cmd->parsed())
      return run_threshold(threshold_d, threshold_family, threshold_witness, threshold_format);
    if (figure_cmd->parsed())
      return run_figure(figure_which, figure_dmin, figure_dmax, figure_tol, figure_format);
    if (multi_cmd->parsed())
      return run_multipartite(multi_kind, multi_d, multi_n, multi_state, multi_site,
                              multi_format, multi_dump);
    if (sim_cmd->parsed())
      return run_simulate(sim_state, sim_d, sim_shots, sim_seed, sim_sigmas, sim_dump);
    std::cerr << "qwitness: no subcommand\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "qwitness: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qwitness: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "qwitness: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qwitness: " << e.what() << "\n";
    return 1;
  }
}
