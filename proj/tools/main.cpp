// Copyright 2026 nosignal Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nosignal/datasets.hpp"
#include "nosignal/nosig.hpp"
#include "nosignal/report.hpp"
#include "nosignal/simulator.hpp"
#include "nosignal/tables.hpp"

namespace {

using namespace nosignal;

// Exit codes: 0 analysis ran, 1 CLI usage, 2 input/config error,
// 3 signal detected (only with --fail-on-signal), 4 reproduction outside
// tolerance.
constexpr int kExitOk = 0;
constexpr int kExitError = 2;
constexpr int kExitSignal = 3;
constexpr int kExitMismatch = 4;

struct CommonOptions {
  std::string format = "table";
  ReportFormat report_format() const {
    return format == "json" ? ReportFormat::kJson : ReportFormat::kTable;
  }
};

CountTable load_input(const std::string& fixture_id,
                      const std::string& input_path) {
  if (!fixture_id.empty()) {
    return load_fixture(fixture_id).table();
  }
  if (input_path == "-") {
    return read_event_log(std::cin);
  }
  std::ifstream in(input_path);
  if (!in) {
    throw std::runtime_error("cannot open '" + input_path + "'");
  }
  // Table fixtures and event logs share the leading format tag.
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (text.rfind("# nosignal table v1", 0) == 0) {
    return parse_table_text(text);
  }
  std::istringstream stream(text);
  return read_event_log(stream);
}

bool all_outcomes_starred(const PartyLayout& layout) {
  for (const auto& p : layout.parties()) {
    if (p.outcomes.size() != 1 || p.outcomes[0] != kStarLabel) return false;
  }
  return true;
}

int run_analyze(const std::string& fixture_id, const std::string& input_path,
                const std::string& model_name, const std::string& graph_name,
                std::optional<int> correction, double fail_on_signal,
                const CommonOptions& common) {
  const CountTable table = load_input(fixture_id, input_path);

  EfficiencyModel model = EfficiencyModel::kSettingLocal;
  if (model_name == "outcome-local") model = EfficiencyModel::kOutcomeLocal;
  if (model_name == "combined") model = EfficiencyModel::kCombined;

  TestBatteryReport report;
  if (all_outcomes_starred(table.layout())) {
    // Occurrence-style table: only the setting distribution is testable.
    std::vector<std::int64_t> counts;
    const auto& layout = table.layout();
    for (std::size_t s = 0; s < layout.num_setting_tuples(); ++s) {
      counts.push_back(table.setting_total_index(s));
    }
    BatteryEntry entry;
    entry.test = uniformity_chi2(counts, "setting occurrence uniformity");
    report.entries.push_back(std::move(entry));
    report.multiplier = 1;
  } else if (table.layout().num_parties() == 2) {
    report = two_party_battery(table, model,
                               MultiBinMode::kPerBinVsReference, correction);
  } else if (table.layout().num_parties() == 3) {
    const CausalGraph graph = graph_name == "sequential"
                                  ? CausalGraph::sequential_three()
                                  : CausalGraph::local(3);
    report = three_party_battery(table, graph, correction);
  } else {
    throw std::runtime_error("no battery for " +
                             std::to_string(table.layout().num_parties()) +
                             " parties");
  }

  render_battery_report(std::cout, report, common.report_format());

  if (fail_on_signal > 0.0) {
    for (const auto& entry : report.entries) {
      if (entry.causal == CausalStatus::kForbidden &&
          entry.test.p_corrected < fail_on_signal) {
        std::cerr << "signal: " << entry.test.descriptor
                  << " p_corrected = " << entry.test.p_corrected << " < "
                  << fail_on_signal << '\n';
        return kExitSignal;
      }
    }
  }
  return kExitOk;
}

SimulationConfig make_config(const std::string& preset, std::int64_t trials,
                             std::uint64_t seed, double visibility,
                             double skew) {
  if (preset == "singlet") return singlet_config(trials, seed, visibility);
  if (preset == "factorized") return factorized_null_config(trials, seed);
  if (preset == "signaling-skew") {
    return signaling_skew_config(trials, seed, skew);
  }
  throw std::runtime_error("unknown preset '" + preset + "'");
}

int run_simulate(const std::string& preset, std::int64_t trials,
                 std::uint64_t seed, double visibility, double skew,
                 const std::string& emit, const std::string& out_path) {
  const SimulationConfig config =
      make_config(preset, trials, seed, visibility, skew);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (out_path != "-") {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open '" + out_path + "'");
    out = &file;
  }

  SimulationOutput output;
  if (emit == "table") {
    output = simulate(config);
    *out << to_table_text(output.coincidences,
                          "simulated: preset " + preset + ", seed " +
                              std::to_string(seed));
  } else {
    output = simulate_to_log(config, *out);
  }
  std::cerr << "trials " << config.trials << ": coincidences "
            << output.coincidences.total() << ", partial detections "
            << output.partial_detections << ", double losses "
            << output.double_losses << '\n';
  return kExitOk;
}

int run_calibrate(const std::string& preset, std::int64_t trials,
                  std::uint64_t seed, double skew, double alpha,
                  int replications, const CommonOptions& common) {
  const SimulationConfig config = make_config(preset, trials, seed, 1.0, skew);
  const BatteryFn battery = [](const CountTable& table) {
    return two_party_battery(table, EfficiencyModel::kSettingLocal);
  };
  const CalibrationResult result =
      calibrate(config, battery, alpha, replications);
  render_calibration_result(std::cout, result, common.report_format());
  return kExitOk;
}

int run_reproduce(const std::string& experiment, const CommonOptions& common) {
  const ComparisonReport report = reproduce_report(experiment);
  render_comparison_report(std::cout, report, common.report_format());
  return report.all_pass ? kExitOk : kExitMismatch;
}

int run_fixtures(const CommonOptions& common) {
  (void)common;
  for (const auto& id : fixture_ids()) {
    const Fixture fixture = load_fixture(id);
    std::cout << id << "  --  " << fixture.provenance << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chi-squared no-signaling analysis for Bell-test "
               "coincidence counts"};
  app.require_subcommand(1);
  CommonOptions common;

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "run the no-signaling battery on a table or event log");
  std::string fixture_id, input_path = "-";
  std::string model_name = "setting-local", graph_name = "local";
  int correction = 0;
  double fail_on_signal = 0.0;
  auto* fixture_opt =
      analyze->add_option("--fixture", fixture_id, "embedded fixture id");
  analyze->add_option("--input", input_path,
                      "event log or table file ('-' = stdin)")
      ->excludes(fixture_opt);
  analyze->add_option("--model", model_name, "efficiency factorization")
      ->check(CLI::IsMember({"setting-local", "outcome-local", "combined"}));
  analyze->add_option("--graph", graph_name,
                      "three-party causal labeling")
      ->check(CLI::IsMember({"local", "sequential"}));
  analyze->add_option("--correction", correction,
                      "override the Bonferroni multiplier")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--fail-on-signal", fail_on_signal,
                      "exit nonzero when any forbidden pair has corrected "
                      "p below this threshold");
  analyze->add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"table", "json"}));

  // simulate
  auto* simulate_cmd =
      app.add_subcommand("simulate", "generate synthetic experiment data");
  std::string preset = "singlet", emit = "events", out_path = "-";
  std::int64_t trials = 10000;
  std::uint64_t seed = 1;
  double visibility = 1.0, skew = 0.05;
  simulate_cmd->add_option("--preset", preset, "model preset")
      ->check(CLI::IsMember({"singlet", "factorized", "signaling-skew"}));
  simulate_cmd->add_option("--trials", trials, "number of trials")
      ->check(CLI::NonNegativeNumber);
  simulate_cmd->add_option("--seed", seed, "random seed");
  simulate_cmd->add_option("--visibility", visibility,
                           "singlet visibility in [0,1]");
  simulate_cmd->add_option("--skew", skew,
                           "relative efficiency skew for signaling-skew");
  simulate_cmd->add_option("--emit", emit, "output kind")
      ->check(CLI::IsMember({"events", "table"}));
  simulate_cmd->add_option("--out", out_path, "output path ('-' = stdout)");

  // calibrate
  auto* calibrate_cmd = app.add_subcommand(
      "calibrate", "rejection rates of the battery under a simulated model");
  std::string cal_preset = "factorized";
  std::int64_t cal_trials = 100000;
  std::uint64_t cal_seed = 1;
  double alpha = 0.05, cal_skew = 0.05;
  int replications = 200;
  calibrate_cmd->add_option("--preset", cal_preset, "model preset")
      ->check(CLI::IsMember({"singlet", "factorized", "signaling-skew"}));
  calibrate_cmd->add_option("--trials", cal_trials, "trials per replication")
      ->check(CLI::PositiveNumber);
  calibrate_cmd->add_option("--replications", replications,
                            "number of replications")
      ->check(CLI::PositiveNumber);
  calibrate_cmd->add_option("--alpha", alpha, "rejection threshold on p_raw");
  calibrate_cmd->add_option("--seed", cal_seed, "random seed");
  calibrate_cmd->add_option("--skew", cal_skew,
                            "skew for the signaling-skew preset");
  calibrate_cmd->add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"table", "json"}));

  // reproduce
  auto* reproduce_cmd = app.add_subcommand(
      "reproduce", "recompute an experiment's published chi-squared values");
  std::string experiment;
  reproduce_cmd->add_option("experiment", experiment, "experiment id")
      ->required();
  reproduce_cmd->add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"table", "json"}));

  // fixtures
  auto* fixtures_cmd =
      app.add_subcommand("fixtures", "list embedded fixtures");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) {
      if (fixture_id.empty() && input_path.empty()) {
        throw std::runtime_error("need --fixture or --input");
      }
      return run_analyze(fixture_id, input_path, model_name, graph_name,
                         correction > 0 ? std::optional<int>(correction)
                                        : std::nullopt,
                         fail_on_signal, common);
    }
    if (app.got_subcommand(simulate_cmd)) {
      return run_simulate(preset, trials, seed, visibility, skew, emit,
                          out_path);
    }
    if (app.got_subcommand(calibrate_cmd)) {
      return run_calibrate(cal_preset, cal_trials, cal_seed, cal_skew, alpha,
                           replications, common);
    }
    if (app.got_subcommand(reproduce_cmd)) {
      return run_reproduce(experiment, common);
    }
    if (app.got_subcommand(fixtures_cmd)) {
      return run_fixtures(common);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}
