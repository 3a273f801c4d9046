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

#ifndef NOSIGNAL_SIMULATOR_HPP
#define NOSIGNAL_SIMULATOR_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "nosignal/nosig.hpp"
#include "nosignal/qmodel.hpp"
#include "nosignal/rng.hpp"
#include "nosignal/tables.hpp"

namespace nosignal {

// One local-hidden-variable strategy: a deterministic outcome index per
// (party, own setting), taken with probability `weight`.
struct LhvStrategy {
  std::vector<std::vector<int>> outcome_for_setting;
  double weight = 1.0;
};

struct LhvModel {
  std::vector<LhvStrategy> strategies;
};

// Explicit joint outcome distribution per setting tuple, indexed like
// CountTable cells. The only model that can express a remote-dependent
// outcome distribution, i.e. genuine signaling.
struct SignalingModel {
  std::vector<double> probs;  // [setting * n_outcomes + outcome], rows sum to 1
};

// Detection probability per (joint setting tuple, own outcome). Keying
// on the joint settings makes local models (constant across the remote
// coordinate) and planted remote-dependent efficiencies both
// expressible.
class EfficiencyMap {
 public:
  EfficiencyMap() = default;
  EfficiencyMap(std::size_t n_setting_tuples, std::size_t n_outcomes,
                double value = 1.0);

  double at(std::size_t setting_tuple, std::size_t outcome) const;
  double& at(std::size_t setting_tuple, std::size_t outcome);
  bool empty() const { return p_.empty(); }

 private:
  std::vector<double> p_;
  std::size_t n_outcomes_ = 0;
};

struct SimulationConfig {
  PartyLayout layout;
  std::variant<CorrelationModel, LhvModel, SignalingModel> model;
  std::vector<EfficiencyMap> efficiency;     // per party; empty = unit
  std::vector<double> setting_distribution;  // empty = uniform
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
};

// Coincidences plus everything the coincidence tables drop: per-party
// single counts (events where that party detected but not all did) and
// the loss bookkeeping. total(coincidences) + partial + lost = trials.
struct SimulationOutput {
  CountTable coincidences;
  std::vector<CountTable> singles;  // per party; other outcomes starred
  std::int64_t partial_detections = 0;
  std::int64_t double_losses = 0;
};

// Per trial: sample the setting tuple, sample outcomes from the model,
// then thin each party's detection independently per its efficiency
// map (detection never alters the latent outcome). Deterministic given
// the seed, bit-identical across platforms.
SimulationOutput simulate(const SimulationConfig& config);

// Event-stream form of simulate(): writes the event log of coincidence
// events (and, when `include_partial`, partial detections with the
// no-detection token) while accumulating the same output.
SimulationOutput simulate_to_log(const SimulationConfig& config,
                                 std::ostream& log,
                                 bool include_partial = false);

using BatteryFn = std::function<TestBatteryReport(const CountTable&)>;

struct CalibrationResult {
  // Per test descriptor: fraction of replications with p_raw < alpha.
  std::vector<std::pair<std::string, double>> rejection_rates;
  int replications = 0;
};

// Runs `replications` simulations with seeds child(0..n-1) of the
// config seed and tallies the battery's per-test rejection rates.
CalibrationResult calibrate(const SimulationConfig& config,
                            const BatteryFn& battery, double alpha,
                            int replications);

// --- Canned configurations --------------------------------------------

// Singlet at the standard CHSH angles, uniform settings, unit
// efficiency.
SimulationConfig singlet_config(std::int64_t trials, std::uint64_t seed,
                                double visibility = 1.0);

// Exactly factorized null: product outcome distribution with
// setting-local detection efficiencies, so every no-signaling battery
// test holds by construction.
SimulationConfig factorized_null_config(std::int64_t trials,
                                        std::uint64_t seed);

// The factorized null with the second party's outcome-1 efficiency
// scaled by (1 - skew) when the *first* party's setting is 1: a
// remote-dependent detection efficiency that two_party_battery's
// B-vs-X tests must catch.
SimulationConfig signaling_skew_config(std::int64_t trials,
                                       std::uint64_t seed,
                                       double skew = 0.05);

}  // namespace nosignal

#endif  // NOSIGNAL_SIMULATOR_HPP
