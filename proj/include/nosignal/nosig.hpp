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

#ifndef NOSIGNAL_NOSIG_HPP
#define NOSIGNAL_NOSIG_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nosignal/stats.hpp"
#include "nosignal/tables.hpp"

namespace nosignal {

// Assumed factorization of the detection probability p = p~ * eta:
//   kSettingLocal: eta_a(X) eta_b(Y)   (and the three-party analogue)
//   kOutcomeLocal: eta_a(A) eta_b(B)
//   kCombined:     eta_a(X,A) eta_b(Y,B)
// All three leave the 2x2 independence tests below valid; the variant
// is recorded in descriptors and selects which extra checks (product
// condition, outcome-efficiency subtables) are meaningful.
enum class EfficiencyModel { kSettingLocal, kOutcomeLocal, kCombined };

const char* efficiency_model_name(EfficiencyModel model);

// Whether a choice may causally influence an outcome. A test of a pair
// the graph allows is expected to fail independence; a forbidden pair
// that fails signals either signaling or a broken efficiency model.
enum class CausalStatus { kAllowed, kForbidden };

// Allowed (choice party -> outcome party) influences. A party's own
// choice always influences its own outcome; extra edges add remote
// influences permitted by the experiment's timing.
struct CausalGraph {
  std::size_t n_parties = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  // Only local influences X->A, Y->B, Z->C.
  static CausalGraph local(std::size_t n_parties);
  // Sequential measurement A before B before C: the first choice also
  // reaches the second outcome and the second choice the third.
  static CausalGraph sequential_three();

  bool allows(std::size_t choice_party, std::size_t outcome_party) const;
};

struct BatteryEntry {
  Chi2Result test;
  CausalStatus causal = CausalStatus::kForbidden;
};

// One entry per testable combination, sorted by descriptor. Tests whose
// slice degenerates (a zero marginal for one setting) are skipped and
// listed with the reason; the correction multiplier counts only the
// tests actually run unless overridden.
struct TestBatteryReport {
  std::vector<BatteryEntry> entries;
  std::vector<std::pair<std::string, std::string>> skipped;
  int multiplier = 1;
};

// How parties with more than two outcome labels are tested.
enum class MultiBinMode {
  kPerBinVsReference,  // one 2x2 per bin against the no-detection bin
  kFullTable,          // a single 2xk test
};

// No-signaling battery for two parties: independence of each party's
// outcome from the other party's choice, at each fixed value of the
// local choice (4 tests for binary outcomes). Parties whose outcome
// coordinate is starred contribute no tests, so the battery runs on
// published marginal tables as well as full ones.
TestBatteryReport two_party_battery(
    const CountTable& table, EfficiencyModel model,
    MultiBinMode multibin = MultiBinMode::kPerBinVsReference,
    std::optional<int> correction_override = std::nullopt);

// Three-party battery: every ordered (choice, outcome) pair, including
// a party against its own choice, at each of the 4 fixed values of the
// remaining two choices; entries labeled per the causal graph.
TestBatteryReport three_party_battery(
    const CountTable& table, const CausalGraph& graph,
    std::optional<int> correction_override = std::nullopt);

// Under a setting-local efficiency model the per-setting totals must
// satisfy N(s1) N(s4) = N(s2) N(s3); tested as independence on the 2x2
// (N(s1), N(s2); N(s3), N(s4)).
Chi2Result product_condition_check(const CountTable& totals,
                                   const std::array<Tuple, 4>& quadruple);

// An equality the ideal model forces between specific joint cells,
// e.g. p~(00|10) = p~(00|11) for ideal CHSH angles. Tested as
// independence of the 2x2 of the named cells.
struct EqualitySpec {
  std::array<Tuple, 2> settings;
  std::array<Tuple, 2> outcomes;
};

Chi2Result outcome_efficiency_check(const CountTable& table,
                                    const EqualitySpec& spec);

// Under the per-detector efficiency model the second party's outcome
// distribution is independent of its own choice at fixed first-party
// setting; emits that 2x2 test for each value of the first setting.
TestBatteryReport detector_asymmetry_check(const CountTable& table);

// Consistency of correlations across two settings via M = N E with
// E = (N_agree - N_disagree)/N: chi2 on ((M1, N1); (M2, N2)).
// Negative M (E < 0) is rejected.
Chi2Result correlation_consistency_check(const CountTable& table,
                                         const std::array<Tuple, 2>& pair);

}  // namespace nosignal

#endif  // NOSIGNAL_NOSIG_HPP
