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

#include "nosignal/simulator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gtest/gtest.h"

namespace nosignal {
namespace {

TEST(Rng, DeterministicAndSplittable) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.next(), b.next());
  }
  Rng c = Rng(42).child(0);
  Rng d = Rng(42).child(1);
  EXPECT_NE(c.next(), d.next());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Simulate, ZeroTrialsGiveEmptyTable) {
  const SimulationOutput out = simulate(singlet_config(0, 1));
  EXPECT_EQ(out.coincidences.total(), 0);
  EXPECT_EQ(out.partial_detections, 0);
  EXPECT_EQ(out.double_losses, 0);
}

TEST(Simulate, ReproducibleBitForBit) {
  const SimulationConfig config = signaling_skew_config(20000, 99);
  const SimulationOutput a = simulate(config);
  const SimulationOutput b = simulate(config);
  EXPECT_EQ(a.coincidences, b.coincidences);
  EXPECT_EQ(a.partial_detections, b.partial_detections);
  EXPECT_EQ(a.double_losses, b.double_losses);
  ASSERT_EQ(a.singles.size(), b.singles.size());
  for (std::size_t p = 0; p < a.singles.size(); ++p) {
    EXPECT_EQ(a.singles[p], b.singles[p]);
  }
  const SimulationOutput c = simulate(factorized_null_config(20000, 100));
  EXPECT_NE(a.coincidences, c.coincidences);
}

TEST(Simulate, BookkeepingConservesTrials) {
  const SimulationConfig config = factorized_null_config(50000, 7);
  const SimulationOutput out = simulate(config);
  EXPECT_EQ(out.coincidences.total() + out.partial_detections +
                out.double_losses,
            50000);
  // Losses must actually occur with efficiencies below one.
  EXPECT_GT(out.partial_detections, 0);
  EXPECT_GT(out.double_losses, 0);
  // Singles carry the partial detections.
  std::int64_t singles = 0;
  for (const auto& s : out.singles) singles += s.total();
  EXPECT_GE(singles, out.partial_detections);
}

TEST(Simulate, MatchesClosedFormChsh) {
  const SimulationOutput out = simulate(singlet_config(1000000, 11));
  EXPECT_EQ(out.coincidences.total(), 1000000);  // unit efficiency

  const CorrelationModel model = chsh_singlet();
  Eigen::Matrix2d empirical, expected;
  double sigma_s2 = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const Tuple s{std::to_string(x), std::to_string(y)};
      double agree = 0.0, disagree = 0.0;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const double n = static_cast<double>(
              out.coincidences.at(s, {std::to_string(a), std::to_string(b)}));
          (a == b ? agree : disagree) += n;
        }
      }
      const double n = agree + disagree;
      empirical(x, y) = (agree - disagree) / n;
      expected(x, y) =
          correlation(model.alice_axes[x], model.bob_axes[y], 1.0);
      sigma_s2 += (1.0 - expected(x, y) * expected(x, y)) / n;
    }
  }
  const double s_emp =
      std::abs(chsh_value(empirical, ChshSign::kNegate00));
  const double s_exp = std::abs(chsh_value(expected, ChshSign::kNegate00));
  EXPECT_NEAR(s_exp, 2.0 * std::numbers::sqrt2, 1e-9);
  EXPECT_NEAR(s_emp, s_exp, 3.0 * std::sqrt(sigma_s2));
}

TEST(Simulate, EmpiricalCorrelationConvergesAsRootN) {
  const double target = correlation(chsh_singlet().alice_axes[0],
                                    chsh_singlet().bob_axes[0], 1.0);
  for (const std::int64_t trials : {10000, 1000000}) {
    const SimulationOutput out = simulate(singlet_config(trials, 5));
    const Tuple s{"0", "0"};
    double agree = 0.0, n = 0.0;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const double c = static_cast<double>(
            out.coincidences.at(s, {std::to_string(a), std::to_string(b)}));
        n += c;
        if (a == b) agree += c;
      }
    }
    const double empirical = (2.0 * agree - n) / n;
    EXPECT_NEAR(empirical, target, 5.0 / std::sqrt(n)) << trials;
  }
}

TEST(Simulate, LhvMixturesStayWithinClassicalBound) {
  Rng seeds(123);
  for (int round = 0; round < 5; ++round) {
    LhvModel model;
    for (int k = 0; k < 6; ++k) {
      LhvStrategy strategy;
      strategy.weight = 1.0 + static_cast<double>(seeds.next() % 5);
      strategy.outcome_for_setting = {
          {static_cast<int>(seeds.next() % 2),
           static_cast<int>(seeds.next() % 2)},
          {static_cast<int>(seeds.next() % 2),
           static_cast<int>(seeds.next() % 2)}};
      model.strategies.push_back(std::move(strategy));
    }
    SimulationConfig config;
    config.layout = PartyLayout::binary_pair();
    config.model = model;
    config.trials = 200000;
    config.seed = seeds.next();
    const SimulationOutput out = simulate(config);

    Eigen::Matrix2d empirical;
    double sigma2 = 0.0;
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        const Tuple s{std::to_string(x), std::to_string(y)};
        double agree = 0.0, n = 0.0;
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            const double c = static_cast<double>(out.coincidences.at(
                s, {std::to_string(a), std::to_string(b)}));
            n += c;
            if (a == b) agree += c;
          }
        }
        empirical(x, y) = (2.0 * agree - n) / n;
        sigma2 += 1.0 / n;
      }
    }
    for (const auto sign : {ChshSign::kNegate00, ChshSign::kNegate01,
                            ChshSign::kNegate10, ChshSign::kNegate11}) {
      EXPECT_LE(std::abs(chsh_value(empirical, sign)),
                2.0 + 5.0 * std::sqrt(sigma2));
    }
  }
}

TEST(Simulate, UniformSettingsPassUniformityCheck) {
  SimulationConfig config = singlet_config(400000, 21);
  const SimulationOutput out = simulate(config);
  std::vector<std::int64_t> totals;
  for (std::size_t s = 0; s < 4; ++s) {
    totals.push_back(out.coincidences.setting_total_index(s));
  }
  const Chi2Result r = uniformity_chi2(totals);
  EXPECT_GT(r.p_raw, 1e-4);
}

TEST(Simulate, RejectsInvalidConfigs) {
  SimulationConfig config = singlet_config(10, 1);
  config.setting_distribution = {0.5, 0.5};  // wrong arity
  EXPECT_THROW(simulate(config), std::invalid_argument);

  config = singlet_config(10, 1);
  config.setting_distribution = {0.5, 0.5, 0.5, 0.5};  // sums to 2
  EXPECT_THROW(simulate(config), std::invalid_argument);

  config = singlet_config(10, 1);
  SignalingModel bad;
  bad.probs.assign(16, 0.0);  // rows sum to 0
  config.model = bad;
  EXPECT_THROW(simulate(config), std::invalid_argument);

  config = singlet_config(-1, 1);
  EXPECT_THROW(simulate(config), std::invalid_argument);
}

TEST(Simulate, CombinedEfficiencyKeepsIdealSubtableNull) {
  // Ideal singlet at the standard angles, thinned by eta_a(X,A) and
  // eta_b(Y,B): the combined factorization cancels in the ideal-angle
  // subtable cross-ratio, so its test stays calibrated at alpha.
  const double ea[2][2] = {{0.90, 0.80}, {0.70, 0.95}};  // [x][a]
  const double eb[2][2] = {{0.85, 0.75}, {0.90, 0.65}};  // [y][b]
  SimulationConfig config = singlet_config(20000, 0);
  EfficiencyMap eta_a(4, 2), eta_b(4, 2);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int o = 0; o < 2; ++o) {
        eta_a.at(x * 2 + y, o) = ea[x][o];
        eta_b.at(x * 2 + y, o) = eb[y][o];
      }
    }
  }
  config.efficiency = {eta_a, eta_b};

  EqualitySpec spec;
  spec.settings = {Tuple{"1", "0"}, Tuple{"1", "1"}};
  spec.outcomes = {Tuple{"0", "0"}, Tuple{"1", "0"}};

  const int reps = 1000;
  const Rng root(4242);
  int rejections = 0;
  for (int rep = 0; rep < reps; ++rep) {
    config.seed = root.child(static_cast<std::uint64_t>(rep)).seed();
    const SimulationOutput out = simulate(config);
    rejections +=
        outcome_efficiency_check(out.coincidences, spec).p_raw < 0.05;
  }
  const double rate = static_cast<double>(rejections) / reps;
  EXPECT_NEAR(rate, 0.05, 0.025);  // ~3.6 binomial SE
}

TEST(Simulate, PlantedRemoteSkewIsDetected) {
  const SimulationConfig config = signaling_skew_config(1000000, 31, 0.05);
  const SimulationOutput out = simulate(config);
  const TestBatteryReport report =
      two_party_battery(out.coincidences, EfficiencyModel::kSettingLocal);
  double best = 1.0;
  std::string which;
  for (const auto& entry : report.entries) {
    if (entry.test.p_corrected < best) {
      best = entry.test.p_corrected;
      which = entry.test.descriptor;
    }
  }
  EXPECT_LT(best, 0.001);
  // The skew rides on Bob's outcome as a function of Alice's setting.
  EXPECT_NE(which.find("B vs X"), std::string::npos) << which;
}

TEST(SimulateToLog, StreamParsesBackToSameTable) {
  const SimulationConfig config = factorized_null_config(5000, 17);
  std::ostringstream log;
  const SimulationOutput out = simulate_to_log(config, log);
  std::istringstream in(log.str());
  const CountTable parsed = read_event_log(in);
  EXPECT_EQ(parsed, out.coincidences);
}

TEST(Calibrate, DegenerateAlphas) {
  const SimulationConfig config = factorized_null_config(2000, 3);
  const BatteryFn battery = [](const CountTable& table) {
    return two_party_battery(table, EfficiencyModel::kSettingLocal);
  };
  const CalibrationResult none = calibrate(config, battery, 0.0, 20);
  for (const auto& [descriptor, rate] : none.rejection_rates) {
    EXPECT_EQ(rate, 0.0);
  }
  const CalibrationResult all = calibrate(config, battery, 1.0, 20);
  ASSERT_EQ(all.rejection_rates.size(), 4u);
  for (const auto& [descriptor, rate] : all.rejection_rates) {
    EXPECT_EQ(rate, 1.0);
  }
}

TEST(Calibrate, NullRatesNearAlpha) {
  // Smoke-sized version; the acceptance suite runs the full budget.
  const SimulationConfig config = factorized_null_config(20000, 8);
  const BatteryFn battery = [](const CountTable& table) {
    return two_party_battery(table, EfficiencyModel::kSettingLocal);
  };
  const CalibrationResult cal = calibrate(config, battery, 0.05, 400);
  ASSERT_EQ(cal.rejection_rates.size(), 4u);
  for (const auto& [descriptor, rate] : cal.rejection_rates) {
    EXPECT_NEAR(rate, 0.05, 0.035) << descriptor;  // ~3 binomial SE for 400
  }
}

}  // namespace
}  // namespace nosignal
