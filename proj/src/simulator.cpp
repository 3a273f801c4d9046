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
#include <map>
#include <ostream>
#include <stdexcept>

namespace nosignal {

namespace {

constexpr double kProbabilityTolerance = 1e-12;

std::vector<double> cumulative(const std::vector<double>& probs) {
  std::vector<double> cum(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cum[i] = acc;
  }
  cum.back() = 1.0;  // guard against rounding at the top
  return cum;
}

std::size_t sample(const std::vector<double>& cum, double u) {
  std::size_t lo = 0, hi = cum.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (u < cum[mid]) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

// Joint outcome distribution per setting tuple, and everything else the
// sampling loop needs in flat form.
struct Sampler {
  std::vector<std::vector<double>> outcome_cum;  // [setting][outcome]
  std::vector<double> setting_cum;
  std::vector<std::vector<double>> detect;  // [party][setting * k + outcome]
  std::vector<std::size_t> outcome_strides;
  std::vector<std::size_t> outcome_sizes;
};

std::vector<std::vector<double>> model_outcome_probs(
    const SimulationConfig& config) {
  const PartyLayout& layout = config.layout;
  const std::size_t n_settings = layout.num_setting_tuples();
  const std::size_t n_outcomes = layout.num_outcome_tuples();
  std::vector<std::vector<double>> probs(
      n_settings, std::vector<double>(n_outcomes, 0.0));

  if (const auto* quantum = std::get_if<CorrelationModel>(&config.model)) {
    if (layout.num_parties() != 2) {
      throw std::invalid_argument("quantum model needs two parties");
    }
    if (quantum->alice_axes.size() != layout.party(0).settings.size() ||
        quantum->bob_axes.size() != layout.party(1).settings.size()) {
      throw std::invalid_argument(
          "quantum model axes do not match the setting alphabets");
    }
    if (layout.party(0).outcomes.size() != 2 ||
        layout.party(1).outcomes.size() != 2) {
      throw std::invalid_argument("quantum model needs binary outcomes");
    }
    for (std::size_t s = 0; s < n_settings; ++s) {
      const std::size_t x = s / layout.party(1).settings.size();
      const std::size_t y = s % layout.party(1).settings.size();
      for (std::size_t o = 0; o < n_outcomes; ++o) {
        probs[s][o] = singlet_outcome_probability(
            *quantum, static_cast<int>(x), static_cast<int>(y),
            static_cast<int>(o / 2), static_cast<int>(o % 2));
      }
    }
    return probs;
  }

  if (const auto* lhv = std::get_if<LhvModel>(&config.model)) {
    if (lhv->strategies.empty()) {
      throw std::invalid_argument("LHV model has no strategies");
    }
    double total_weight = 0.0;
    for (const auto& strategy : lhv->strategies) {
      if (strategy.weight < 0.0) {
        throw std::invalid_argument("LHV strategy weight is negative");
      }
      if (strategy.outcome_for_setting.size() != layout.num_parties()) {
        throw std::invalid_argument("LHV strategy arity mismatch");
      }
      total_weight += strategy.weight;
    }
    if (total_weight <= 0.0) {
      throw std::invalid_argument("LHV strategy weights sum to zero");
    }
    for (std::size_t s = 0; s < n_settings; ++s) {
      const Tuple settings = layout.setting_tuple(s);
      for (const auto& strategy : lhv->strategies) {
        Tuple outcomes(layout.num_parties());
        for (std::size_t p = 0; p < layout.num_parties(); ++p) {
          const int k = layout.setting_label_index(p, settings[p]);
          const int o = strategy.outcome_for_setting[p].at(k);
          outcomes[p] = layout.party(p).outcomes.at(o);
        }
        probs[s][layout.outcome_index(outcomes)] +=
            strategy.weight / total_weight;
      }
    }
    return probs;
  }

  const auto& signaling = std::get<SignalingModel>(config.model);
  if (signaling.probs.size() != n_settings * n_outcomes) {
    throw std::invalid_argument("signaling table size mismatch");
  }
  for (std::size_t s = 0; s < n_settings; ++s) {
    double row = 0.0;
    for (std::size_t o = 0; o < n_outcomes; ++o) {
      const double p = signaling.probs[s * n_outcomes + o];
      if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("signaling probability outside [0,1]");
      }
      probs[s][o] = p;
      row += p;
    }
    if (std::abs(row - 1.0) > kProbabilityTolerance) {
      throw std::invalid_argument(
          "signaling outcome distribution does not sum to 1");
    }
  }
  return probs;
}

Sampler make_sampler(const SimulationConfig& config) {
  const PartyLayout& layout = config.layout;
  const std::size_t n_settings = layout.num_setting_tuples();
  const std::size_t n_parties = layout.num_parties();

  Sampler sampler;
  const auto probs = model_outcome_probs(config);
  sampler.outcome_cum.reserve(n_settings);
  for (const auto& row : probs) sampler.outcome_cum.push_back(cumulative(row));

  std::vector<double> setting_probs = config.setting_distribution;
  if (setting_probs.empty()) {
    setting_probs.assign(n_settings, 1.0 / static_cast<double>(n_settings));
  }
  if (setting_probs.size() != n_settings) {
    throw std::invalid_argument("setting distribution size mismatch");
  }
  double total = 0.0;
  for (double p : setting_probs) {
    if (p < 0.0 || p > 1.0) {
      throw std::invalid_argument("setting probability outside [0,1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    throw std::invalid_argument("setting distribution does not sum to 1");
  }
  sampler.setting_cum = cumulative(setting_probs);

  if (!config.efficiency.empty() && config.efficiency.size() != n_parties) {
    throw std::invalid_argument("efficiency maps must cover every party");
  }
  sampler.detect.resize(n_parties);
  sampler.outcome_sizes.resize(n_parties);
  sampler.outcome_strides.assign(n_parties, 1);
  for (std::size_t p = n_parties; p-- > 0;) {
    sampler.outcome_sizes[p] = layout.party(p).outcomes.size();
    if (p + 1 < n_parties) {
      sampler.outcome_strides[p] =
          sampler.outcome_strides[p + 1] * layout.party(p + 1).outcomes.size();
    }
  }
  for (std::size_t p = 0; p < n_parties; ++p) {
    const std::size_t k = sampler.outcome_sizes[p];
    sampler.detect[p].assign(n_settings * k, 1.0);
    if (config.efficiency.empty() || config.efficiency[p].empty()) continue;
    for (std::size_t s = 0; s < n_settings; ++s) {
      for (std::size_t o = 0; o < k; ++o) {
        const double eta = config.efficiency[p].at(s, o);
        if (eta < 0.0 || eta > 1.0) {
          throw std::invalid_argument("efficiency outside [0,1]");
        }
        sampler.detect[p][s * k + o] = eta;
      }
    }
  }
  return sampler;
}

PartyLayout singles_layout(const PartyLayout& layout, std::size_t party) {
  std::vector<Party> parties = layout.parties();
  for (std::size_t i = 0; i < parties.size(); ++i) {
    if (i != party) {
      parties[i].outcomes = {kStarLabel};
      parties[i].no_detection.reset();
    }
  }
  return PartyLayout(std::move(parties));
}

SimulationOutput run_simulation(const SimulationConfig& config,
                                std::ostream* log, bool include_partial) {
  if (config.trials < 0) {
    throw std::invalid_argument("trials must be nonnegative");
  }
  const PartyLayout& layout = config.layout;
  const std::size_t n_parties = layout.num_parties();
  const Sampler sampler = make_sampler(config);

  SimulationOutput output;
  output.coincidences = CountTable(layout);
  output.singles.reserve(n_parties);
  std::vector<PartyLayout> single_layouts;
  for (std::size_t p = 0; p < n_parties; ++p) {
    single_layouts.push_back(singles_layout(layout, p));
    output.singles.emplace_back(single_layouts.back());
  }

  if (log) write_event_log_header(*log, layout);

  Rng rng(config.seed);
  std::vector<bool> detected(n_parties);
  for (std::int64_t trial = 0; trial < config.trials; ++trial) {
    const std::size_t s = sample(sampler.setting_cum, rng.uniform());
    const std::size_t o = sample(sampler.outcome_cum[s], rng.uniform());
    std::size_t n_detected = 0;
    for (std::size_t p = 0; p < n_parties; ++p) {
      const std::size_t op = (o / sampler.outcome_strides[p]) %
                             sampler.outcome_sizes[p];
      detected[p] =
          rng.bernoulli(sampler.detect[p][s * sampler.outcome_sizes[p] + op]);
      n_detected += detected[p];
    }
    if (n_detected == n_parties) {
      output.coincidences.add_index(s, o);
      if (log) write_event_log_event(*log, layout, s, o);
      continue;
    }
    if (n_detected == 0) {
      ++output.double_losses;
      continue;
    }
    ++output.partial_detections;
    Tuple outcomes = layout.outcome_tuple(o);
    for (std::size_t p = 0; p < n_parties; ++p) {
      if (!detected[p]) continue;
      Tuple starred(n_parties, kStarLabel);
      starred[p] = outcomes[p];
      output.singles[p].add(layout.setting_tuple(s), starred);
    }
    if (log && include_partial) {
      const Tuple settings = layout.setting_tuple(s);
      for (const auto& label : settings) *log << label << ' ';
      for (std::size_t p = 0; p < n_parties; ++p) {
        *log << (detected[p] ? outcomes[p] : std::string(kNoDetectionToken))
             << (p + 1 < n_parties ? ' ' : '\n');
      }
    }
  }
  return output;
}

}  // namespace

EfficiencyMap::EfficiencyMap(std::size_t n_setting_tuples,
                             std::size_t n_outcomes, double value)
    : p_(n_setting_tuples * n_outcomes, value), n_outcomes_(n_outcomes) {}

double EfficiencyMap::at(std::size_t setting_tuple,
                         std::size_t outcome) const {
  return p_.at(setting_tuple * n_outcomes_ + outcome);
}

double& EfficiencyMap::at(std::size_t setting_tuple, std::size_t outcome) {
  return p_.at(setting_tuple * n_outcomes_ + outcome);
}

SimulationOutput simulate(const SimulationConfig& config) {
  return run_simulation(config, nullptr, false);
}

SimulationOutput simulate_to_log(const SimulationConfig& config,
                                 std::ostream& log, bool include_partial) {
  return run_simulation(config, &log, include_partial);
}

CalibrationResult calibrate(const SimulationConfig& config,
                            const BatteryFn& battery, double alpha,
                            int replications) {
  if (replications < 1) {
    throw std::invalid_argument("calibrate: replications must be >= 1");
  }
  if (alpha < 0.0 || alpha > 1.0) {
    throw std::invalid_argument("calibrate: alpha outside [0,1]");
  }
  const Rng root(config.seed);
  std::map<std::string, std::int64_t> hits;
  for (int rep = 0; rep < replications; ++rep) {
    SimulationConfig rep_config = config;
    rep_config.seed = root.child(static_cast<std::uint64_t>(rep)).seed();
    const SimulationOutput output = simulate(rep_config);
    const TestBatteryReport report = battery(output.coincidences);
    for (const auto& entry : report.entries) {
      hits[entry.test.descriptor] += entry.test.p_raw < alpha ? 1 : 0;
    }
  }
  CalibrationResult result;
  result.replications = replications;
  for (const auto& [descriptor, count] : hits) {
    result.rejection_rates.emplace_back(
        descriptor, static_cast<double>(count) / replications);
  }
  return result;
}

SimulationConfig singlet_config(std::int64_t trials, std::uint64_t seed,
                                double visibility) {
  SimulationConfig config;
  config.layout = PartyLayout::binary_pair();
  config.model = chsh_singlet(visibility);
  config.trials = trials;
  config.seed = seed;
  return config;
}

SimulationConfig factorized_null_config(std::int64_t trials,
                                        std::uint64_t seed) {
  SimulationConfig config;
  config.layout = PartyLayout::binary_pair();

  // Product outcome distribution p(A|X) p(B|Y), mildly setting
  // dependent on both sides.
  const double pa[2] = {0.55, 0.48};  // p(A=0|X)
  const double pb[2] = {0.52, 0.45};  // p(B=0|Y)
  SignalingModel model;
  model.probs.resize(16);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const double p = (a == 0 ? pa[x] : 1 - pa[x]) *
                           (b == 0 ? pb[y] : 1 - pb[y]);
          model.probs[(x * 2 + y) * 4 + a * 2 + b] = p;
        }
      }
    }
  }
  config.model = model;

  // Setting-local detection efficiencies: the factorization the
  // batteries are built to tolerate.
  EfficiencyMap eta_a(4, 2), eta_b(4, 2);
  const double ea[2] = {0.90, 0.80};  // by X
  const double eb[2] = {0.85, 0.95};  // by Y
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int o = 0; o < 2; ++o) {
        eta_a.at(x * 2 + y, o) = ea[x];
        eta_b.at(x * 2 + y, o) = eb[y];
      }
    }
  }
  config.efficiency = {eta_a, eta_b};
  config.setting_distribution = {0.3, 0.2, 0.3, 0.2};
  config.trials = trials;
  config.seed = seed;
  return config;
}

SimulationConfig signaling_skew_config(std::int64_t trials,
                                       std::uint64_t seed, double skew) {
  if (skew < 0.0 || skew > 1.0) {
    throw std::invalid_argument("signaling_skew_config: skew outside [0,1]");
  }
  SimulationConfig config = factorized_null_config(trials, seed);
  // Bob's outcome-1 detector loses efficiency whenever the *remote*
  // setting X is 1. Not expressible as eta_b(Y, B): genuine signaling
  // through the detection channel.
  for (int y = 0; y < 2; ++y) {
    config.efficiency[1].at(2 + y, 1) *= 1.0 - skew;
  }
  return config;
}

}  // namespace nosignal
