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

#include "nosignal/nosig.hpp"

#include <algorithm>
#include <stdexcept>

namespace nosignal {

namespace {

bool has_real_outcomes(const Party& p) {
  return !(p.outcomes.size() == 1 && p.outcomes[0] == kStarLabel);
}

std::string join(const Tuple& tuple) {
  std::string out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ',';
    out += tuple[i];
  }
  return out;
}

// Conditioning half of a descriptor: "X=0" or "X=1,Z=0".
std::string conditioning_text(const PartyLayout& layout,
                              const std::vector<std::size_t>& parties,
                              const Tuple& settings) {
  std::string out;
  for (std::size_t i = 0; i < parties.size(); ++i) {
    if (i) out += ',';
    out += layout.party(parties[i]).setting_name + "=" + settings[parties[i]];
  }
  return out;
}

void apply_correction(TestBatteryReport& report,
                      std::optional<int> correction_override) {
  report.multiplier = correction_override.value_or(
      static_cast<int>(report.entries.size()));
  if (report.multiplier < 1) report.multiplier = 1;
  for (auto& entry : report.entries) {
    entry.test = bonferroni(entry.test, {report.multiplier});
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const BatteryEntry& a, const BatteryEntry& b) {
              return a.test.descriptor < b.test.descriptor;
            });
  std::sort(report.skipped.begin(), report.skipped.end());
}

// One independence test: outcome of `op` against the choice of `cp`,
// all other choices fixed as in `base` (cp's slot is overwritten).
// Returns tests per requested column pair; degenerate slices land in
// `skipped`.
void emit_pair_tests(const CountTable& table, std::size_t cp, std::size_t op,
                     const Tuple& base,
                     const std::vector<std::size_t>& cond_parties,
                     MultiBinMode multibin, TestBatteryReport& report) {
  const PartyLayout& layout = table.layout();
  const Party& choice = layout.party(cp);
  const Party& outcome = layout.party(op);
  if (choice.settings.size() != 2) {
    throw std::invalid_argument("battery requires binary settings; party '" +
                                choice.name + "' has " +
                                std::to_string(choice.settings.size()));
  }

  std::array<Tuple, 2> rows{base, base};
  rows[0][cp] = choice.settings[0];
  rows[1][cp] = choice.settings[1];

  const std::string condition =
      conditioning_text(layout, cond_parties, base);
  const std::string pair_name =
      outcome.outcome_name + " vs " + choice.setting_name;

  const auto run = [&](const std::array<std::string, 2>& cols,
                       const std::string& descriptor) {
    try {
      for (int r = 0; r < 2; ++r) {
        if (table.setting_total(rows[r]) == 0) {
          throw std::invalid_argument("no events at settings " +
                                      join(rows[r]));
        }
      }
      Chi2Result test =
          pearson_chi2(slice_2x2(table, rows, op, cols), descriptor);
      report.entries.push_back({std::move(test), CausalStatus::kForbidden});
    } catch (const std::invalid_argument& err) {
      report.skipped.emplace_back(descriptor, err.what());
    }
  };

  if (outcome.outcomes.size() == 2) {
    run({outcome.outcomes[0], outcome.outcomes[1]},
        pair_name + " | " + condition);
    return;
  }

  // Multi-bin outcome alphabet.
  if (multibin == MultiBinMode::kPerBinVsReference) {
    if (!outcome.no_detection) {
      throw std::invalid_argument(
          "per-bin tests need a no-detection reference bin for party '" +
          outcome.name + "'");
    }
    for (const auto& bin : outcome.outcomes) {
      if (bin == *outcome.no_detection) continue;
      run({bin, *outcome.no_detection},
          outcome.outcome_name + "(bin " + bin + " vs " +
              *outcome.no_detection + ") vs " + choice.setting_name + " | " +
              condition);
    }
    return;
  }

  // Full 2 x k table.
  const std::string descriptor =
      outcome.outcome_name + "(all bins) vs " + choice.setting_name + " | " +
      condition;
  try {
    const std::size_t k = outcome.outcomes.size();
    Eigen::MatrixXd observed = Eigen::MatrixXd::Zero(2, k);
    for (int r = 0; r < 2; ++r) {
      if (table.setting_total(rows[r]) == 0) {
        throw std::invalid_argument("no events at settings " + join(rows[r]));
      }
      for (std::size_t o = 0; o < layout.num_outcome_tuples(); ++o) {
        const Tuple tuple = layout.outcome_tuple(o);
        const int col = layout.outcome_label_index(op, tuple[op]);
        observed(r, col) += static_cast<double>(
            table.at_index(layout.setting_index(rows[r]), o));
      }
    }
    report.entries.push_back(
        {pearson_chi2(observed, descriptor), CausalStatus::kForbidden});
  } catch (const std::invalid_argument& err) {
    report.skipped.emplace_back(descriptor, err.what());
  }
}

// All conditioning assignments for the given parties, lexicographic.
std::vector<Tuple> conditioning_tuples(
    const PartyLayout& layout, const std::vector<std::size_t>& cond_parties) {
  std::vector<Tuple> result;
  Tuple base(layout.num_parties(), "");
  for (std::size_t i = 0; i < layout.num_parties(); ++i) {
    base[i] = layout.party(i).settings[0];
  }
  std::size_t combos = 1;
  for (std::size_t p : cond_parties) combos *= layout.party(p).settings.size();
  for (std::size_t c = 0; c < combos; ++c) {
    Tuple tuple = base;
    std::size_t rest = c;
    for (std::size_t i = cond_parties.size(); i-- > 0;) {
      const Party& party = layout.party(cond_parties[i]);
      tuple[cond_parties[i]] = party.settings[rest % party.settings.size()];
      rest /= party.settings.size();
    }
    result.push_back(std::move(tuple));
  }
  return result;
}

}  // namespace

const char* efficiency_model_name(EfficiencyModel model) {
  switch (model) {
    case EfficiencyModel::kSettingLocal: return "setting-local";
    case EfficiencyModel::kOutcomeLocal: return "outcome-local";
    case EfficiencyModel::kCombined: return "combined";
  }
  return "?";
}

CausalGraph CausalGraph::local(std::size_t n_parties) {
  return CausalGraph{n_parties, {}};
}

CausalGraph CausalGraph::sequential_three() {
  return CausalGraph{3, {{0, 1}, {1, 2}}};
}

bool CausalGraph::allows(std::size_t choice_party,
                         std::size_t outcome_party) const {
  if (choice_party == outcome_party) return true;
  return std::find(edges.begin(), edges.end(),
                   std::pair{choice_party, outcome_party}) != edges.end();
}

TestBatteryReport two_party_battery(const CountTable& table,
                                    EfficiencyModel model,
                                    MultiBinMode multibin,
                                    std::optional<int> correction_override) {
  (void)model;  // all factorization variants test the same independences
  const PartyLayout& layout = table.layout();
  if (layout.num_parties() != 2) {
    throw std::invalid_argument("two_party_battery: table has " +
                                std::to_string(layout.num_parties()) +
                                " parties");
  }
  TestBatteryReport report;
  for (std::size_t op = 0; op < 2; ++op) {
    if (!has_real_outcomes(layout.party(op))) continue;
    const std::size_t cp = 1 - op;
    // Condition on the outcome party's own setting.
    const std::vector<std::size_t> cond{op};
    for (const Tuple& base : conditioning_tuples(layout, cond)) {
      emit_pair_tests(table, cp, op, base, cond, multibin, report);
    }
  }
  if (report.entries.empty() && report.skipped.empty()) {
    throw std::invalid_argument(
        "two_party_battery: no testable outcome coordinate");
  }
  apply_correction(report, correction_override);
  return report;
}

TestBatteryReport three_party_battery(const CountTable& table,
                                      const CausalGraph& graph,
                                      std::optional<int> correction_override) {
  const PartyLayout& layout = table.layout();
  if (layout.num_parties() != 3) {
    throw std::invalid_argument("three_party_battery: table has " +
                                std::to_string(layout.num_parties()) +
                                " parties");
  }
  if (graph.n_parties != 3) {
    throw std::invalid_argument("three_party_battery: graph arity mismatch");
  }
  TestBatteryReport report;
  for (std::size_t cp = 0; cp < 3; ++cp) {
    for (std::size_t op = 0; op < 3; ++op) {
      if (!has_real_outcomes(layout.party(op))) continue;
      std::vector<std::size_t> cond;
      for (std::size_t i = 0; i < 3; ++i) {
        if (i != cp) cond.push_back(i);
      }
      const std::size_t first = report.entries.size();
      for (const Tuple& base : conditioning_tuples(layout, cond)) {
        emit_pair_tests(table, cp, op, base, cond,
                        MultiBinMode::kPerBinVsReference, report);
      }
      const CausalStatus status = graph.allows(cp, op)
                                      ? CausalStatus::kAllowed
                                      : CausalStatus::kForbidden;
      for (std::size_t i = first; i < report.entries.size(); ++i) {
        report.entries[i].causal = status;
      }
    }
  }
  apply_correction(report, correction_override);
  return report;
}

Chi2Result product_condition_check(const CountTable& totals,
                                   const std::array<Tuple, 4>& quadruple) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (quadruple[i] == quadruple[j]) {
        throw std::invalid_argument(
            "product_condition_check: duplicate setting tuple " +
            join(quadruple[i]));
      }
    }
  }
  Table2x2 cells;
  for (int i = 0; i < 4; ++i) {
    const std::int64_t n = totals.setting_total(quadruple[i]);
    if (n == 0) {
      throw std::invalid_argument("product_condition_check: zero total at " +
                                  join(quadruple[i]));
    }
    cells.cells(i / 2, i % 2) = static_cast<double>(n);
  }
  cells.row_labels = {join(quadruple[0]) + "|" + join(quadruple[1]),
                      join(quadruple[2]) + "|" + join(quadruple[3])};
  cells.col_labels = {"left", "right"};
  return pearson_chi2(cells, "totals " + join(quadruple[0]) + " " +
                                 join(quadruple[1]) + " " +
                                 join(quadruple[2]) + " " +
                                 join(quadruple[3]));
}

Chi2Result outcome_efficiency_check(const CountTable& table,
                                    const EqualitySpec& spec) {
  Table2x2 cells;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      cells.cells(r, c) = static_cast<double>(
          table.at(spec.settings[r], spec.outcomes[c]));
    }
  }
  cells.row_labels = {join(spec.settings[0]), join(spec.settings[1])};
  cells.col_labels = {join(spec.outcomes[0]), join(spec.outcomes[1])};
  return pearson_chi2(cells, "subtable rows " + join(spec.settings[0]) + " " +
                                 join(spec.settings[1]) + " cols " +
                                 join(spec.outcomes[0]) + " " +
                                 join(spec.outcomes[1]));
}

TestBatteryReport detector_asymmetry_check(const CountTable& table) {
  const PartyLayout& layout = table.layout();
  if (layout.num_parties() != 2) {
    throw std::invalid_argument("detector_asymmetry_check: table has " +
                                std::to_string(layout.num_parties()) +
                                " parties");
  }
  if (!has_real_outcomes(layout.party(1))) {
    throw std::invalid_argument(
        "detector_asymmetry_check: second party's outcome is starred");
  }
  TestBatteryReport report;
  // The second party's outcome against its *own* choice, first setting
  // fixed: the detector model forces identical rows.
  const std::vector<std::size_t> cond{0};
  for (const Tuple& base : conditioning_tuples(layout, cond)) {
    emit_pair_tests(table, 1, 1, base, cond,
                    MultiBinMode::kPerBinVsReference, report);
  }
  apply_correction(report, std::nullopt);
  return report;
}

Chi2Result correlation_consistency_check(const CountTable& table,
                                         const std::array<Tuple, 2>& pair) {
  const PartyLayout& layout = table.layout();
  if (layout.num_parties() != 2) {
    throw std::invalid_argument("correlation_consistency_check: table has " +
                                std::to_string(layout.num_parties()) +
                                " parties");
  }
  for (std::size_t p = 0; p < 2; ++p) {
    if (layout.party(p).outcomes.size() != 2) {
      throw std::invalid_argument(
          "correlation_consistency_check: outcomes must be binary");
    }
  }
  Table2x2 cells;
  for (int r = 0; r < 2; ++r) {
    const std::size_t s = layout.setting_index(pair[r]);
    std::int64_t agree = 0, disagree = 0;
    for (std::size_t o = 0; o < layout.num_outcome_tuples(); ++o) {
      const Tuple outcome = layout.outcome_tuple(o);
      (outcome[0] == outcome[1] ? agree : disagree) += table.at_index(s, o);
    }
    const std::int64_t n = agree + disagree;
    const std::int64_t m = agree - disagree;  // M = N*E
    if (n == 0) {
      throw std::invalid_argument(
          "correlation_consistency_check: zero total at " + join(pair[r]));
    }
    if (m < 0) {
      throw std::invalid_argument(
          "correlation_consistency_check: negative correlation at " +
          join(pair[r]) + " (M=" + std::to_string(m) + ")");
    }
    cells.cells(r, 0) = static_cast<double>(m);
    cells.cells(r, 1) = static_cast<double>(n);
  }
  cells.row_labels = {join(pair[0]), join(pair[1])};
  cells.col_labels = {"M", "N"};
  return pearson_chi2(cells,
                      "M=NE " + join(pair[0]) + " vs " + join(pair[1]));
}

}  // namespace nosignal
