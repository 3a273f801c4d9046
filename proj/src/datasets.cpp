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

#include "nosignal/datasets.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "nosignal/nosig.hpp"

namespace nosignal {

namespace internal {
const std::vector<std::pair<const char*, const char*>>& raw_fixtures();
}

namespace {

WeightedSeries parse_weighted_text(const std::string& text) {
  WeightedSeries series;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("wrow ", 0) != 0) continue;
    std::istringstream row(line.substr(5));
    std::string label;
    row >> label;
    WeightedCounts counts;
    for (int i = 0; i < 4; ++i) {
      double n = 0.0, e = 0.0;
      if (!(row >> n >> e)) {
        throw std::runtime_error("weighted row '" + label +
                                 "' needs four (N, e) pairs");
      }
      counts.cells[i / 2][i % 2] = {n, e * e};
    }
    series.rows.emplace_back(label, counts);
  }
  if (series.rows.empty()) {
    throw std::runtime_error("weighted fixture has no rows");
  }
  return series;
}

Fixture parse_fixture(const std::string& id, const std::string& text) {
  Fixture fixture;
  fixture.id = id;

  // Route metadata lines; everything else stays table/weighted text.
  std::istringstream in(text);
  std::string line;
  std::string body;
  while (std::getline(in, line)) {
    if (line.rfind("published ", 0) == 0) {
      std::istringstream entry(line.substr(10));
      PublishedValue value;
      if (!(entry >> value.chi2 >> value.tolerance)) {
        throw std::runtime_error("fixture " + id +
                                 ": malformed published line: " + line);
      }
      std::getline(entry, value.descriptor);
      const std::size_t start = value.descriptor.find_first_not_of(' ');
      if (start == std::string::npos) {
        throw std::runtime_error("fixture " + id +
                                 ": published line without descriptor");
      }
      value.descriptor = value.descriptor.substr(start);
      fixture.published.push_back(std::move(value));
      continue;
    }
    if (line.rfind("note: ", 0) == 0) {
      fixture.notes.push_back(line.substr(6));
      continue;
    }
    body += line;
    body += '\n';
  }

  if (body.rfind("# nosignal weighted v1", 0) == 0) {
    fixture.data = parse_weighted_text(body);
    std::istringstream scan(body);
    while (std::getline(scan, line)) {
      if (line.rfind("provenance: ", 0) == 0) {
        fixture.provenance = line.substr(12);
      }
    }
  } else {
    std::string provenance;
    fixture.data = parse_table_text(body, &provenance);
    fixture.provenance = provenance;
  }
  return fixture;
}

// --- reproduce_report helpers -------------------------------------------

struct ReportBuilder {
  ComparisonReport report;

  void compare(const std::string& prefix,
               const std::vector<PublishedValue>& published,
               const std::vector<BatteryEntry>& entries) {
    for (const auto& value : published) {
      const BatteryEntry* found = nullptr;
      for (const auto& entry : entries) {
        if (entry.test.descriptor == value.descriptor) {
          found = &entry;
          break;
        }
      }
      add_row(prefix, value, found ? found->test.chi2
                                   : std::numeric_limits<double>::quiet_NaN());
    }
  }

  void add_row(const std::string& prefix, const PublishedValue& value,
               double computed) {
    ComparisonRow row;
    row.descriptor = prefix.empty() ? value.descriptor
                                    : prefix + ": " + value.descriptor;
    row.computed = computed;
    row.published = value.chi2;
    row.tolerance = value.tolerance;
    row.pass = std::isfinite(computed) &&
               std::abs(computed - value.chi2) <= value.tolerance;
    report.all_pass &= row.pass;
    report.rows.push_back(std::move(row));
  }

  const PublishedValue& find_published(const Fixture& fixture,
                                       const std::string& descriptor) {
    for (const auto& value : fixture.published) {
      if (value.descriptor == descriptor) return value;
    }
    throw std::logic_error("fixture " + fixture.id +
                           " lacks published value '" + descriptor + "'");
  }

  void note(std::string text) { report.notes.push_back(std::move(text)); }

  void copy_notes(const Fixture& fixture) {
    for (const auto& n : fixture.notes) {
      report.notes.push_back(fixture.id + ": " + n);
    }
  }
};

std::string format_chi2(double value) {
  std::ostringstream out;
  out.precision(6);
  out << value;
  return out.str();
}

// Cell-by-cell comparison of a regenerated table against the printed
// fixture; differences become notes naming the source of the
// regenerated values.
void check_consistency(ReportBuilder& builder, const CountTable& regenerated,
                       const Fixture& printed, const std::string& source) {
  const CountTable& expected = printed.table();
  if (!(regenerated.layout() == expected.layout())) {
    builder.note(printed.id + ": layout mismatch against " + source);
    return;
  }
  const auto& layout = expected.layout();
  bool clean = true;
  for (std::size_t s = 0; s < layout.num_setting_tuples(); ++s) {
    for (std::size_t o = 0; o < layout.num_outcome_tuples(); ++o) {
      const std::int64_t got = regenerated.at_index(s, o);
      const std::int64_t want = expected.at_index(s, o);
      if (got == want) continue;
      clean = false;
      std::string cell;
      for (std::size_t i = 0; i < layout.num_parties(); ++i) {
        if (i) cell += ',';
        cell += layout.setting_tuple(s)[i];
      }
      cell += " / ";
      for (std::size_t i = 0; i < layout.num_parties(); ++i) {
        if (i) cell += ',';
        cell += layout.outcome_tuple(o)[i];
      }
      builder.note(printed.id + ": printed cell [" + cell + "] = " +
                   std::to_string(want) + " differs from " + source + " (" +
                   std::to_string(got) + ")");
    }
  }
  if (clean) {
    builder.note(printed.id + ": consistent with " + source);
  }
}

MarginalPattern star_except(std::size_t n, std::vector<std::size_t> keep) {
  std::vector<bool> flags(n, false);
  for (std::size_t k : keep) flags[k] = true;
  return MarginalPattern::outcomes(std::move(flags));
}

void reproduce_three_party(ReportBuilder& builder, const std::string& exp,
                           const CausalGraph& graph) {
  const Fixture full = load_fixture(exp + ".full");
  const TestBatteryReport battery = three_party_battery(full.table(), graph);

  std::vector<PublishedValue> battery_published;
  for (const auto& value : full.published) {
    if (value.descriptor.rfind("subtable", 0) != 0) {
      battery_published.push_back(value);
    }
  }
  builder.compare("", battery_published, battery.entries);
  builder.copy_notes(full);

  const std::string source = "marginals of " + full.id;
  const std::string prefix = exp + ".marg.";
  check_consistency(builder, marginalize(full.table(), star_except(3, {0, 1})),
                    load_fixture(prefix + "ab"), source);
  check_consistency(builder, marginalize(full.table(), star_except(3, {0, 2})),
                    load_fixture(prefix + "ac"), source);
  check_consistency(builder, marginalize(full.table(), star_except(3, {1, 2})),
                    load_fixture(prefix + "bc"), source);
  check_consistency(builder, marginalize(full.table(), star_except(3, {0})),
                    load_fixture(prefix + "a"), source);
  check_consistency(builder, marginalize(full.table(), star_except(3, {1})),
                    load_fixture(prefix + "b"), source);
  check_consistency(builder, marginalize(full.table(), star_except(3, {2})),
                    load_fixture(prefix + "c"), source);
  check_consistency(builder, setting_totals(full.table()),
                    load_fixture(exp + ".totals"), source);
  if (exp == "exp5") {
    // The two extra factorization equalities tested on subtables.
    const CountTable marg_bc =
        marginalize(full.table(), star_except(3, {1, 2}));
    const CountTable marg_a = marginalize(full.table(), star_except(3, {0}));
    EqualitySpec first;
    first.settings = {Tuple{"0", "1", "0"}, Tuple{"1", "1", "0"}};
    first.outcomes = {Tuple{"*", "0", "0"}, Tuple{"*", "0", "1"}};
    EqualitySpec second;
    second.settings = {Tuple{"1", "0", "0"}, Tuple{"1", "1", "1"}};
    second.outcomes = {Tuple{"0", "*", "*"}, Tuple{"1", "*", "*"}};
    const Chi2Result sub1 = outcome_efficiency_check(marg_bc, first);
    const Chi2Result sub2 = outcome_efficiency_check(marg_a, second);
    builder.add_row("", builder.find_published(full, sub1.descriptor),
                    sub1.chi2);
    builder.add_row("", builder.find_published(full, sub2.descriptor),
                    sub2.chi2);

    const Chi2Result product = product_condition_check(
        setting_totals(full.table()),
        {Tuple{"0", "0", "0"}, Tuple{"0", "1", "0"}, Tuple{"1", "0", "1"},
         Tuple{"1", "1", "1"}});
    builder.note("factorization-forced product condition on totals "
                 "(000,010 vs 101,111): chi2 = " +
                 format_chi2(product.chi2));
    builder.note("battery size 36; reported correction multiplier was about "
                 "100");
  }
}

const std::array<Tuple, 4> kBinaryQuad = {Tuple{"0", "0"}, Tuple{"0", "1"},
                                          Tuple{"1", "0"}, Tuple{"1", "1"}};

void reproduce_two_party_run(ReportBuilder& builder, const std::string& run,
                             const Fixture& amarg, const Fixture& bmarg,
                             const Fixture* totals,
                             bool detector_asymmetry = false) {
  const TestBatteryReport a_tests =
      two_party_battery(amarg.table(), EfficiencyModel::kSettingLocal);
  const TestBatteryReport b_tests =
      two_party_battery(bmarg.table(), EfficiencyModel::kSettingLocal);
  builder.compare(run, amarg.published, a_tests.entries);

  std::vector<PublishedValue> b_published;
  std::vector<PublishedValue> asym_published;
  for (const auto& value : bmarg.published) {
    // "B vs Y" rows belong to the detector-asymmetry check.
    if (value.descriptor.find(" vs Y") != std::string::npos &&
        value.descriptor[0] == 'B') {
      asym_published.push_back(value);
    } else {
      b_published.push_back(value);
    }
  }
  builder.compare(run, b_published, b_tests.entries);
  if (detector_asymmetry) {
    const TestBatteryReport asym = detector_asymmetry_check(bmarg.table());
    builder.compare(run, asym_published, asym.entries);
  }

  if (totals) {
    const Chi2Result product =
        product_condition_check(totals->table(), kBinaryQuad);
    if (totals->published.empty()) {
      builder.note(totals->id + ": totals independence chi2 = " +
                   format_chi2(product.chi2));
    } else {
      builder.add_row(run, totals->published.front(), product.chi2);
    }
  }
  builder.copy_notes(amarg);
  builder.copy_notes(bmarg);
  if (totals) builder.copy_notes(*totals);
}

void reproduce_exp4(ReportBuilder& builder) {
  // QRN1: the full table is canonical; its printed marginals are
  // regenerated and any difference reported.
  const Fixture full = load_fixture("exp4.qrn1.full");
  const TestBatteryReport battery =
      two_party_battery(full.table(), EfficiencyModel::kSettingLocal);
  std::vector<PublishedValue> battery_published;
  for (const auto& value : full.published) {
    if (value.descriptor.rfind("A vs", 0) == 0 ||
        value.descriptor.rfind("B vs", 0) == 0) {
      battery_published.push_back(value);
    }
  }
  builder.compare("qrn1", battery_published, battery.entries);

  const Chi2Result product =
      product_condition_check(setting_totals(full.table()), kBinaryQuad);
  builder.add_row("qrn1",
                  builder.find_published(full, product.descriptor),
                  product.chi2);

  EqualitySpec spec;
  spec.settings = {Tuple{"1", "0"}, Tuple{"1", "1"}};
  spec.outcomes = {Tuple{"0", "0"}, Tuple{"1", "0"}};
  const Chi2Result subtable = outcome_efficiency_check(full.table(), spec);
  builder.add_row("qrn1", builder.find_published(full, subtable.descriptor),
                  subtable.chi2);

  check_consistency(builder,
                    marginalize(full.table(),
                                MarginalPattern::outcomes({true, false})),
                    load_fixture("exp4.qrn1.amarg"), "marginals of " + full.id);
  check_consistency(builder,
                    marginalize(full.table(),
                                MarginalPattern::outcomes({false, true})),
                    load_fixture("exp4.qrn1.bmarg"), "marginals of " + full.id);
  check_consistency(builder, setting_totals(full.table()),
                    load_fixture("exp4.qrn1.totals"),
                    "marginals of " + full.id);

  for (const std::string run : {"hrn1", "hrn2", "db2"}) {
    const Fixture amarg = load_fixture("exp4." + run + ".amarg");
    const Fixture bmarg = load_fixture("exp4." + run + ".bmarg");
    const Fixture totals = load_fixture("exp4." + run + ".totals");
    reproduce_two_party_run(builder, run, amarg, bmarg, &totals);
  }
}

void reproduce_exp6(ReportBuilder& builder) {
  for (const std::string run : {"hrn", "qrn"}) {
    const Fixture amarg = load_fixture("exp6." + run + ".amarg");
    const Fixture bmarg = load_fixture("exp6." + run + ".bmarg");
    const Fixture totals = load_fixture("exp6." + run + ".totals");
    reproduce_two_party_run(builder, run, amarg, bmarg, &totals,
                            /*detector_asymmetry=*/true);

    // The printed totals column is shared by both marginal tables;
    // cross-check the row sums.
    check_consistency(builder, setting_totals(amarg.table()), totals,
                      "row sums of " + amarg.id);
    check_consistency(builder, setting_totals(bmarg.table()), totals,
                      "row sums of " + bmarg.id);
  }
}

void reproduce_exp9(ReportBuilder& builder) {
  const Fixture amarg = load_fixture("exp9.amarg");
  const Fixture bmarg = load_fixture("exp9.bmarg");
  reproduce_two_party_run(builder, "", amarg, bmarg, nullptr);

  const Fixture trials = load_fixture("exp9.trials");
  const Chi2Result product =
      product_condition_check(trials.table(), kBinaryQuad);
  builder.note("trial counts per setting tuple: independence chi2 = " +
               format_chi2(product.chi2) +
               " (the parties' choices are correlated)");
}

void reproduce_exp10(ReportBuilder& builder) {
  const Fixture fixture = load_fixture("exp10.weighted");
  std::vector<BatteryEntry> entries;
  for (const auto& [label, counts] : fixture.weighted().rows) {
    BatteryEntry entry;
    entry.test = weighted_chi2(counts, "weighted | phase=" + label);
    entries.push_back(std::move(entry));
  }
  builder.compare("", fixture.published, entries);
  builder.copy_notes(fixture);
}

void reproduce_exp12(ReportBuilder& builder) {
  const Fixture full = load_fixture("exp12.full");
  const Chi2Result consistency = correlation_consistency_check(
      full.table(), {Tuple{"0", "1"}, Tuple{"1", "0"}});
  builder.add_row("", builder.find_published(full, consistency.descriptor),
                  consistency.chi2);

  const Chi2Result product =
      product_condition_check(setting_totals(full.table()), kBinaryQuad);
  builder.add_row("", builder.find_published(full, product.descriptor),
                  product.chi2);

  const TestBatteryReport battery =
      two_party_battery(full.table(), EfficiencyModel::kSettingLocal);
  for (const auto& entry : battery.entries) {
    builder.note("no-signaling test " + entry.test.descriptor + ": chi2 = " +
                 format_chi2(entry.test.chi2) + " (not published; small)");
  }

  check_consistency(builder,
                    marginalize(full.table(),
                                MarginalPattern::outcomes({true, false})),
                    load_fixture("exp12.amarg"), "marginals of " + full.id);
  check_consistency(builder,
                    marginalize(full.table(),
                                MarginalPattern::outcomes({false, true})),
                    load_fixture("exp12.bmarg"), "marginals of " + full.id);
  check_consistency(builder, setting_totals(full.table()),
                    load_fixture("exp12.totals"), "marginals of " + full.id);
}

void reproduce_exp13(ReportBuilder& builder) {
  const Fixture abins = load_fixture("exp13.abins");
  const Fixture bbins = load_fixture("exp13.bbins");
  const Fixture totals = load_fixture("exp13.totals");

  // Per-bin battery with the reported look-elsewhere multiplier of 32.
  const TestBatteryReport a_tests = two_party_battery(
      abins.table(), EfficiencyModel::kSettingLocal,
      MultiBinMode::kPerBinVsReference, 32);
  builder.compare("", abins.published, a_tests.entries);
  for (const auto& entry : a_tests.entries) {
    if (entry.test.descriptor == "A(bin 11 vs 0) vs Y | X=0") {
      builder.note("A(bin 11 vs 0) vs Y | X=0: p_raw = " +
                   format_chi2(entry.test.p_raw) + ", corrected x32 = " +
                   format_chi2(entry.test.p_corrected));
    }
  }
  const TestBatteryReport b_tests = two_party_battery(
      bbins.table(), EfficiencyModel::kSettingLocal,
      MultiBinMode::kPerBinVsReference, 32);
  double b_max = 0.0;
  for (const auto& entry : b_tests.entries) {
    b_max = std::max(b_max, entry.test.chi2);
  }
  builder.note("largest chi2 among the 30 B-side bin tests: " +
               format_chi2(b_max));

  const Chi2Result product =
      product_condition_check(totals.table(), kBinaryQuad);
  builder.add_row("", totals.published.front(), product.chi2);

  check_consistency(builder, setting_totals(abins.table()), totals,
                    "column sums of " + abins.id);
  check_consistency(builder, setting_totals(bbins.table()), totals,
                    "column sums of " + bbins.id);

  builder.copy_notes(abins);
  builder.copy_notes(bbins);
}

}  // namespace

Fixture load_fixture(const std::string& id) {
  for (const auto& [key, text] : internal::raw_fixtures()) {
    if (id == key) return parse_fixture(id, text);
  }
  std::string available;
  for (const auto& [key, text] : internal::raw_fixtures()) {
    if (!available.empty()) available += ", ";
    available += key;
  }
  throw std::invalid_argument("unknown fixture '" + id + "'; available: " +
                              available);
}

std::vector<std::string> fixture_ids() {
  std::vector<std::string> ids;
  for (const auto& [key, text] : internal::raw_fixtures()) {
    ids.emplace_back(key);
  }
  return ids;
}

std::vector<std::string> reproducible_experiments() {
  return {"2", "4", "5", "6", "9", "10", "12", "13"};
}

ComparisonReport reproduce_report(const std::string& experiment_id) {
  ReportBuilder builder;
  builder.report.experiment = experiment_id;
  if (experiment_id == "2") {
    reproduce_three_party(builder, "exp2", CausalGraph::sequential_three());
  } else if (experiment_id == "4") {
    reproduce_exp4(builder);
  } else if (experiment_id == "5") {
    reproduce_three_party(builder, "exp5", CausalGraph::local(3));
  } else if (experiment_id == "6") {
    reproduce_exp6(builder);
  } else if (experiment_id == "9") {
    reproduce_exp9(builder);
  } else if (experiment_id == "10") {
    reproduce_exp10(builder);
  } else if (experiment_id == "12") {
    reproduce_exp12(builder);
  } else if (experiment_id == "13") {
    reproduce_exp13(builder);
  } else {
    std::string available;
    for (const auto& id : reproducible_experiments()) {
      if (!available.empty()) available += ", ";
      available += id;
    }
    throw std::invalid_argument("no published values for experiment '" +
                                experiment_id + "'; available: " + available);
  }
  return builder.report;
}

}  // namespace nosignal
