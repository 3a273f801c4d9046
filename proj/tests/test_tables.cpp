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

#include "nosignal/tables.hpp"

#include <random>
#include <sstream>

#include "gtest/gtest.h"

#include "nosignal/datasets.hpp"

namespace nosignal {
namespace {

TEST(PartyLayout, ValidatesAlphabets) {
  Party a{"Alice", "X", "A", {"0", "1"}, {"0", "1"}, std::nullopt};
  Party b = a;
  b.name = "Bob";
  EXPECT_NO_THROW(PartyLayout({a, b}));
  EXPECT_THROW(PartyLayout({a}), std::invalid_argument);

  Party dup = b;
  dup.settings = {"0", "0"};
  EXPECT_THROW(PartyLayout({a, dup}), std::invalid_argument);

  Party empty = b;
  empty.outcomes = {};
  EXPECT_THROW(PartyLayout({a, empty}), std::invalid_argument);

  Party bad_nodetect = b;
  bad_nodetect.no_detection = "x";
  EXPECT_THROW(PartyLayout({a, bad_nodetect}), std::invalid_argument);
}

TEST(PartyLayout, IndexRoundTrip) {
  const PartyLayout layout = PartyLayout::binary_triple();
  for (std::size_t s = 0; s < layout.num_setting_tuples(); ++s) {
    EXPECT_EQ(layout.setting_index(layout.setting_tuple(s)), s);
  }
  for (std::size_t o = 0; o < layout.num_outcome_tuples(); ++o) {
    EXPECT_EQ(layout.outcome_index(layout.outcome_tuple(o)), o);
  }
}

TEST(BuildCountTable, EmptyStreamGivesZeros) {
  const CountTable table =
      build_count_table({}, PartyLayout::binary_pair());
  EXPECT_EQ(table.total(), 0);
}

TEST(BuildCountTable, SingletonEvent) {
  const std::vector<Event> events{{{"0", "0"}, {"0", "1"}}};
  const CountTable table =
      build_count_table(events, PartyLayout::binary_pair());
  EXPECT_EQ(table.total(), 1);
  EXPECT_EQ(table.at({"0", "0"}, {"0", "1"}), 1);
  EXPECT_EQ(table.at({"0", "0"}, {"0", "0"}), 0);
}

TEST(BuildCountTable, NamesOffendingEventAndField) {
  const std::vector<Event> events{{{"0", "0"}, {"0", "1"}},
                                  {{"0", "2"}, {"0", "1"}}};
  try {
    build_count_table(events, PartyLayout::binary_pair());
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& err) {
    const std::string what = err.what();
    EXPECT_NE(what.find("event 1"), std::string::npos) << what;
    EXPECT_NE(what.find("'2'"), std::string::npos) << what;
    EXPECT_NE(what.find("Bob"), std::string::npos) << what;
  }
}

TEST(BuildCountTable, MultiplicityMatchesStreamLength) {
  std::mt19937_64 rng(3);
  const PartyLayout layout = PartyLayout::binary_pair();
  std::vector<Event> events;
  for (int i = 0; i < 500; ++i) {
    events.push_back({{std::to_string(rng() % 2), std::to_string(rng() % 2)},
                      {std::to_string(rng() % 2), std::to_string(rng() % 2)}});
  }
  const CountTable table = build_count_table(events, layout);
  EXPECT_EQ(table.total(), 500);
  EXPECT_EQ(setting_totals(table).total(), 500);
}

TEST(Marginalize, MatchesPrintedMarginals) {
  const CountTable full = load_fixture("exp2.full").table();
  const CountTable a_only =
      marginalize(full, MarginalPattern::outcomes({true, false, false}));
  EXPECT_EQ(a_only.at({"0", "0", "0"}, {"0", "*", "*"}), 159);
  const CountTable b_only =
      marginalize(full, MarginalPattern::outcomes({false, true, false}));
  EXPECT_EQ(b_only.at({"0", "0", "0"}, {"*", "0", "*"}), 305);

  const CountTable exp5 = load_fixture("exp5.full").table();
  EXPECT_EQ(setting_totals(exp5).setting_total({"0", "1", "0"}), 14103);
}

TEST(Marginalize, OrderIndependent) {
  std::mt19937_64 rng(17);
  const PartyLayout layout = PartyLayout::binary_triple();
  CountTable table(layout);
  for (std::size_t s = 0; s < layout.num_setting_tuples(); ++s) {
    for (std::size_t o = 0; o < layout.num_outcome_tuples(); ++o) {
      table.add_index(s, o, rng() % 50);
    }
  }
  // Star B's and C's outcomes in both orders.
  const CountTable one_pass =
      marginalize(table, MarginalPattern::outcomes({true, false, false}));
  const CountTable two_pass = marginalize(
      marginalize(table, MarginalPattern::outcomes({true, false, true})),
      MarginalPattern::outcomes({true, true, false}));
  EXPECT_EQ(one_pass, two_pass);
  const CountTable two_pass_other = marginalize(
      marginalize(table, MarginalPattern::outcomes({true, true, false})),
      MarginalPattern::outcomes({true, false, true}));
  EXPECT_EQ(one_pass, two_pass_other);
}

TEST(Marginalize, PreservesPerSettingTotals) {
  std::mt19937_64 rng(19);
  const PartyLayout layout = PartyLayout::binary_pair();
  CountTable table(layout);
  for (std::size_t s = 0; s < layout.num_setting_tuples(); ++s) {
    for (std::size_t o = 0; o < layout.num_outcome_tuples(); ++o) {
      table.add_index(s, o, rng() % 100);
    }
  }
  const CountTable marginal =
      marginalize(table, MarginalPattern::outcomes({true, false}));
  for (std::size_t s = 0; s < layout.num_setting_tuples(); ++s) {
    EXPECT_EQ(marginal.setting_total(layout.setting_tuple(s)),
              table.setting_total(layout.setting_tuple(s)));
  }
}

TEST(Marginalize, RejectsBadPatterns) {
  const CountTable table{PartyLayout::binary_pair()};
  EXPECT_THROW(
      marginalize(table, MarginalPattern::outcomes({true, true, true})),
      std::invalid_argument);
  MarginalPattern all_starred;
  all_starred.parties = {{false, false}, {false, false}};
  EXPECT_THROW(marginalize(table, all_starred), std::invalid_argument);
}

TEST(SettingTotals, ReproducesPrintedColumns) {
  const CountTable hrn1 = load_fixture("exp4.hrn1.totals").table();
  EXPECT_EQ(hrn1.setting_total({"0", "0"}), 26933);
  EXPECT_EQ(hrn1.setting_total({"0", "1"}), 53764);
  EXPECT_EQ(hrn1.setting_total({"1", "0"}), 29470);
  EXPECT_EQ(hrn1.setting_total({"1", "1"}), 50011);

  const CountTable exp12 = setting_totals(load_fixture("exp12.full").table());
  EXPECT_EQ(exp12.setting_total({"0", "0"}), 5863);
  EXPECT_EQ(exp12.setting_total({"0", "1"}), 5056);
  EXPECT_EQ(exp12.setting_total({"1", "0"}), 5276);
  EXPECT_EQ(exp12.setting_total({"1", "1"}), 4481);
}

TEST(SettingTotals, UniformTableHasEqualTotals) {
  const PartyLayout layout = PartyLayout::binary_pair();
  CountTable table(layout);
  for (std::size_t s = 0; s < layout.num_setting_tuples(); ++s) {
    for (std::size_t o = 0; o < layout.num_outcome_tuples(); ++o) {
      table.add_index(s, o, 7);
    }
  }
  const CountTable totals = setting_totals(table);
  for (std::size_t s = 0; s < layout.num_setting_tuples(); ++s) {
    EXPECT_EQ(totals.setting_total_index(s), 28);
  }
}

TEST(Slice2x2, ExtractsPublishedSubtables) {
  const CountTable hrn1 = load_fixture("exp4.hrn1.amarg").table();
  const Table2x2 a = slice_2x2(hrn1, {Tuple{"0", "0"}, Tuple{"0", "1"}}, 0,
                               {"0", "1"});
  EXPECT_EQ(a.cells(0, 0), 13775);
  EXPECT_EQ(a.cells(0, 1), 13158);
  EXPECT_EQ(a.cells(1, 0), 29096);
  EXPECT_EQ(a.cells(1, 1), 24668);

  const CountTable hrn6 = load_fixture("exp6.hrn.bmarg").table();
  const Table2x2 b = slice_2x2(hrn6, {Tuple{"0", "1"}, Tuple{"1", "1"}}, 1,
                               {"0", "1"});
  EXPECT_EQ(b.cells(0, 0), 2285);
  EXPECT_EQ(b.cells(0, 1), 2603);
  EXPECT_EQ(b.cells(1, 0), 2470);
  EXPECT_EQ(b.cells(1, 1), 2092);

  const CountTable bins = load_fixture("exp13.abins").table();
  const Table2x2 c = slice_2x2(bins, {Tuple{"0", "0"}, Tuple{"0", "1"}}, 0,
                               {"11", "0"});
  EXPECT_EQ(c.cells(0, 0), 2320);
  EXPECT_EQ(c.cells(0, 1), 11636736);
  EXPECT_EQ(c.cells(1, 0), 1869);
  EXPECT_EQ(c.cells(1, 1), 10237027);
}

TEST(Slice2x2, SumsOverOtherOutcomes) {
  const CountTable full = load_fixture("exp4.qrn1.full").table();
  const Table2x2 slice = slice_2x2(full, {Tuple{"0", "0"}, Tuple{"0", "1"}},
                                   0, {"0", "1"});
  EXPECT_EQ(slice.cells(0, 0), 6260 + 26698);
  EXPECT_EQ(slice.cells(1, 1), 5696 + 28284);
}

TEST(Slice2x2, RejectsDegenerateSpecs) {
  const CountTable table = load_fixture("exp4.qrn1.full").table();
  EXPECT_THROW(slice_2x2(table, {Tuple{"0", "0"}, Tuple{"0", "0"}}, 0,
                         {"0", "1"}),
               std::invalid_argument);
  EXPECT_THROW(slice_2x2(table, {Tuple{"0", "0"}, Tuple{"0", "1"}}, 0,
                         {"1", "1"}),
               std::invalid_argument);
  EXPECT_THROW(slice_2x2(table, {Tuple{"0", "0"}, Tuple{"0", "1"}}, 5,
                         {"0", "1"}),
               std::invalid_argument);
}

TEST(EventLog, RoundTrips) {
  const PartyLayout layout = PartyLayout::binary_pair();
  CountTable table(layout);
  table.add({"0", "0"}, {"0", "1"}, 3);
  table.add({"1", "0"}, {"1", "1"}, 2);
  table.add({"0", "1"}, {"0", "0"}, 1);

  std::ostringstream out;
  write_event_log_header(out, layout);
  for (std::size_t s = 0; s < layout.num_setting_tuples(); ++s) {
    for (std::size_t o = 0; o < layout.num_outcome_tuples(); ++o) {
      for (std::int64_t i = 0; i < table.at_index(s, o); ++i) {
        write_event_log_event(out, layout, s, o);
      }
    }
  }
  std::istringstream in(out.str());
  EXPECT_EQ(read_event_log(in), table);
}

TEST(EventLog, NoDetectionToken) {
  const std::string log =
      "# nosignal event log v1\n"
      "# party Alice setting=X outcome=A settings=0,1 outcomes=0,1,n "
      "nodetect=n\n"
      "# party Bob setting=Y outcome=B settings=0,1 outcomes=0,1\n"
      "X Y A B\n"
      "0 1 - 0\n";
  std::istringstream in(log);
  const CountTable table = read_event_log(in);
  EXPECT_EQ(table.at({"0", "1"}, {"n", "0"}), 1);

  const std::string bad =
      "# nosignal event log v1\n"
      "# party Alice setting=X outcome=A settings=0,1 outcomes=0,1\n"
      "# party Bob setting=Y outcome=B settings=0,1 outcomes=0,1\n"
      "X Y A B\n"
      "0 1 - 0\n";
  std::istringstream bad_in(bad);
  try {
    read_event_log(bad_in);
    FAIL() << "expected error for '-' without a no-detection label";
  } catch (const std::runtime_error& err) {
    EXPECT_NE(std::string(err.what()).find("line 5"), std::string::npos);
  }
}

TEST(EventLog, ReportsLineOfBadEvent) {
  const std::string log =
      "# nosignal event log v1\n"
      "# party Alice setting=X outcome=A settings=0,1 outcomes=0,1\n"
      "# party Bob setting=Y outcome=B settings=0,1 outcomes=0,1\n"
      "X Y A B\n"
      "0 0 0 0\n"
      "0 2 0 0\n";
  std::istringstream in(log);
  try {
    read_event_log(in);
    FAIL() << "expected error";
  } catch (const std::runtime_error& err) {
    const std::string what = err.what();
    EXPECT_NE(what.find("line 6"), std::string::npos) << what;
  }
}

TEST(TableText, RoundTrips) {
  const CountTable original = load_fixture("exp2.full").table();
  std::string provenance;
  const CountTable parsed =
      parse_table_text(to_table_text(original, "check"), &provenance);
  EXPECT_EQ(parsed, original);
  EXPECT_EQ(provenance, "check");
}

TEST(TableText, RowAndCountFormsAgree) {
  const std::string rows =
      "# nosignal table v1\n"
      "party Alice setting=X outcome=A settings=0,1 outcomes=0,1\n"
      "party Bob setting=Y outcome=B settings=0,1 outcomes=0,1\n"
      "row 0,0 1 2 3 4\n";
  const std::string counts =
      "# nosignal table v1\n"
      "party Alice setting=X outcome=A settings=0,1 outcomes=0,1\n"
      "party Bob setting=Y outcome=B settings=0,1 outcomes=0,1\n"
      "count 0,0 0,0 1\n"
      "count 0,0 0,1 2\n"
      "count 0,0 1,0 3\n"
      "count 0,0 1,1 4\n";
  EXPECT_EQ(parse_table_text(rows), parse_table_text(counts));
}

}  // namespace
}  // namespace nosignal
