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

#ifndef NOSIGNAL_TABLES_HPP
#define NOSIGNAL_TABLES_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace nosignal {

// Label used for a coordinate that has been summed out.
inline constexpr const char* kStarLabel = "*";

// Reserved event-log token that stands for a party's declared
// no-detection label.
inline constexpr const char* kNoDetectionToken = "-";

// One observer: a setting alphabet (measurement choices) and an outcome
// alphabet. `no_detection`, when set, names the outcome label that means
// "no photon registered" (e.g. bin 0 in a time-bin experiment).
struct Party {
  std::string name;
  std::string setting_name;  // e.g. "X"
  std::string outcome_name;  // e.g. "A"
  std::vector<std::string> settings;
  std::vector<std::string> outcomes;
  std::optional<std::string> no_detection;

  bool operator==(const Party&) const = default;
};

// A tuple of labels, one per party, in party order.
using Tuple = std::vector<std::string>;

// Ordered list of parties. Validated on construction: at least two
// parties, nonempty alphabets, unique labels within each alphabet.
class PartyLayout {
 public:
  PartyLayout() = default;
  explicit PartyLayout(std::vector<Party> parties);

  // Two/three binary parties named Alice/Bob(/Charlie) with settings
  // X,Y(,Z) in {0,1} and outcomes A,B(,C) in {0,1}.
  static PartyLayout binary_pair();
  static PartyLayout binary_triple();

  const std::vector<Party>& parties() const { return parties_; }
  const Party& party(std::size_t i) const { return parties_.at(i); }
  std::size_t num_parties() const { return parties_.size(); }

  std::size_t num_setting_tuples() const { return n_settings_; }
  std::size_t num_outcome_tuples() const { return n_outcomes_; }

  // Label tuple <-> flat index (settings-major mixed radix, party 0
  // varying slowest). Throws std::invalid_argument on unknown labels,
  // naming the offending party and label.
  std::size_t setting_index(const Tuple& settings) const;
  std::size_t outcome_index(const Tuple& outcomes) const;
  Tuple setting_tuple(std::size_t index) const;
  Tuple outcome_tuple(std::size_t index) const;

  int setting_label_index(std::size_t party, std::string_view label) const;
  int outcome_label_index(std::size_t party, std::string_view label) const;

  bool operator==(const PartyLayout&) const = default;

 private:
  std::vector<Party> parties_;
  std::size_t n_settings_ = 0;
  std::size_t n_outcomes_ = 0;
};

// Coincidence counts indexed by (settings tuple, outcomes tuple).
// Cells for unobserved tuples exist and hold zero. Counts are exact
// integers; weighted (real) counts live in Table2x2 / WeightedCounts.
class CountTable {
 public:
  CountTable() = default;
  explicit CountTable(PartyLayout layout);

  const PartyLayout& layout() const { return layout_; }

  std::int64_t at(const Tuple& settings, const Tuple& outcomes) const;
  std::int64_t at_index(std::size_t setting, std::size_t outcome) const;
  void add(const Tuple& settings, const Tuple& outcomes, std::int64_t n = 1);
  void add_index(std::size_t setting, std::size_t outcome, std::int64_t n = 1);

  std::int64_t total() const;
  std::int64_t setting_total(const Tuple& settings) const;
  std::int64_t setting_total_index(std::size_t setting) const;

  bool operator==(const CountTable&) const = default;

 private:
  PartyLayout layout_;
  std::vector<std::int64_t> counts_;  // [setting * n_outcomes + outcome]
};

// Per party: whether the setting / outcome coordinate is kept or summed
// over (starred). At least one coordinate must remain kept.
struct MarginalPattern {
  struct PartyPattern {
    bool keep_setting = true;
    bool keep_outcome = true;
  };
  std::vector<PartyPattern> parties;

  // Keep all settings; keep exactly the outcomes flagged true.
  static MarginalPattern outcomes(std::vector<bool> keep_outcome);
  static MarginalPattern star_all_outcomes(std::size_t n_parties);
};

// 2x2 table of nonnegative reals (real-valued so weighted counts fit).
struct Table2x2 {
  Eigen::Matrix2d cells = Eigen::Matrix2d::Zero();
  std::array<std::string, 2> row_labels;
  std::array<std::string, 2> col_labels;
};

struct Event {
  Tuple settings;
  Tuple outcomes;
};

// Counts event multiplicities. Rejects a nonconforming event naming the
// offending field and the (0-based) record index.
CountTable build_count_table(std::span<const Event> events,
                             const PartyLayout& layout);

// Sums counts over starred coordinates. A starred coordinate keeps its
// position in the layout with the single label "*", so marginal tables
// compare cell-for-cell with tables transcribed in starred form.
CountTable marginalize(const CountTable& table, const MarginalPattern& pattern);

// Per-setting totals: marginalize with every outcome starred.
CountTable setting_totals(const CountTable& table);

// Extracts the 2x2 of marginalized counts for two setting tuples (rows)
// against two outcome labels of one party (columns; all other parties'
// outcomes summed). Identical rows or columns are rejected.
Table2x2 slice_2x2(const CountTable& table, const std::array<Tuple, 2>& rows,
                   std::size_t outcome_party,
                   const std::array<std::string, 2>& outcome_labels);

// --- Event-log format ------------------------------------------------
//
// Delimited text, one event per line, settings columns then outcome
// columns. Header comments declare the layout:
//
//   # nosignal event log v1
//   # party Alice setting=X outcome=A settings=0,1 outcomes=0,1
//   # party Bob setting=Y outcome=B settings=0,1 outcomes=0,1 nodetect=0
//   X Y A B
//   0 1 0 1
//
// In event rows the token "-" stands for the party's declared
// no-detection label; it is an error for a party without one.

void write_event_log_header(std::ostream& out, const PartyLayout& layout);
void write_event_log_event(std::ostream& out, const PartyLayout& layout,
                           std::size_t setting_index,
                           std::size_t outcome_index);
PartyLayout read_event_log_header(std::istream& in, std::size_t* line_no);
CountTable read_event_log(std::istream& in);

// --- Count-table fixture format ---------------------------------------
//
// Self-describing structured text: layout, counts and a provenance
// string. Zero cells may be omitted; they are implied by the layout.
//
//   # nosignal table v1
//   provenance: <free text>
//   party Alice setting=X outcome=A settings=0,1 outcomes=0,1
//   party Bob setting=Y outcome=B settings=0,1 outcomes=0,1
//   count 0,0 0,1 23

std::string to_table_text(const CountTable& table,
                          const std::string& provenance);
CountTable parse_table_text(std::string_view text,
                            std::string* provenance = nullptr);

}  // namespace nosignal

#endif  // NOSIGNAL_TABLES_HPP
