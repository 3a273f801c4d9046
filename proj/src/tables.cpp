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

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace nosignal {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      return parts;
    }
    parts.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

void check_alphabet(const std::string& party, const char* kind,
                    const std::vector<std::string>& labels) {
  if (labels.empty()) {
    throw std::invalid_argument("party '" + party + "' has an empty " + kind +
                                " alphabet");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw std::invalid_argument("party '" + party + "' has an empty " +
                                  kind + " label");
    }
    if (!seen.insert(label).second) {
      throw std::invalid_argument("party '" + party + "' repeats " + kind +
                                  " label '" + label + "'");
    }
  }
}

Party make_binary_party(const std::string& name, const std::string& setting,
                        const std::string& outcome) {
  Party p;
  p.name = name;
  p.setting_name = setting;
  p.outcome_name = outcome;
  p.settings = {"0", "1"};
  p.outcomes = {"0", "1"};
  return p;
}

}  // namespace

PartyLayout::PartyLayout(std::vector<Party> parties)
    : parties_(std::move(parties)) {
  if (parties_.size() < 2) {
    throw std::invalid_argument("layout needs at least two parties");
  }
  n_settings_ = 1;
  n_outcomes_ = 1;
  for (const auto& p : parties_) {
    check_alphabet(p.name, "setting", p.settings);
    check_alphabet(p.name, "outcome", p.outcomes);
    if (p.no_detection &&
        std::find(p.outcomes.begin(), p.outcomes.end(), *p.no_detection) ==
            p.outcomes.end()) {
      throw std::invalid_argument("party '" + p.name +
                                  "' declares a no-detection label '" +
                                  *p.no_detection +
                                  "' absent from its outcome alphabet");
    }
    n_settings_ *= p.settings.size();
    n_outcomes_ *= p.outcomes.size();
  }
}

PartyLayout PartyLayout::binary_pair() {
  return PartyLayout({make_binary_party("Alice", "X", "A"),
                      make_binary_party("Bob", "Y", "B")});
}

PartyLayout PartyLayout::binary_triple() {
  return PartyLayout({make_binary_party("Alice", "X", "A"),
                      make_binary_party("Bob", "Y", "B"),
                      make_binary_party("Charlie", "Z", "C")});
}

int PartyLayout::setting_label_index(std::size_t party,
                                     std::string_view label) const {
  const auto& labels = parties_.at(party).settings;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  return -1;
}

int PartyLayout::outcome_label_index(std::size_t party,
                                     std::string_view label) const {
  const auto& labels = parties_.at(party).outcomes;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  return -1;
}

std::size_t PartyLayout::setting_index(const Tuple& settings) const {
  if (settings.size() != parties_.size()) {
    throw std::invalid_argument("setting tuple arity " +
                                std::to_string(settings.size()) +
                                " does not match " +
                                std::to_string(parties_.size()) + " parties");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < parties_.size(); ++i) {
    const int k = setting_label_index(i, settings[i]);
    if (k < 0) {
      throw std::invalid_argument("unknown setting '" + settings[i] +
                                  "' for party '" + parties_[i].name + "'");
    }
    index = index * parties_[i].settings.size() + static_cast<std::size_t>(k);
  }
  return index;
}

std::size_t PartyLayout::outcome_index(const Tuple& outcomes) const {
  if (outcomes.size() != parties_.size()) {
    throw std::invalid_argument("outcome tuple arity " +
                                std::to_string(outcomes.size()) +
                                " does not match " +
                                std::to_string(parties_.size()) + " parties");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < parties_.size(); ++i) {
    const int k = outcome_label_index(i, outcomes[i]);
    if (k < 0) {
      throw std::invalid_argument("unknown outcome '" + outcomes[i] +
                                  "' for party '" + parties_[i].name + "'");
    }
    index = index * parties_[i].outcomes.size() + static_cast<std::size_t>(k);
  }
  return index;
}

Tuple PartyLayout::setting_tuple(std::size_t index) const {
  Tuple tuple(parties_.size());
  for (std::size_t i = parties_.size(); i-- > 0;) {
    const std::size_t base = parties_[i].settings.size();
    tuple[i] = parties_[i].settings[index % base];
    index /= base;
  }
  return tuple;
}

Tuple PartyLayout::outcome_tuple(std::size_t index) const {
  Tuple tuple(parties_.size());
  for (std::size_t i = parties_.size(); i-- > 0;) {
    const std::size_t base = parties_[i].outcomes.size();
    tuple[i] = parties_[i].outcomes[index % base];
    index /= base;
  }
  return tuple;
}

CountTable::CountTable(PartyLayout layout)
    : layout_(std::move(layout)),
      counts_(layout_.num_setting_tuples() * layout_.num_outcome_tuples(), 0) {
}

std::int64_t CountTable::at(const Tuple& settings,
                            const Tuple& outcomes) const {
  return at_index(layout_.setting_index(settings),
                  layout_.outcome_index(outcomes));
}

std::int64_t CountTable::at_index(std::size_t setting,
                                  std::size_t outcome) const {
  return counts_.at(setting * layout_.num_outcome_tuples() + outcome);
}

void CountTable::add(const Tuple& settings, const Tuple& outcomes,
                     std::int64_t n) {
  add_index(layout_.setting_index(settings), layout_.outcome_index(outcomes),
            n);
}

void CountTable::add_index(std::size_t setting, std::size_t outcome,
                           std::int64_t n) {
  if (n < 0) throw std::invalid_argument("count increments must be >= 0");
  counts_.at(setting * layout_.num_outcome_tuples() + outcome) += n;
}

std::int64_t CountTable::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

std::int64_t CountTable::setting_total(const Tuple& settings) const {
  return setting_total_index(layout_.setting_index(settings));
}

std::int64_t CountTable::setting_total_index(std::size_t setting) const {
  const std::size_t stride = layout_.num_outcome_tuples();
  std::int64_t sum = 0;
  for (std::size_t o = 0; o < stride; ++o) sum += at_index(setting, o);
  return sum;
}

MarginalPattern MarginalPattern::outcomes(std::vector<bool> keep_outcome) {
  MarginalPattern pattern;
  pattern.parties.reserve(keep_outcome.size());
  for (bool keep : keep_outcome) {
    pattern.parties.push_back({true, keep});
  }
  return pattern;
}

MarginalPattern MarginalPattern::star_all_outcomes(std::size_t n_parties) {
  return outcomes(std::vector<bool>(n_parties, false));
}

CountTable build_count_table(std::span<const Event> events,
                             const PartyLayout& layout) {
  CountTable table(layout);
  for (std::size_t record = 0; record < events.size(); ++record) {
    const Event& event = events[record];
    try {
      table.add(event.settings, event.outcomes);
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument("event " + std::to_string(record) + ": " +
                                  err.what());
    }
  }
  return table;
}

CountTable marginalize(const CountTable& table,
                       const MarginalPattern& pattern) {
  const PartyLayout& layout = table.layout();
  const std::size_t n = layout.num_parties();
  if (pattern.parties.size() != n) {
    throw std::invalid_argument("pattern arity " +
                                std::to_string(pattern.parties.size()) +
                                " does not match " + std::to_string(n) +
                                " parties");
  }
  bool any_kept = false;
  std::vector<Party> out_parties = layout.parties();
  for (std::size_t i = 0; i < n; ++i) {
    if (!pattern.parties[i].keep_setting) {
      out_parties[i].settings = {kStarLabel};
    }
    if (!pattern.parties[i].keep_outcome) {
      out_parties[i].outcomes = {kStarLabel};
      out_parties[i].no_detection.reset();
    }
    any_kept |= pattern.parties[i].keep_setting;
    any_kept |= pattern.parties[i].keep_outcome;
  }
  if (!any_kept) {
    throw std::invalid_argument("pattern stars every coordinate");
  }

  CountTable out{PartyLayout(std::move(out_parties))};
  const PartyLayout& out_layout = out.layout();
  for (std::size_t s = 0; s < layout.num_setting_tuples(); ++s) {
    Tuple settings = layout.setting_tuple(s);
    for (std::size_t i = 0; i < n; ++i) {
      if (!pattern.parties[i].keep_setting) settings[i] = kStarLabel;
    }
    const std::size_t out_s = out_layout.setting_index(settings);
    for (std::size_t o = 0; o < layout.num_outcome_tuples(); ++o) {
      const std::int64_t count = table.at_index(s, o);
      if (count == 0) continue;
      Tuple outcomes = layout.outcome_tuple(o);
      for (std::size_t i = 0; i < n; ++i) {
        if (!pattern.parties[i].keep_outcome) outcomes[i] = kStarLabel;
      }
      out.add_index(out_s, out_layout.outcome_index(outcomes), count);
    }
  }
  return out;
}

CountTable setting_totals(const CountTable& table) {
  return marginalize(
      table, MarginalPattern::star_all_outcomes(table.layout().num_parties()));
}

Table2x2 slice_2x2(const CountTable& table, const std::array<Tuple, 2>& rows,
                   std::size_t outcome_party,
                   const std::array<std::string, 2>& outcome_labels) {
  const PartyLayout& layout = table.layout();
  if (outcome_party >= layout.num_parties()) {
    throw std::invalid_argument("slice_2x2: no party " +
                                std::to_string(outcome_party));
  }
  if (rows[0] == rows[1]) {
    throw std::invalid_argument("slice_2x2: row specs select the same "
                                "setting tuple '" +
                                join(rows[0], ',') + "'");
  }
  if (outcome_labels[0] == outcome_labels[1]) {
    throw std::invalid_argument(
        "slice_2x2: column specs select the same outcome '" +
        outcome_labels[0] + "'");
  }
  std::array<std::size_t, 2> row_index{layout.setting_index(rows[0]),
                                       layout.setting_index(rows[1])};
  std::array<int, 2> col_index{};
  for (int c = 0; c < 2; ++c) {
    col_index[c] = layout.outcome_label_index(outcome_party, outcome_labels[c]);
    if (col_index[c] < 0) {
      throw std::invalid_argument("slice_2x2: unknown outcome '" +
                                  outcome_labels[c] + "' for party '" +
                                  layout.party(outcome_party).name + "'");
    }
  }

  Table2x2 slice;
  slice.row_labels = {join(rows[0], ','), join(rows[1], ',')};
  slice.col_labels = {outcome_labels[0], outcome_labels[1]};
  const std::size_t base = layout.party(outcome_party).outcomes.size();
  // Stride of the outcome party's coordinate in the flat outcome index.
  std::size_t stride = 1;
  for (std::size_t i = layout.num_parties(); i-- > outcome_party + 1;) {
    stride *= layout.party(i).outcomes.size();
  }
  for (std::size_t o = 0; o < layout.num_outcome_tuples(); ++o) {
    const std::size_t digit = (o / stride) % base;
    for (int c = 0; c < 2; ++c) {
      if (digit != static_cast<std::size_t>(col_index[c])) continue;
      for (int r = 0; r < 2; ++r) {
        slice.cells(r, c) +=
            static_cast<double>(table.at_index(row_index[r], o));
      }
    }
  }
  return slice;
}

// --- Event-log format ---------------------------------------------------

namespace {

// "key=value" pieces of a "# party ..." line.
std::string party_attributes(const Party& p) {
  std::string line = "setting=" + p.setting_name + " outcome=" +
                     p.outcome_name + " settings=" + join(p.settings, ',') +
                     " outcomes=" + join(p.outcomes, ',');
  if (p.no_detection) line += " nodetect=" + *p.no_detection;
  return line;
}

Party parse_party_line(const std::string& rest, std::size_t line_no) {
  std::istringstream in(rest);
  Party party;
  if (!(in >> party.name)) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": party line without a name");
  }
  std::string attr;
  while (in >> attr) {
    const std::size_t eq = attr.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": malformed attribute '" + attr + "'");
    }
    const std::string key = attr.substr(0, eq);
    const std::string value = attr.substr(eq + 1);
    if (key == "setting") {
      party.setting_name = value;
    } else if (key == "outcome") {
      party.outcome_name = value;
    } else if (key == "settings") {
      party.settings = split(value, ',');
    } else if (key == "outcomes") {
      party.outcomes = split(value, ',');
    } else if (key == "nodetect") {
      party.no_detection = value;
    } else {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": unknown attribute '" + key + "'");
    }
  }
  if (party.setting_name.empty()) party.setting_name = party.name;
  if (party.outcome_name.empty()) party.outcome_name = party.name;
  return party;
}

}  // namespace

void write_event_log_header(std::ostream& out, const PartyLayout& layout) {
  out << "# nosignal event log v1\n";
  for (const auto& p : layout.parties()) {
    out << "# party " << p.name << ' ' << party_attributes(p) << '\n';
  }
  for (const auto& p : layout.parties()) out << p.setting_name << ' ';
  for (std::size_t i = 0; i < layout.num_parties(); ++i) {
    out << layout.party(i).outcome_name
        << (i + 1 < layout.num_parties() ? ' ' : '\n');
  }
}

void write_event_log_event(std::ostream& out, const PartyLayout& layout,
                           std::size_t setting_index,
                           std::size_t outcome_index) {
  const Tuple settings = layout.setting_tuple(setting_index);
  const Tuple outcomes = layout.outcome_tuple(outcome_index);
  for (const auto& s : settings) out << s << ' ';
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    out << outcomes[i] << (i + 1 < outcomes.size() ? ' ' : '\n');
  }
}

PartyLayout read_event_log_header(std::istream& in, std::size_t* line_no) {
  std::vector<Party> parties;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    if (line.rfind("# party ", 0) == 0) {
      parties.push_back(parse_party_line(line.substr(8), n));
      continue;
    }
    if (line[0] == '#') continue;
    // First non-comment line is the column header row.
    break;
  }
  if (parties.empty()) {
    throw std::runtime_error("event log declares no parties");
  }
  if (line_no) *line_no = n;
  return PartyLayout(std::move(parties));
}

CountTable read_event_log(std::istream& in) {
  std::size_t line_no = 0;
  const PartyLayout layout = read_event_log_header(in, &line_no);
  const std::size_t n = layout.num_parties();
  CountTable table(layout);

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    Tuple settings(n), outcomes(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!(row >> settings[i])) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": missing setting for party '" +
                                 layout.party(i).name + "'");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!(row >> outcomes[i])) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": missing outcome for party '" +
                                 layout.party(i).name + "'");
      }
      if (outcomes[i] == kNoDetectionToken) {
        const auto& label = layout.party(i).no_detection;
        if (!label) {
          throw std::runtime_error("line " + std::to_string(line_no) +
                                   ": '-' used but party '" +
                                   layout.party(i).name +
                                   "' declares no no-detection label");
        }
        outcomes[i] = *label;
      }
    }
    std::string extra;
    if (row >> extra) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": trailing field '" + extra + "'");
    }
    try {
      table.add(settings, outcomes);
    } catch (const std::invalid_argument& err) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " +
                               err.what());
    }
  }
  return table;
}

// --- Count-table fixture format -----------------------------------------

std::string to_table_text(const CountTable& table,
                          const std::string& provenance) {
  const PartyLayout& layout = table.layout();
  std::ostringstream out;
  out << "# nosignal table v1\n";
  if (!provenance.empty()) out << "provenance: " << provenance << '\n';
  for (const auto& p : layout.parties()) {
    out << "party " << p.name << ' ' << party_attributes(p) << '\n';
  }
  for (std::size_t s = 0; s < layout.num_setting_tuples(); ++s) {
    for (std::size_t o = 0; o < layout.num_outcome_tuples(); ++o) {
      const std::int64_t count = table.at_index(s, o);
      if (count == 0) continue;
      out << "count " << join(layout.setting_tuple(s), ',') << ' '
          << join(layout.outcome_tuple(o), ',') << ' ' << count << '\n';
    }
  }
  return out.str();
}

CountTable parse_table_text(std::string_view text, std::string* provenance) {
  std::istringstream in{std::string(text)};
  std::vector<Party> parties;
  struct PendingCount {
    Tuple settings;
    Tuple outcomes;
    std::int64_t count;
  };
  struct PendingRow {
    Tuple settings;
    std::vector<std::int64_t> counts;
    std::size_t line_no;
  };
  std::vector<PendingCount> pending;
  std::vector<PendingRow> pending_rows;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("provenance: ", 0) == 0) {
      if (provenance) *provenance = line.substr(12);
      continue;
    }
    std::istringstream row(line);
    std::string keyword;
    row >> keyword;
    if (keyword == "party") {
      std::string rest;
      std::getline(row, rest);
      parties.push_back(parse_party_line(rest, line_no));
    } else if (keyword == "count") {
      PendingCount entry;
      std::string settings, outcomes;
      if (!(row >> settings >> outcomes >> entry.count)) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": malformed count line");
      }
      entry.settings = split(settings, ',');
      entry.outcomes = split(outcomes, ',');
      pending.push_back(std::move(entry));
    } else if (keyword == "row") {
      // One setting tuple with counts for every outcome tuple in flat
      // (party-0-major) order.
      PendingRow entry;
      entry.line_no = line_no;
      std::string settings;
      if (!(row >> settings)) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": row line without settings");
      }
      entry.settings = split(settings, ',');
      std::int64_t count = 0;
      while (row >> count) entry.counts.push_back(count);
      pending_rows.push_back(std::move(entry));
    } else {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": unknown keyword '" + keyword + "'");
    }
  }
  if (parties.empty()) {
    throw std::runtime_error("table text declares no parties");
  }
  CountTable table{PartyLayout(std::move(parties))};
  for (const auto& entry : pending) {
    table.add(entry.settings, entry.outcomes, entry.count);
  }
  const std::size_t n_outcomes = table.layout().num_outcome_tuples();
  for (const auto& entry : pending_rows) {
    if (entry.counts.size() != n_outcomes) {
      throw std::runtime_error("line " + std::to_string(entry.line_no) +
                               ": row has " +
                               std::to_string(entry.counts.size()) +
                               " counts, layout has " +
                               std::to_string(n_outcomes) +
                               " outcome tuples");
    }
    const std::size_t s = table.layout().setting_index(entry.settings);
    for (std::size_t o = 0; o < n_outcomes; ++o) {
      table.add_index(s, o, entry.counts[o]);
    }
  }
  return table;
}

}  // namespace nosignal
