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

#ifndef NOSIGNAL_DATASETS_HPP
#define NOSIGNAL_DATASETS_HPP

#include <string>
#include <variant>
#include <vector>

#include "nosignal/stats.hpp"
#include "nosignal/tables.hpp"

namespace nosignal {

// A labeled sequence of weighted 2x2 tables (one per phase row, plus a
// combined row).
struct WeightedSeries {
  std::vector<std::pair<std::string, WeightedCounts>> rows;
};

// A published chi-squared value with the tolerance its print precision
// supports, keyed by the descriptor the matching test emits.
struct PublishedValue {
  std::string descriptor;
  double chi2 = 0.0;
  double tolerance = 0.0;
};

// One embedded source table: the data, where it came from, the values
// published for it, and any caveats that travel with it.
struct Fixture {
  std::string id;
  std::variant<CountTable, WeightedSeries> data;
  std::string provenance;
  std::vector<PublishedValue> published;
  std::vector<std::string> notes;

  const CountTable& table() const { return std::get<CountTable>(data); }
  const WeightedSeries& weighted() const {
    return std::get<WeightedSeries>(data);
  }
};

// Loads an embedded fixture bit-exactly. Unknown ids raise an error
// listing the available ones.
Fixture load_fixture(const std::string& id);

std::vector<std::string> fixture_ids();

// --- Golden-value reproduction ------------------------------------------

struct ComparisonRow {
  std::string descriptor;
  double computed = 0.0;
  double published = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ComparisonReport {
  std::string experiment;
  std::vector<ComparisonRow> rows;
  std::vector<std::string> notes;
  bool all_pass = true;
};

// Runs the designated test batteries for one experiment's fixtures and
// compares every computed value against its published counterpart.
ComparisonReport reproduce_report(const std::string& experiment_id);

// Experiments with published chi-squared values to reproduce.
std::vector<std::string> reproducible_experiments();

}  // namespace nosignal

#endif  // NOSIGNAL_DATASETS_HPP
