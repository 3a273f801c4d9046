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

#include "nosignal/report.hpp"

#include <iomanip>
#include <map>
#include <ostream>
#include <set>

#include <json.hpp>

namespace nosignal {

namespace {

using nlohmann::json;

const char* causal_name(CausalStatus status) {
  return status == CausalStatus::kAllowed ? "allowed" : "forbidden";
}

// When every descriptor has the "PAIR | P=v,Q=w" shape with a common
// set of conditioning values, print the chi2 values pivoted the way
// battery tables are usually published: one row per tested pair, one
// column per fixed-choice combination.
void render_pivot(std::ostream& out, const TestBatteryReport& report) {
  std::map<std::string, std::map<std::string, double>> rows;
  std::set<std::string> conditions;
  for (const auto& entry : report.entries) {
    const std::string& d = entry.test.descriptor;
    const std::size_t sep = d.find(" | ");
    if (sep == std::string::npos) return;
    std::string values;
    for (std::size_t i = sep + 3; i < d.size(); ++i) {
      if (d[i] == '=' && i + 1 < d.size()) values += d[i + 1];
    }
    if (values.empty()) return;
    if (!rows[d.substr(0, sep)].emplace(values, entry.test.chi2).second) {
      return;  // duplicate cell; shape is not a clean matrix
    }
    conditions.insert(values);
  }
  if (rows.size() < 2 || conditions.size() < 2) return;
  for (const auto& [pair, cells] : rows) {
    if (cells.size() != conditions.size()) return;
  }

  out << "\nchi2 by fixed choices:\n";
  out << std::left << std::setw(24) << "";
  for (const auto& condition : conditions) {
    out << std::right << std::setw(12) << condition;
  }
  out << '\n';
  for (const auto& [pair, cells] : rows) {
    out << std::left << std::setw(24) << pair;
    for (const auto& condition : conditions) {
      out << std::right << std::setw(12) << std::setprecision(4)
          << std::fixed << cells.at(condition);
      out.unsetf(std::ios::floatfield);
    }
    out << '\n';
  }
}

json to_json(const Chi2Result& test) {
  return json{{"descriptor", test.descriptor}, {"chi2", test.chi2},
              {"dof", test.dof},               {"p_raw", test.p_raw},
              {"p_corrected", test.p_corrected},
              {"low_expected", test.low_expected}};
}

Chi2Result chi2_from_json(const json& j) {
  Chi2Result test;
  test.descriptor = j.at("descriptor").get<std::string>();
  test.chi2 = j.at("chi2").get<double>();
  test.dof = j.at("dof").get<int>();
  test.p_raw = j.at("p_raw").get<double>();
  test.p_corrected = j.at("p_corrected").get<double>();
  test.low_expected = j.at("low_expected").get<bool>();
  return test;
}

}  // namespace

void render_battery_report(std::ostream& out, const TestBatteryReport& report,
                           ReportFormat format) {
  if (format == ReportFormat::kJson) {
    json j;
    j["multiplier"] = report.multiplier;
    j["tests"] = json::array();
    for (const auto& entry : report.entries) {
      json t = to_json(entry.test);
      t["causal"] = causal_name(entry.causal);
      j["tests"].push_back(std::move(t));
    }
    j["skipped"] = json::array();
    for (const auto& [descriptor, reason] : report.skipped) {
      j["skipped"].push_back({{"descriptor", descriptor},
                              {"reason", reason}});
    }
    out << j.dump(2) << '\n';
    return;
  }

  out << "correction multiplier: " << report.multiplier << '\n';
  out << std::left << std::setw(36) << "test" << std::right << std::setw(12)
      << "chi2" << std::setw(5) << "dof" << std::setw(13) << "p_raw"
      << std::setw(13) << "p_corr" << "  causal\n";
  for (const auto& entry : report.entries) {
    const auto& t = entry.test;
    out << std::left << std::setw(36) << t.descriptor << std::right
        << std::setw(12) << std::setprecision(5) << std::fixed << t.chi2
        << std::setw(5) << t.dof << std::setw(13) << std::setprecision(3)
        << std::scientific << t.p_raw << std::setw(13) << t.p_corrected
        << "  " << causal_name(entry.causal)
        << (t.low_expected ? "  [low expected counts]" : "") << '\n';
    out.unsetf(std::ios::floatfield);
  }
  for (const auto& [descriptor, reason] : report.skipped) {
    out << "skipped " << descriptor << ": " << reason << '\n';
  }
  render_pivot(out, report);
}

void render_comparison_report(std::ostream& out,
                              const ComparisonReport& report,
                              ReportFormat format) {
  if (format == ReportFormat::kJson) {
    json j;
    j["experiment"] = report.experiment;
    j["all_pass"] = report.all_pass;
    j["rows"] = json::array();
    for (const auto& row : report.rows) {
      j["rows"].push_back({{"descriptor", row.descriptor},
                           {"computed", row.computed},
                           {"published", row.published},
                           {"tolerance", row.tolerance},
                           {"pass", row.pass}});
    }
    j["notes"] = report.notes;
    out << j.dump(2) << '\n';
    return;
  }

  out << "experiment " << report.experiment << '\n';
  out << std::left << std::setw(44) << "test" << std::right << std::setw(12)
      << "computed" << std::setw(12) << "published" << std::setw(12)
      << "tolerance" << "  status\n";
  for (const auto& row : report.rows) {
    out << std::left << std::setw(44) << row.descriptor << std::right
        << std::setw(12) << std::setprecision(4) << std::fixed << row.computed
        << std::setw(12) << row.published << std::setw(12) << row.tolerance
        << "  " << (row.pass ? "ok" : "OUT OF TOLERANCE") << '\n';
    out.unsetf(std::ios::floatfield);
  }
  for (const auto& note : report.notes) {
    out << "note: " << note << '\n';
  }
  out << (report.all_pass ? "all values reproduced\n"
                          : "some values outside tolerance\n");
}

void render_calibration_result(std::ostream& out,
                               const CalibrationResult& cal,
                               ReportFormat format) {
  if (format == ReportFormat::kJson) {
    json j;
    j["replications"] = cal.replications;
    j["rejection_rates"] = json::array();
    for (const auto& [descriptor, rate] : cal.rejection_rates) {
      j["rejection_rates"].push_back({{"descriptor", descriptor},
                                      {"rate", rate}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "replications: " << cal.replications << '\n';
  for (const auto& [descriptor, rate] : cal.rejection_rates) {
    out << std::left << std::setw(36) << descriptor << std::right
        << std::setw(10) << std::setprecision(4) << std::fixed << rate << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

TestBatteryReport parse_battery_report_json(const std::string& text) {
  const json j = json::parse(text);
  TestBatteryReport report;
  report.multiplier = j.at("multiplier").get<int>();
  for (const auto& t : j.at("tests")) {
    BatteryEntry entry;
    entry.test = chi2_from_json(t);
    entry.causal = t.at("causal").get<std::string>() == "allowed"
                       ? CausalStatus::kAllowed
                       : CausalStatus::kForbidden;
    report.entries.push_back(std::move(entry));
  }
  for (const auto& s : j.at("skipped")) {
    report.skipped.emplace_back(s.at("descriptor").get<std::string>(),
                                s.at("reason").get<std::string>());
  }
  return report;
}

}  // namespace nosignal
