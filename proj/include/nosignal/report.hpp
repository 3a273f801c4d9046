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

#ifndef NOSIGNAL_REPORT_HPP
#define NOSIGNAL_REPORT_HPP

#include <iosfwd>
#include <string>

#include "nosignal/datasets.hpp"
#include "nosignal/nosig.hpp"
#include "nosignal/simulator.hpp"

namespace nosignal {

enum class ReportFormat { kTable, kJson };

// Human-readable table or machine-readable JSON. JSON doubles are
// emitted with shortest round-trip precision, so parsing a report
// recovers the Chi2Result values exactly.
void render_battery_report(std::ostream& out, const TestBatteryReport& report,
                           ReportFormat format);
void render_comparison_report(std::ostream& out, const ComparisonReport& report,
                              ReportFormat format);
void render_calibration_result(std::ostream& out, const CalibrationResult& cal,
                               ReportFormat format);

// Inverse of render_battery_report(..., kJson).
TestBatteryReport parse_battery_report_json(const std::string& text);

}  // namespace nosignal

#endif  // NOSIGNAL_REPORT_HPP
