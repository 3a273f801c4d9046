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

#ifndef NOSIGNAL_STATS_HPP
#define NOSIGNAL_STATS_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include <Eigen/Core>

#include "nosignal/tables.hpp"

namespace nosignal {

// Result of one chi-squared test. `p_corrected` starts equal to `p_raw`
// until a correction is applied; `low_expected` flags an expected cell
// below 5 (the test still runs, callers decide what to make of it).
struct Chi2Result {
  double chi2 = 0.0;
  int dof = 1;
  double p_raw = 1.0;
  double p_corrected = 1.0;
  std::string descriptor;
  bool low_expected = false;
};

// Bonferroni multiplier: the number of testable combinations.
struct CorrectionPolicy {
  int multiplier = 1;
};

// Per-cell weighted count N = sum C/T over intervals with C coincidences
// in T trials, and its squared error e2 = sum C/T^2.
struct WeightedCell {
  double n = 0.0;
  double e2 = 0.0;
};

struct WeightedCounts {
  // cells[row][col], rows = first party's setting, cols = second's.
  std::array<std::array<WeightedCell, 2>, 2> cells;
};

// Regularized upper incomplete gamma Q(s, x), series/continued-fraction
// split at x = s + 1. For s = 1/2 this equals erfc(sqrt(x)).
double gamma_q(double s, double x);

// Upper tail of the chi-squared distribution: Q(dof/2, chi2/2).
double chi2_pvalue(double chi2, int dof);

// Pearson chi-squared test of independence on an r x c table of
// nonnegative counts, expected cells E = (row sum)(col sum)/N, no
// continuity correction, dof = (r-1)(c-1). Requires every row and
// column sum positive; a zero marginal is reported by name.
Chi2Result pearson_chi2(const Eigen::MatrixXd& observed,
                        std::string descriptor = {});
Chi2Result pearson_chi2(const Table2x2& table, std::string descriptor = {});

// p_corrected = min(1, multiplier * p_raw).
Chi2Result bonferroni(Chi2Result result, const CorrectionPolicy& policy);

// Chi-squared for weighted counts with varying trial numbers:
//   chi2 = ((N00 N11 - N01 N10) / sum N)^2 * sum 1/e2,  dof = 1.
Chi2Result weighted_chi2(const WeightedCounts& w, std::string descriptor = {});

// Chi-squared against equal expected counts, dof = k - 1.
Chi2Result uniformity_chi2(std::span<const std::int64_t> counts,
                           std::string descriptor = {});

}  // namespace nosignal

#endif  // NOSIGNAL_STATS_HPP
