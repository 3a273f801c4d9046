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

#include "nosignal/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace nosignal {

namespace {

// Series expansion of P(s,x), valid and fast for x < s + 1.
long double gamma_p_series(long double s, long double x) {
  long double term = 1.0L / s;
  long double sum = term;
  long double a = s;
  for (int n = 0; n < 10000; ++n) {
    a += 1.0L;
    term *= x / a;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-19L) break;
  }
  return sum * std::exp(s * std::log(x) - x - std::lgamma(s));
}

// Modified Lentz continued fraction for Q(s,x), x >= s + 1.
long double gamma_q_cf(long double s, long double x) {
  constexpr long double tiny = 1e-4000L;
  long double b = x + 1.0L - s;
  long double c = 1.0L / tiny;
  long double d = 1.0L / b;
  long double h = d;
  for (int i = 1; i < 10000; ++i) {
    const long double an = -static_cast<long double>(i) * (i - s);
    b += 2.0L;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0L / d;
    const long double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0L) < 1e-19L) break;
  }
  return h * std::exp(s * std::log(x) - x - std::lgamma(s));
}

double clamp01(long double p) {
  if (p < 0.0L) return 0.0;
  if (p > 1.0L) return 1.0;
  return static_cast<double>(p);
}

}  // namespace

double gamma_q(double s, double x) {
  if (!(s > 0.0)) throw std::invalid_argument("gamma_q: s must be positive");
  if (x < 0.0) throw std::invalid_argument("gamma_q: x must be nonnegative");
  if (x == 0.0) return 1.0;
  if (x < s + 1.0) return clamp01(1.0L - gamma_p_series(s, x));
  return clamp01(gamma_q_cf(s, x));
}

double chi2_pvalue(double chi2, int dof) {
  if (chi2 < 0.0) throw std::invalid_argument("chi2_pvalue: chi2 < 0");
  if (dof < 1) throw std::invalid_argument("chi2_pvalue: dof < 1");
  return gamma_q(0.5 * dof, 0.5 * chi2);
}

Chi2Result pearson_chi2(const Eigen::MatrixXd& observed,
                        std::string descriptor) {
  const Eigen::Index rows = observed.rows();
  const Eigen::Index cols = observed.cols();
  if (rows < 2 || cols < 2) {
    throw std::invalid_argument("pearson_chi2: table must be at least 2x2");
  }
  if ((observed.array() < 0.0).any()) {
    throw std::invalid_argument("pearson_chi2: negative cell");
  }
  const Eigen::VectorXd row_sums = observed.rowwise().sum();
  const Eigen::VectorXd col_sums = observed.colwise().sum();
  const double total = observed.sum();
  if (total <= 0.0) throw std::invalid_argument("pearson_chi2: empty table");
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (row_sums[i] <= 0.0) {
      throw std::invalid_argument("pearson_chi2: row " + std::to_string(i) +
                                  " has zero total");
    }
  }
  for (Eigen::Index j = 0; j < cols; ++j) {
    if (col_sums[j] <= 0.0) {
      throw std::invalid_argument("pearson_chi2: column " + std::to_string(j) +
                                  " has zero total");
    }
  }

  double chi2 = 0.0;
  bool low_expected = false;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double expected = row_sums[i] * col_sums[j] / total;
      const double diff = observed(i, j) - expected;
      chi2 += diff * diff / expected;
      if (expected < 5.0) low_expected = true;
    }
  }

  Chi2Result result;
  result.chi2 = chi2;
  result.dof = static_cast<int>((rows - 1) * (cols - 1));
  result.p_raw = chi2_pvalue(chi2, result.dof);
  result.p_corrected = result.p_raw;
  result.descriptor = std::move(descriptor);
  result.low_expected = low_expected;
  return result;
}

Chi2Result pearson_chi2(const Table2x2& table, std::string descriptor) {
  return pearson_chi2(Eigen::MatrixXd(table.cells), std::move(descriptor));
}

Chi2Result bonferroni(Chi2Result result, const CorrectionPolicy& policy) {
  if (policy.multiplier < 1) {
    throw std::invalid_argument("bonferroni: multiplier must be >= 1");
  }
  result.p_corrected = std::min(1.0, policy.multiplier * result.p_raw);
  return result;
}

Chi2Result weighted_chi2(const WeightedCounts& w, std::string descriptor) {
  double sum_n = 0.0;
  double sum_inv_e2 = 0.0;
  for (const auto& row : w.cells) {
    for (const auto& cell : row) {
      if (!(cell.n > 0.0)) {
        throw std::invalid_argument(
            "weighted_chi2: every weighted count must be positive");
      }
      if (!(cell.e2 > 0.0)) {
        throw std::invalid_argument(
            "weighted_chi2: every squared error must be positive");
      }
      sum_n += cell.n;
      sum_inv_e2 += 1.0 / cell.e2;
    }
  }
  const double cross = w.cells[0][0].n * w.cells[1][1].n -
                       w.cells[0][1].n * w.cells[1][0].n;
  const double ratio = cross / sum_n;

  Chi2Result result;
  result.chi2 = ratio * ratio * sum_inv_e2;
  result.dof = 1;
  result.p_raw = chi2_pvalue(result.chi2, 1);
  result.p_corrected = result.p_raw;
  result.descriptor = std::move(descriptor);
  return result;
}

Chi2Result uniformity_chi2(std::span<const std::int64_t> counts,
                           std::string descriptor) {
  if (counts.size() < 2) {
    throw std::invalid_argument(
        "uniformity_chi2: need at least two categories");
  }
  std::int64_t total = 0;
  for (std::int64_t c : counts) {
    if (c < 0) throw std::invalid_argument("uniformity_chi2: negative count");
    total += c;
  }
  if (total <= 0) {
    throw std::invalid_argument("uniformity_chi2: zero total");
  }
  const double expected =
      static_cast<double>(total) / static_cast<double>(counts.size());
  double chi2 = 0.0;
  for (std::int64_t c : counts) {
    const double diff = static_cast<double>(c) - expected;
    chi2 += diff * diff / expected;
  }

  Chi2Result result;
  result.chi2 = chi2;
  result.dof = static_cast<int>(counts.size()) - 1;
  result.p_raw = chi2_pvalue(chi2, result.dof);
  result.p_corrected = result.p_raw;
  result.descriptor = std::move(descriptor);
  result.low_expected = expected < 5.0;
  return result;
}

}  // namespace nosignal
