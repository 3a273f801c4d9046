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

#include "nosignal/qmodel.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

namespace nosignal {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

TEST(Direction, RequiresUnitNorm) {
  EXPECT_NO_THROW(Direction(Eigen::Vector3d(0, 0, 1)));
  EXPECT_THROW(Direction(Eigen::Vector3d(0, 0, 1.1)), std::invalid_argument);
  EXPECT_THROW(Direction::normalized(Eigen::Vector3d::Zero()),
               std::invalid_argument);
}

TEST(BlochFromPolarization, DoublesTheAngle) {
  EXPECT_NEAR((bloch_from_polarization(0).vec() - Eigen::Vector3d(1, 0, 0))
                  .norm(),
              0.0, 1e-12);
  EXPECT_NEAR((bloch_from_polarization(45).vec() - Eigen::Vector3d(0, 1, 0))
                  .norm(),
              0.0, 1e-12);
  // cos/sin of 45 degrees.
  const Eigen::Vector3d v = bloch_from_polarization(22.5).vec();
  EXPECT_NEAR(v.x(), 1.0 / kSqrt2, 1e-12);
  EXPECT_NEAR(v.y(), 1.0 / kSqrt2, 1e-12);
  EXPECT_NEAR(v.z(), 0.0, 1e-12);
  EXPECT_THROW(bloch_from_polarization(
                   std::numeric_limits<double>::quiet_NaN()),
               std::invalid_argument);
}

TEST(BlochFromPhase, UsesPhaseDirectly) {
  const Eigen::Vector3d v = bloch_from_phase(std::numbers::pi / 2).vec();
  EXPECT_NEAR(v.x(), 0.0, 1e-12);
  EXPECT_NEAR(v.y(), 1.0, 1e-12);
}

TEST(Correlation, SingletAnticorrelation) {
  const Direction n(Eigen::Vector3d(0, 0, 1));
  EXPECT_DOUBLE_EQ(correlation(n, n, 1.0), -1.0);
  const Direction m(Eigen::Vector3d(1, 0, 0));
  EXPECT_DOUBLE_EQ(correlation(n, m, 0.7), 0.0);
  // Polarizers at 0 and 22.5 degrees: -cos(45 deg).
  EXPECT_NEAR(correlation(bloch_from_polarization(0),
                          bloch_from_polarization(22.5), 1.0),
              -1.0 / kSqrt2, 1e-9);
}

TEST(Correlation, SymmetryProperties) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < 50; ++i) {
    const Direction a = Direction::normalized(
        {gauss(rng), gauss(rng), gauss(rng)});
    const Direction b = Direction::normalized(
        {gauss(rng), gauss(rng), gauss(rng)});
    const double v = 0.8;
    EXPECT_DOUBLE_EQ(correlation(a, b, v), correlation(b, a, v));
    const Direction neg_a(Eigen::Vector3d(-a.vec()));
    EXPECT_DOUBLE_EQ(correlation(neg_a, b, v), -correlation(a, b, v));
  }
}

TEST(ChshValue, IdealSingletReachesTsirelson) {
  const CorrelationModel model = chsh_singlet();
  Eigen::Matrix2d correlations;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      correlations(x, y) =
          correlation(model.alice_axes[x], model.bob_axes[y], 1.0);
    }
  }
  double best = 0.0;
  for (const auto sign : {ChshSign::kNegate00, ChshSign::kNegate01,
                          ChshSign::kNegate10, ChshSign::kNegate11}) {
    best = std::max(best, std::abs(chsh_value(correlations, sign)));
  }
  EXPECT_NEAR(best, 2.0 * kSqrt2, 1e-9);
}

TEST(ChshValue, EdgeValues) {
  EXPECT_DOUBLE_EQ(chsh_value(Eigen::Matrix2d::Zero()), 0.0);
  Eigen::Matrix2d extreme;
  extreme << 1, 1, 1, -1;
  EXPECT_DOUBLE_EQ(chsh_value(extreme), 4.0);
  Eigen::Matrix2d bad;
  bad << 1.5, 0, 0, 0;
  EXPECT_THROW(chsh_value(bad), std::invalid_argument);
}

TEST(ChshValue, LocalMixturesRespectClassicalBound) {
  // All 256 pairs of deterministic responses to (setting, shared bit),
  // averaged over the shared bit: every local model obeys |S| <= 2.
  for (int fa = 0; fa < 16; ++fa) {
    for (int fb = 0; fb < 16; ++fb) {
      const auto alice = [&](int x, int lambda) {
        return (fa >> (2 * lambda + x)) & 1 ? 1.0 : -1.0;
      };
      const auto bob = [&](int y, int lambda) {
        return (fb >> (2 * lambda + y)) & 1 ? 1.0 : -1.0;
      };
      Eigen::Matrix2d correlations;
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          correlations(x, y) = 0.5 * (alice(x, 0) * bob(y, 0) +
                                      alice(x, 1) * bob(y, 1));
        }
      }
      for (const auto sign : {ChshSign::kNegate00, ChshSign::kNegate01,
                              ChshSign::kNegate10, ChshSign::kNegate11}) {
        EXPECT_LE(std::abs(chsh_value(correlations, sign)), 2.0 + 1e-12);
      }
    }
  }
}

TEST(JointProbability, PerfectAnticorrelation) {
  const Direction n(Eigen::Vector3d(0, 0, 1));
  EXPECT_DOUBLE_EQ(joint_probability(n, n, 1.0, 1, 1), 0.0);
  EXPECT_DOUBLE_EQ(joint_probability(n, n, 1.0, 1, -1), 0.5);
  const Direction m(Eigen::Vector3d(1, 0, 0));
  for (int sa : {1, -1}) {
    for (int sb : {1, -1}) {
      EXPECT_DOUBLE_EQ(joint_probability(n, m, 0.4, sa, sb), 0.25);
    }
  }
  EXPECT_THROW(joint_probability(n, m, 1.0, 0, 1), std::invalid_argument);
}

TEST(JointProbability, ReconstructsCorrelationAndMarginals) {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < 50; ++i) {
    const Direction a = Direction::normalized(
        {gauss(rng), gauss(rng), gauss(rng)});
    const Direction b = Direction::normalized(
        {gauss(rng), gauss(rng), gauss(rng)});
    const double v = 0.9;
    double sum = 0.0, e = 0.0, marg_a_plus = 0.0;
    for (int sa : {1, -1}) {
      for (int sb : {1, -1}) {
        const double p = joint_probability(a, b, v, sa, sb);
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 0.5);
        sum += p;
        e += sa * sb * p;
        if (sa == 1) marg_a_plus += p;
      }
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_NEAR(e, correlation(a, b, v), 1e-12);
    // Singlet marginals are exactly one half for any axes.
    EXPECT_DOUBLE_EQ(marg_a_plus, 0.5);
  }
}

TEST(PhaseCorrelation, InterferometerIdentity) {
  // Phases pi/4, 0 against -pi/4, pi/2: three equal correlations and
  // one sign-flipped, the ideal arrangement.
  const double p_a[2] = {std::numbers::pi / 4, -std::numbers::pi / 4};
  const double p_b[2] = {0.0, std::numbers::pi / 2};
  const double e00 = phase_correlation(p_a[0], p_b[0], 1.0);
  const double e01 = phase_correlation(p_a[0], p_b[1], 1.0);
  const double e10 = phase_correlation(p_a[1], p_b[0], 1.0);
  const double e11 = phase_correlation(p_a[1], p_b[1], 1.0);
  EXPECT_NEAR(e00, e01, 1e-12);
  EXPECT_NEAR(e00, e10, 1e-12);
  EXPECT_NEAR(e00, -e11, 1e-12);
  EXPECT_NEAR(std::abs(e00), 1.0 / kSqrt2, 1e-12);
}

TEST(DetectorMarginals, UnitEfficienciesGiveHalf) {
  const DetectorMarginals m = detector_marginals({});
  for (int x = 0; x < 2; ++x) {
    for (int b = 0; b < 2; ++b) {
      EXPECT_NEAR(m.weight[x][b], 0.5, 1e-12);
    }
  }
}

TEST(DetectorMarginals, SingleDetectorWeights) {
  DetectorEfficiencies eff;
  eff.eta = {1.0, 1.0, 0.0, 1.0};  // eta3 = 0
  const DetectorMarginals m = detector_marginals(eff);
  EXPECT_NEAR(m.weight[1][0], 0.426777, 1e-6);
  EXPECT_NEAR(m.weight[1][1], 0.073223, 1e-6);
  EXPECT_THROW(detector_marginals({{1.0, 2.0, 1.0, 1.0}}),
               std::invalid_argument);
}

TEST(DodecahedronCandidates, StructureAndPole) {
  const std::vector<Direction> dirs = dodecahedron_candidates();
  ASSERT_EQ(dirs.size(), 32u);
  EXPECT_NEAR((dirs[0].vec() - Eigen::Vector3d(0, 0, 1)).norm(), 0.0, 1e-12);
  for (const auto& d : dirs) {
    EXPECT_NEAR(d.vec().norm(), 1.0, 1e-12);
    // Antipodal closure.
    bool found = false;
    for (const auto& other : dirs) {
      if ((d.vec() + other.vec()).norm() < 1e-9) {
        found = true;
        break;
      }
    }
    EXPECT_TRUE(found);
  }
  // Pairwise distinct.
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      EXPECT_GT((dirs[i].vec() - dirs[j].vec()).norm(), 1e-6);
    }
  }
}

}  // namespace
}  // namespace nosignal
