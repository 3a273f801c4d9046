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

#ifndef NOSIGNAL_QMODEL_HPP
#define NOSIGNAL_QMODEL_HPP

#include <array>
#include <vector>

#include <Eigen/Core>

namespace nosignal {

// Unit vector on the Bloch sphere. Construction checks |v| = 1 within
// 1e-12; use `normalized` to build from an arbitrary nonzero vector.
class Direction {
 public:
  explicit Direction(const Eigen::Vector3d& v);
  static Direction normalized(const Eigen::Vector3d& v);
  const Eigen::Vector3d& vec() const { return v_; }

 private:
  Eigen::Vector3d v_;
};

// Measurement axis of a linear-polarization analyzer at `angle_deg`:
// (cos 2phi, sin 2phi, 0). Orthogonal polarizations map to antipodal
// points, which is why the angle doubles.
Direction bloch_from_polarization(double angle_deg);

// Interferometric phases enter undoubled: (cos phi, sin phi, 0).
Direction bloch_from_phase(double phase_rad);

// Singlet correlation <A B> = -v * (a . b).
double correlation(const Direction& a, const Direction& b, double visibility);

// correlation() for phase-type settings: -v * cos(phi_a - phi_b).
double phase_correlation(double phi_a, double phi_b, double visibility);

// Which of the four correlation terms enters the CHSH sum negated.
enum class ChshSign { kNegate00, kNegate01, kNegate10, kNegate11 };

// S = sum of the four correlations with one term negated (default the
// (1,1) term). |S| <= 2 for local realism, 2*sqrt(2) for the singlet.
double chsh_value(const Eigen::Matrix2d& correlations,
                  ChshSign sign = ChshSign::kNegate11);

// Probability of outcomes (sign_a, sign_b) in {+1,-1}^2 for a singlet
// of visibility v: (1 + sign_a sign_b * (-v a.b)) / 4.
double joint_probability(const Direction& a, const Direction& b,
                         double visibility, int sign_a, int sign_b);

// Singlet model with per-setting measurement axes. Setting k of Alice
// measures along alice_axes[k], outcome 0 mapping to +1.
struct CorrelationModel {
  double visibility = 1.0;
  std::vector<Direction> alice_axes;
  std::vector<Direction> bob_axes;
};

// p(outcome a, outcome b | setting x, setting y) with outcomes in {0,1}.
double singlet_outcome_probability(const CorrelationModel& model, int x,
                                   int y, int a, int b);

// Ideal CHSH arrangement: Alice polarizers 0/45 deg, Bob -22.5/-67.5 deg.
CorrelationModel chsh_singlet(double visibility = 1.0);

// Per-detector efficiencies eta_1..eta_4 in (0,1], detector n = APDn.
struct DetectorEfficiencies {
  std::array<double, 4> eta{1.0, 1.0, 1.0, 1.0};
};

// Detection weights w(x, b) for the second party's outcome b at the
// first party's setting x under an ideal Bell state measured at the
// standard CHSH angles, with s_pm = (1 +- 1/sqrt(2))/4:
//   x=1: (eta1 s+ + eta3 s-, eta1 s- + eta3 s+)
//   x=0: (eta2 s+ + eta4 s-, eta2 s- + eta4 s+)
// The weights do not depend on the second party's own setting, which is
// the equality detector_asymmetry_check() tests.
struct DetectorMarginals {
  // weight[x][b]
  std::array<std::array<double, 2>, 2> weight;
};

DetectorMarginals detector_marginals(const DetectorEfficiencies& eff);

// The 32 unit vectors at the vertices and face centers of a regular
// dodecahedron, rotated so the first entry is the vertex (0,0,1).
// Points come in antipodal pairs; index i pairs with the entry holding
// -v. Which 16 of these a given experiment used is the caller's choice.
std::vector<Direction> dodecahedron_candidates();

}  // namespace nosignal

#endif  // NOSIGNAL_QMODEL_HPP
