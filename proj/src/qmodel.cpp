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
#include <stdexcept>

#include <Eigen/Geometry>

namespace nosignal {

Direction::Direction(const Eigen::Vector3d& v) : v_(v) {
  if (std::abs(v.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("Direction: vector is not unit length");
  }
}

Direction Direction::normalized(const Eigen::Vector3d& v) {
  const double norm = v.norm();
  if (norm == 0.0) {
    throw std::invalid_argument("Direction: cannot normalize a zero vector");
  }
  return Direction(Eigen::Vector3d(v / norm));
}

Direction bloch_from_polarization(double angle_deg) {
  if (!std::isfinite(angle_deg)) {
    throw std::invalid_argument("bloch_from_polarization: non-finite angle");
  }
  const double phi = 2.0 * angle_deg * std::numbers::pi / 180.0;
  return Direction::normalized({std::cos(phi), std::sin(phi), 0.0});
}

Direction bloch_from_phase(double phase_rad) {
  if (!std::isfinite(phase_rad)) {
    throw std::invalid_argument("bloch_from_phase: non-finite phase");
  }
  return Direction::normalized({std::cos(phase_rad), std::sin(phase_rad), 0.0});
}

double correlation(const Direction& a, const Direction& b,
                   double visibility) {
  if (visibility < 0.0 || visibility > 1.0) {
    throw std::invalid_argument("correlation: visibility outside [0,1]");
  }
  return -visibility * a.vec().dot(b.vec());
}

double phase_correlation(double phi_a, double phi_b, double visibility) {
  return correlation(bloch_from_phase(phi_a), bloch_from_phase(phi_b),
                     visibility);
}

double chsh_value(const Eigen::Matrix2d& correlations, ChshSign sign) {
  if ((correlations.array().abs() > 1.0 + 1e-12).any()) {
    throw std::invalid_argument("chsh_value: correlation outside [-1,1]");
  }
  int neg_row = 1, neg_col = 1;
  switch (sign) {
    case ChshSign::kNegate00: neg_row = 0; neg_col = 0; break;
    case ChshSign::kNegate01: neg_row = 0; neg_col = 1; break;
    case ChshSign::kNegate10: neg_row = 1; neg_col = 0; break;
    case ChshSign::kNegate11: break;
  }
  double s = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      s += (i == neg_row && j == neg_col) ? -correlations(i, j)
                                          : correlations(i, j);
    }
  }
  return s;
}

double joint_probability(const Direction& a, const Direction& b,
                         double visibility, int sign_a, int sign_b) {
  if ((sign_a != 1 && sign_a != -1) || (sign_b != 1 && sign_b != -1)) {
    throw std::invalid_argument("joint_probability: outcomes must be +-1");
  }
  return (1.0 + sign_a * sign_b * correlation(a, b, visibility)) / 4.0;
}

double singlet_outcome_probability(const CorrelationModel& model, int x,
                                   int y, int a, int b) {
  const Direction& na = model.alice_axes.at(x);
  const Direction& nb = model.bob_axes.at(y);
  return joint_probability(na, nb, model.visibility, a == 0 ? 1 : -1,
                           b == 0 ? 1 : -1);
}

CorrelationModel chsh_singlet(double visibility) {
  CorrelationModel model;
  model.visibility = visibility;
  model.alice_axes = {bloch_from_polarization(0.0),
                      bloch_from_polarization(45.0)};
  model.bob_axes = {bloch_from_polarization(-22.5),
                    bloch_from_polarization(-67.5)};
  return model;
}

DetectorMarginals detector_marginals(const DetectorEfficiencies& eff) {
  for (double eta : eff.eta) {
    if (eta < 0.0 || eta > 1.0) {
      throw std::invalid_argument("detector_marginals: efficiency outside "
                                  "[0,1]");
    }
  }
  const double s_plus = (1.0 + 1.0 / std::numbers::sqrt2) / 4.0;
  const double s_minus = (1.0 - 1.0 / std::numbers::sqrt2) / 4.0;
  // Setting 1 routes to APD1/APD3, setting 0 to APD2/APD4.
  DetectorMarginals m;
  m.weight[1][0] = eff.eta[0] * s_plus + eff.eta[2] * s_minus;
  m.weight[1][1] = eff.eta[0] * s_minus + eff.eta[2] * s_plus;
  m.weight[0][0] = eff.eta[1] * s_plus + eff.eta[3] * s_minus;
  m.weight[0][1] = eff.eta[1] * s_minus + eff.eta[3] * s_plus;
  return m;
}

std::vector<Direction> dodecahedron_candidates() {
  const double phi = std::numbers::phi;
  std::vector<Eigen::Vector3d> points;
  points.reserve(32);
  // The 20 vertices, first the cube (+-1,+-1,+-1), then the three
  // golden rectangles.
  for (double sx : {1.0, -1.0}) {
    for (double sy : {1.0, -1.0}) {
      for (double sz : {1.0, -1.0}) {
        points.emplace_back(sx, sy, sz);
      }
    }
  }
  for (double s1 : {1.0, -1.0}) {
    for (double s2 : {1.0, -1.0}) {
      points.emplace_back(0.0, s1 / phi, s2 * phi);
      points.emplace_back(s1 / phi, s2 * phi, 0.0);
      points.emplace_back(s1 * phi, 0.0, s2 / phi);
    }
  }
  // The 12 face centers: vertices of the dual icosahedron.
  for (double s1 : {1.0, -1.0}) {
    for (double s2 : {1.0, -1.0}) {
      points.emplace_back(0.0, s1, s2 * phi);
      points.emplace_back(s1, s2 * phi, 0.0);
      points.emplace_back(s1 * phi, 0.0, s2);
    }
  }

  // Rotate the vertex (0, 1/phi, phi) onto the pole (0, 0, 1).
  const Eigen::Vector3d pole_vertex =
      Eigen::Vector3d(0.0, 1.0 / phi, phi).normalized();
  const Eigen::Quaterniond rotation =
      Eigen::Quaterniond::FromTwoVectors(pole_vertex, Eigen::Vector3d(0, 0, 1));

  std::vector<Direction> directions;
  directions.reserve(points.size());
  directions.push_back(Direction::normalized(rotation * pole_vertex));
  for (const auto& p : points) {
    if (p.normalized().isApprox(pole_vertex, 1e-12)) continue;
    directions.push_back(Direction::normalized(rotation * p.normalized()));
  }
  return directions;
}

}  // namespace nosignal
