// Copyright 2026 The liebracket Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "liebracket/dubins.h"

#include <cmath>

#include "liebracket/errors.h"
#include "liebracket/simulator.h"

namespace liebracket {

namespace {

void CheckLength(const Vec& x, Eigen::Index n, const char* what) {
  if (x.size() != n) throw ContractError(what);
}

}  // namespace

Vec DubinsState1::ToVector() const { return Eigen::Vector3d(x1, x2, x3); }

DubinsState1 DubinsState1::FromVector(const Vec& x) {
  CheckLength(x, 3, "first-order Dubins state needs 3 components");
  return {x[0], x[1], x[2]};
}

Vec DubinsState2::ToVector() const {
  Vec v(5);
  v << x1, x2, x3, x4, x5;
  return v;
}

DubinsState2 DubinsState2::FromVector(const Vec& x) {
  CheckLength(x, 5, "second-order Dubins state needs 5 components");
  return {x[0], x[1], x[2], x[3], x[4]};
}

void GainSet::Validate() const {
  for (const double k : {k_vel, k_pose1, k_pose2}) {
    if (!(k > 0.0) || !std::isfinite(k)) {
      throw ContractError("controller gains must be positive");
    }
  }
}

DubinsFields Dubins1Fields() {
  VectorField f(
      3,
      [](const Vec& x) -> Vec {
        return Eigen::Vector3d(std::cos(x[2]), std::sin(x[2]), 0.0);
      },
      [](const Vec& x) -> Mat {
        Mat j = Mat::Zero(3, 3);
        j(0, 2) = -std::sin(x[2]);
        j(1, 2) = std::cos(x[2]);
        return j;
      },
      "f");
  VectorField g = VectorField::Constant(Eigen::Vector3d(0.0, 0.0, 1.0), "g");
  return {std::move(f), std::move(g)};
}

Eigen::Vector3d Dubins1Bracket(double x3) {
  return {std::sin(x3), -std::cos(x3), 0.0};
}

Vec Dubins1Dynamics(const Vec& x, const Vec& u) {
  return Eigen::Vector3d(u[0] * std::cos(x[2]), u[0] * std::sin(x[2]), u[1]);
}

Eigen::Matrix3d BodyMatrix(double x3) {
  const double c = std::cos(x3);
  const double s = std::sin(x3);
  Eigen::Matrix3d a;
  a << c, 0.0, s,
       s, 0.0, -c,
       0.0, 1.0, 0.0;
  return a;
}

BracketCommand CardinalController(const DubinsState1& x,
                                  const Eigen::Vector3d& xdot_d) {
  const Eigen::Vector3d a = BodyMatrix(x.x3).transpose() * xdot_d;
  return {a[0], a[1], a[2]};
}

Eigen::Vector3d DesiredPoseRate(const Pose& pose, const Pose& p,
                                const Eigen::Vector3d& pdot, double gain) {
  Eigen::Vector3d err = p.AsVector() - pose.AsVector();
  err[2] = WrapAngle(err[2]);
  return gain * err + pdot;
}

BracketCommand PoseController1(const DubinsState1& x, const Pose& p,
                               const Eigen::Vector3d& pdot,
                               const GainSet& gains) {
  const Pose pose{x.x1, x.x2, x.x3};
  return CardinalController(x, DesiredPoseRate(pose, p, pdot, gains.k_pose1));
}

Vec Dubins2Dynamics(const DubinsState2& x, const Eigen::Vector2d& u) {
  Vec dx(5);
  dx << x.x4 * std::cos(x.x3), x.x4 * std::sin(x.x3), x.x5, u[0], u[1];
  return dx;
}

Vec Dubins2Dynamics(const Vec& x, const Vec& u) {
  CheckLength(u, 2, "second-order Dubins input needs 2 components");
  return Dubins2Dynamics(DubinsState2::FromVector(x), Eigen::Vector2d(u[0], u[1]));
}

Eigen::Vector2d VelocityLoop(const DubinsState2& x, const Eigen::Vector2d& v_d,
                             const GainSet& gains) {
  return gains.k_vel * (v_d - Eigen::Vector2d(x.x4, x.x5));
}

PoseControl2Output PoseController2(const DubinsState2& x, const Pose& p,
                                   const Eigen::Vector3d& pdot,
                                   const GainSet& gains, const MuxState& mux,
                                   double dt) {
  const Pose pose{x.x1, x.x2, x.x3};
  const Eigen::Vector3d xdot_d = DesiredPoseRate(pose, p, pdot, gains.k_pose2);
  const BracketCommand a =
      CardinalController(DubinsState1{x.x1, x.x2, x.x3}, xdot_d);
  PoseControl2Output out;
  out.mux = MuxAdvance(mux, dt, a);
  out.command = a;
  const InputPair v = MuxOutput(out.mux);
  out.u = VelocityLoop(x, Eigen::Vector2d(v.u1, v.u2), gains);
  return out;
}

ReferenceSample LissajousReference(double t) {
  ReferenceSample r;
  r.p = {5.0 * std::sin(t / 100.0), 5.0 * std::sin(2.0 * t / 100.0), 0.0};
  r.pdot = {0.05 * std::cos(t / 100.0), 0.1 * std::cos(2.0 * t / 100.0), 0.0};
  return r;
}

}  // namespace liebracket
