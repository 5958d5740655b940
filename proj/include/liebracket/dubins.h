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

// First- and second-order Dubins car models and the controllers that let the
// car translate in any world direction while holding an independent heading.
//
// First order:  x = (x1, x2, x3),  x' = f(x) u1 + g(x) u2 with
//   f = (cos x3, sin x3, 0), g = (0, 0, 1), [f, g] = (sin x3, -cos x3, 0).
// Second order: x = (x1, ..., x5), speed x4 and turn rate x5 are driven by
//   u1, u2 through integrators.

#ifndef LIEBRACKET_DUBINS_H_
#define LIEBRACKET_DUBINS_H_

#include <Eigen/Core>

#include "liebracket/multiplexer.h"
#include "liebracket/vector_field.h"

namespace liebracket {

struct DubinsState1 {
  double x1 = 0.0;  // m, east
  double x2 = 0.0;  // m, north
  double x3 = 0.0;  // rad, heading (not wrapped)

  Vec ToVector() const;
  static DubinsState1 FromVector(const Vec& x);
};

struct DubinsState2 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  double x4 = 0.0;  // m/s, speed
  double x5 = 0.0;  // rad/s, turn rate

  Vec ToVector() const;
  static DubinsState2 FromVector(const Vec& x);
};

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  Eigen::Vector3d AsVector() const { return {x, y, theta}; }
};

struct GainSet {
  double k_vel = 20.0;   // inner velocity loop, 1/s
  double k_pose1 = 1.0;  // first-order pose loop, 1/s
  double k_pose2 = 0.3;  // second-order outer pose loop, 1/s

  // Throws ContractError unless every gain is positive and finite.
  void Validate() const;
};

struct DubinsFields {
  VectorField f;
  VectorField g;
};

// f and g of the first-order car, both with analytic Jacobians.
DubinsFields Dubins1Fields();

// Closed-form [f, g] = (sin x3, -cos x3, 0).
Eigen::Vector3d Dubins1Bracket(double x3);

// x' = f(x) u1 + g(x) u2 for x in R^3, u in R^2.
Vec Dubins1Dynamics(const Vec& x, const Vec& u);

// Columns f, g, [f, g] at heading x3. The matrix is orthogonal.
Eigen::Matrix3d BodyMatrix(double x3);

// a = A(x3)^-1 xdot_d, computed as the transpose.
BracketCommand CardinalController(const DubinsState1& x,
                                  const Eigen::Vector3d& xdot_d);

// gain * (p - pose) + pdot with the heading difference wrapped to (-pi, pi].
Eigen::Vector3d DesiredPoseRate(const Pose& pose, const Pose& p,
                                const Eigen::Vector3d& pdot, double gain);

BracketCommand PoseController1(const DubinsState1& x, const Pose& p,
                               const Eigen::Vector3d& pdot,
                               const GainSet& gains);

// (x4 cos x3, x4 sin x3, x5, u1, u2).
Vec Dubins2Dynamics(const DubinsState2& x, const Eigen::Vector2d& u);
// Same, in the form the simulator expects.
Vec Dubins2Dynamics(const Vec& x, const Vec& u);

// u = k_vel * (v_d - (x4, x5)).
Eigen::Vector2d VelocityLoop(const DubinsState2& x, const Eigen::Vector2d& v_d,
                             const GainSet& gains);

struct PoseControl2Output {
  Eigen::Vector2d u;
  MuxState mux;
  BracketCommand command;  // world-to-body mapped command fed to the mux
};

// Outer proportional pose loop, body-frame linearization, multiplexer and
// inner velocity loop, in that order. `mux` is the state of the previous
// step; it is advanced by dt (latching the new command at a cycle boundary)
// before its output is used as the velocity setpoint. Start from
// MuxState::Primed(delta, dt).
PoseControl2Output PoseController2(const DubinsState2& x, const Pose& p,
                                   const Eigen::Vector3d& pdot,
                                   const GainSet& gains, const MuxState& mux,
                                   double dt);

struct ReferenceSample {
  Pose p;
  Eigen::Vector3d pdot;
};

// p(t) = (5 sin(t/100), 5 sin(2t/100), 0), heading fixed to east.
ReferenceSample LissajousReference(double t);

}  // namespace liebracket

#endif  // LIEBRACKET_DUBINS_H_
