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

#include "liebracket/multiplexer.h"

#include <cmath>
#include <sstream>

#include "liebracket/errors.h"

namespace liebracket {

namespace {
constexpr double kAlignTol = 1e-9;
}  // namespace

std::ostream& operator<<(std::ostream& os, const BracketCommand& cmd) {
  return os << "(" << cmd.a1 << ", " << cmd.a2 << ", " << cmd.a3 << ")";
}

CycleParams ComputeCycleParams(const BracketCommand& cmd, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw ContractError("cycle leg duration delta must be positive");
  }
  if (!std::isfinite(cmd.a1) || !std::isfinite(cmd.a2) ||
      !std::isfinite(cmd.a3)) {
    throw ContractError("bracket command must be finite");
  }
  CycleParams params;
  params.delta = delta;
  if (cmd.a3 != 0.0) {
    params.alpha = std::sqrt(4.0 * std::abs(cmd.a3) / delta);
    params.epsilon = cmd.a3 > 0.0 ? 1 : -1;
  }
  return params;
}

int StepsPerLeg(double delta, double dt) {
  if (!(dt > 0.0)) throw ContractError("integrator step dt must be positive");
  if (!(delta > 0.0)) throw ContractError("cycle leg duration delta must be positive");
  if (dt > delta * (1.0 + kAlignTol)) {
    std::ostringstream os;
    os << "dt = " << dt << " exceeds the leg duration delta = " << delta;
    throw ContractError(os.str());
  }
  const double ratio = delta / dt;
  const double steps = std::round(ratio);
  if (std::abs(ratio - steps) > kAlignTol * ratio) {
    std::ostringstream os;
    os << "delta = " << delta << " is not an integer multiple of dt = " << dt;
    throw ContractError(os.str());
  }
  return static_cast<int>(steps);
}

MuxState MuxState::Start(const BracketCommand& cmd, double delta) {
  MuxState state;
  state.held_command = cmd;
  state.params = ComputeCycleParams(cmd, delta);
  return state;
}

MuxState MuxState::Primed(double delta, double dt) {
  const int steps = StepsPerLeg(delta, dt);
  MuxState state = Start(BracketCommand{}, delta);
  state.leg = 3;
  state.time_in_leg = (steps - 1) * dt;
  return state;
}

InputPair MuxOutput(const MuxState& state) {
  const BracketCommand& a = state.held_command;
  const double alpha = state.params.alpha;
  const double eps_alpha = state.params.epsilon * alpha;
  switch (state.leg) {
    case 0:
      return {a.a1 + eps_alpha, a.a2};
    case 1:
      return {a.a1, a.a2 + alpha};
    case 2:
      return {a.a1 - eps_alpha, a.a2};
    case 3:
      return {a.a1, a.a2 - alpha};
  }
  throw ContractError("multiplexer leg out of range");
}

MuxState MuxAdvance(const MuxState& state, double dt,
                    const BracketCommand& next_cmd) {
  const double delta = state.params.delta;
  StepsPerLeg(delta, dt);
  MuxState next = state;
  next.time_in_leg += dt;
  // Leg boundaries sit on integrator steps, so compare with a relative slack.
  if (next.time_in_leg >= delta * (1.0 - kAlignTol)) {
    next.time_in_leg = 0.0;
    next.leg = (state.leg + 1) % 4;
    if (next.leg == 0) {
      next.held_command = next_cmd;
      next.params = ComputeCycleParams(next_cmd, delta);
    }
  }
  return next;
}

InputPair UnitCycleInput(int leg) {
  static constexpr std::array<InputPair, 4> kLegs = {
      InputPair{1.0, 0.0}, InputPair{0.0, 1.0}, InputPair{-1.0, 0.0},
      InputPair{0.0, -1.0}};
  return kLegs.at(static_cast<std::size_t>(((leg % 4) + 4) % 4));
}

}  // namespace liebracket
