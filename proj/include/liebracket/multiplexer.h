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

// Time-division multiplexing of two inputs so that their average motion
// follows a1*f + a2*g + a3*[f,g].
//
// A cycle has four legs of duration delta:
//   leg 0: (a1 + eps*alpha, a2)
//   leg 1: (a1, a2 + alpha)
//   leg 2: (a1 - eps*alpha, a2)
//   leg 3: (a1, a2 - alpha)
// with alpha = sqrt(4|a3| / delta) and eps = sign(a3). The command is latched
// when the cycle starts and held for all four legs.

#ifndef LIEBRACKET_MULTIPLEXER_H_
#define LIEBRACKET_MULTIPLEXER_H_

#include <array>
#include <ostream>

namespace liebracket {

struct BracketCommand {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  friend bool operator==(const BracketCommand&, const BracketCommand&) = default;
};

std::ostream& operator<<(std::ostream& os, const BracketCommand& cmd);

struct CycleParams {
  double alpha = 0.0;
  int epsilon = 0;  // -1, 0 or +1
  double delta = 0.0;

  friend bool operator==(const CycleParams&, const CycleParams&) = default;
};

// Throws ContractError if delta <= 0 or the command is not finite.
CycleParams ComputeCycleParams(const BracketCommand& cmd, double delta);

struct MuxState {
  int leg = 0;
  double time_in_leg = 0.0;
  BracketCommand held_command;
  CycleParams params;

  // Leg 0 at t = 0 with `cmd` latched.
  static MuxState Start(const BracketCommand& cmd, double delta);

  // One integrator step before a cycle boundary (leg 3, delta - dt), so that
  // the first MuxAdvance() latches the command computed from the initial
  // state. Controllers that compute their command every step use this.
  static MuxState Primed(double delta, double dt);
};

struct InputPair {
  double u1 = 0.0;
  double u2 = 0.0;

  friend bool operator==(const InputPair&, const InputPair&) = default;
};

// Zero-order-hold output of the current leg.
InputPair MuxOutput(const MuxState& state);

// Advances the phase by dt. When the cycle wraps back to leg 0, `next_cmd`
// is latched and the cycle parameters are recomputed. dt must not exceed
// delta and delta must be an integer multiple of dt.
MuxState MuxAdvance(const MuxState& state, double dt,
                    const BracketCommand& next_cmd);

// The unscaled sequence {(1,0),(0,1),(-1,0),(0,-1)}.
InputPair UnitCycleInput(int leg);

// Number of integrator steps per leg, or throws ContractError when delta is
// not an integer multiple of dt (relative tolerance 1e-9).
int StepsPerLeg(double delta, double dt);

}  // namespace liebracket

#endif  // LIEBRACKET_MULTIPLEXER_H_
