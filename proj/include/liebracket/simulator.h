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

// Fixed-step integration of controlled systems x' = F(x, u) with the input
// held constant across each step, plus a few metrics over the recorded
// trajectory.

#ifndef LIEBRACKET_SIMULATOR_H_
#define LIEBRACKET_SIMULATOR_H_

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "liebracket/multiplexer.h"
#include "liebracket/vector_field.h"

namespace liebracket {

enum class Method { kEuler, kRk4 };

std::string_view MethodName(Method method);
// Throws ContractError for anything other than "euler" or "rk4".
Method ParseMethod(std::string_view name);

struct SimConfig {
  double dt = 0.01;
  double t_end = 10.0;
  Method method = Method::kRk4;
  int record_stride = 1;

  // Number of integrator steps; t_end is rounded to a multiple of dt.
  long StepCount() const;
  void Validate() const;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Vec> states;
  // Input applied over [t, t + dt) for each recorded sample.
  std::vector<Vec> inputs;
  // Empty unless the controller reports a bracket command.
  std::vector<BracketCommand> commands;

  std::size_t size() const { return times.size(); }
  bool empty() const { return times.empty(); }
  bool has_commands() const { return !commands.empty(); }
};

using Dynamics = std::function<Vec(const Vec& x, const Vec& u)>;

struct ControlStep {
  Vec u;
  MuxState mux;
  std::optional<BracketCommand> command;
};

using Controller =
    std::function<ControlStep(double t, const Vec& x, const MuxState& mux)>;

// One step of the chosen method with u frozen.
Vec IntegrateStep(const Dynamics& dynamics, const Vec& x, const Vec& u,
                  double dt, Method method);

// Runs from x0 over config.StepCount() steps. The controller is called once at
// the start of each step; its u is held for that step. Samples are recorded
// at every record_stride-th step including the initial state, and include the
// final state when the step count is a multiple of the stride. Throws
// DivergenceError when the state becomes non-finite.
Trajectory Simulate(const Dynamics& dynamics, const Controller& controller,
                    const Vec& x0, const SimConfig& config,
                    const MuxState& mux0 = MuxState{});

// (x(t1) - x(t0)) / (t1 - t0) using the recorded samples nearest t0 and t1.
Vec MeanVelocity(const Trajectory& traj, double t0, double t1);

// Which state components to compare against a reference. Components listed
// in `angular` are wrapped to (-pi, pi] before taking the norm.
struct ErrorComponents {
  std::vector<int> indices;
  std::vector<int> angular;
};

// Euclidean error per recorded sample. reference(t) must be indexable by
// every entry of components.indices.
std::vector<double> TrackingError(const Trajectory& traj,
                                  const std::function<Vec(double)>& reference,
                                  const ErrorComponents& components);

double WrapAngle(double angle);

}  // namespace liebracket

#endif  // LIEBRACKET_SIMULATOR_H_
