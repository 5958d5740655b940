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

#include "liebracket/simulator.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "liebracket/errors.h"

namespace liebracket {

std::string_view MethodName(Method method) {
  return method == Method::kEuler ? "euler" : "rk4";
}

Method ParseMethod(std::string_view name) {
  if (name == "euler") return Method::kEuler;
  if (name == "rk4") return Method::kRk4;
  throw ContractError("unknown integration method '" + std::string(name) +
                      "' (expected euler or rk4)");
}

long SimConfig::StepCount() const {
  return std::lround(t_end / dt);
}

void SimConfig::Validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ContractError("dt must be positive");
  }
  if (!std::isfinite(t_end) || t_end < dt * (1.0 - 1e-12)) {
    throw ContractError("t_end must be at least dt");
  }
  if (record_stride < 1) throw ContractError("record_stride must be positive");
}

Vec IntegrateStep(const Dynamics& dynamics, const Vec& x, const Vec& u,
                  double dt, Method method) {
  if (method == Method::kEuler) return x + dt * dynamics(x, u);
  const Vec k1 = dynamics(x, u);
  const Vec k2 = dynamics(x + 0.5 * dt * k1, u);
  const Vec k3 = dynamics(x + 0.5 * dt * k2, u);
  const Vec k4 = dynamics(x + dt * k3, u);
  return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Trajectory Simulate(const Dynamics& dynamics, const Controller& controller,
                    const Vec& x0, const SimConfig& config,
                    const MuxState& mux0) {
  config.Validate();
  if (!x0.allFinite()) throw ContractError("initial state must be finite");

  const long steps = config.StepCount();
  const long stride = config.record_stride;
  Trajectory traj;
  const auto reserve = static_cast<std::size_t>(steps / stride + 1);
  traj.times.reserve(reserve);
  traj.states.reserve(reserve);
  traj.inputs.reserve(reserve);

  Vec x = x0;
  MuxState mux = mux0;
  bool any_command = false;
  for (long k = 0; k <= steps; ++k) {
    // Time is recomputed from the step index so it never accumulates error.
    const double t = static_cast<double>(k) * config.dt;
    ControlStep step = controller(t, x, mux);
    if (!step.u.allFinite()) {
      std::ostringstream os;
      os << "controller produced a non-finite input at t = " << t;
      throw DivergenceError(os.str(), t, x);
    }
    if (k % stride == 0) {
      traj.times.push_back(t);
      traj.states.push_back(x);
      traj.inputs.push_back(step.u);
      if (step.command) {
        any_command = true;
        traj.commands.push_back(*step.command);
      } else {
        traj.commands.push_back(BracketCommand{});
      }
    }
    if (k == steps) break;

    Vec next = IntegrateStep(dynamics, x, step.u, config.dt, config.method);
    if (!next.allFinite()) {
      std::ostringstream os;
      os << "state diverged at t = " << t + config.dt;
      throw DivergenceError(os.str(), t + config.dt, x);
    }
    x = std::move(next);
    mux = step.mux;
  }
  if (!any_command) traj.commands.clear();
  return traj;
}

namespace {

std::size_t NearestSample(const std::vector<double>& times, double t) {
  const auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it == times.begin()) return 0;
  if (it == times.end()) return times.size() - 1;
  const auto hi = static_cast<std::size_t>(it - times.begin());
  return (t - times[hi - 1] <= times[hi] - t) ? hi - 1 : hi;
}

}  // namespace

Vec MeanVelocity(const Trajectory& traj, double t0, double t1) {
  if (traj.empty()) throw ContractError("mean velocity of an empty trajectory");
  if (!(t1 > t0)) throw ContractError("mean velocity window must have t1 > t0");
  const std::size_t i0 = NearestSample(traj.times, t0);
  const std::size_t i1 = NearestSample(traj.times, t1);
  if (i1 <= i0) throw ContractError("mean velocity window contains no samples");
  return (traj.states[i1] - traj.states[i0]) /
         (traj.times[i1] - traj.times[i0]);
}

std::vector<double> TrackingError(const Trajectory& traj,
                                  const std::function<Vec(double)>& reference,
                                  const ErrorComponents& components) {
  std::vector<double> errors;
  errors.reserve(traj.size());
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const Vec ref = reference(traj.times[k]);
    const Vec& x = traj.states[k];
    double sum = 0.0;
    for (const int idx : components.indices) {
      if (idx < 0 || idx >= x.size() || idx >= ref.size()) {
        throw ContractError("tracking error component index out of range");
      }
      double diff = ref[idx] - x[idx];
      if (std::find(components.angular.begin(), components.angular.end(),
                    idx) != components.angular.end()) {
        diff = WrapAngle(diff);
      }
      sum += diff * diff;
    }
    errors.push_back(std::sqrt(sum));
  }
  return errors;
}

double WrapAngle(double angle) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double wrapped = std::remainder(angle, kTwoPi);  // [-pi, pi]
  if (wrapped <= -std::numbers::pi) wrapped += kTwoPi;
  return wrapped;
}

}  // namespace liebracket
