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

// Scenario description, validation, built-in experiments and the runner that
// wires a model, a controller and the simulator together.

#ifndef LIEBRACKET_SCENARIO_H_
#define LIEBRACKET_SCENARIO_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liebracket/batch.h"
#include "liebracket/dubins.h"
#include "liebracket/multiplexer.h"
#include "liebracket/simulator.h"

namespace liebracket {

enum class Model { kDubins1, kDubins2 };

enum class ControllerKind {
  kOpenLoopCommand,  // constant bracket command through the multiplexer
  kCardinal,         // constant world-frame velocity
  kPose1,            // first-order pose tracking
  kPose2,            // second-order pose tracking
};

enum class ReferenceKind { kLissajous, kFixedPose };

struct Scenario {
  std::string name;
  Model model = Model::kDubins1;
  ControllerKind controller = ControllerKind::kOpenLoopCommand;
  BracketCommand command;
  Eigen::Vector3d xdot_d = Eigen::Vector3d::Zero();
  ReferenceKind reference = ReferenceKind::kLissajous;
  Pose fixed_pose;
  Vec x0;
  SimConfig sim;
  // Leg duration; sqrt(sim.dt) when unset.
  std::optional<double> delta;
  GainSet gains;
  bool feedforward = true;
  // Start of the window for tail tracking errors; t_end / 4 when unset.
  std::optional<double> tail_start;
};

struct DeltaChoice {
  double requested = 0.0;
  double effective = 0.0;  // integer multiple of sim.dt
  int steps_per_leg = 0;
  bool rounded = false;
};

// Rounds the requested delta to the nearest positive multiple of sim.dt.
DeltaChoice ResolveDelta(const Scenario& s);

// Throws ConfigError naming the offending field.
void ValidateScenario(const Scenario& s);

struct RunSummary {
  std::string name;
  DeltaChoice delta;
  double final_time = 0.0;
  Vec final_state;
  Vec net_displacement;  // last recorded minus first recorded state
  Vec mean_velocity;
  // Pose-tracking scenarios only.
  std::optional<double> max_position_error;
  std::optional<double> tail_max_position_error;
  std::optional<double> tail_max_heading_error;
  double tail_start = 0.0;
};

struct ScenarioResult {
  Trajectory trajectory;
  RunSummary summary;
};

ScenarioResult RunScenario(const Scenario& s);

std::vector<ScenarioResult> RunScenariosSerial(std::span<const Scenario> batch);
std::vector<ScenarioResult> RunScenariosParallel(std::span<const Scenario> batch);
std::vector<ScenarioResult> RunScenarios(std::span<const Scenario> batch,
                                         Execution exec);

// The pose reference of a tracking scenario as (x, y, theta) at time t.
Vec ScenarioReference(const Scenario& s, double t);

// Built-in groups: cross, spin, cardinal, lissajous, pose1.
std::vector<std::string> BuiltinNames();
std::string BuiltinDescription(std::string_view name);
// Empty when `name` is not a builtin.
std::vector<Scenario> BuiltinScenarios(std::string_view name);

// A JSON document holding one scenario object or {"scenarios": [...]}.
std::vector<Scenario> ParseScenarios(std::string_view json_text);
std::vector<Scenario> LoadScenarioFile(const std::filesystem::path& path);

std::string SummaryJson(const RunSummary& summary);

std::string_view ModelName(Model m);
std::string_view ControllerName(ControllerKind c);

}  // namespace liebracket

#endif  // LIEBRACKET_SCENARIO_H_
