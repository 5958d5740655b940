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

#include "liebracket/scenario.h"

#include <cmath>
#include <string>

#include "gtest/gtest.h"
#include "liebracket/errors.h"
#include "liebracket/trajectory_io.h"

namespace liebracket {
namespace {

Scenario Find(const std::vector<Scenario>& list, const std::string& name) {
  for (const Scenario& s : list) {
    if (s.name == name) return s;
  }
  ADD_FAILURE() << "no scenario " << name;
  return {};
}

TEST(Builtins, Catalog) {
  const auto names = BuiltinNames();
  for (const char* expected : {"cross", "spin", "cardinal", "lissajous", "pose1"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end()) << expected;
    EXPECT_FALSE(BuiltinDescription(expected).empty());
  }
  EXPECT_EQ(BuiltinScenarios("cross").size(), 4u);
  EXPECT_EQ(BuiltinScenarios("cardinal").size(), 4u);
  EXPECT_TRUE(BuiltinScenarios("nope").empty());
  for (const std::string& name : names) {
    for (const Scenario& s : BuiltinScenarios(name)) {
      EXPECT_NO_THROW(ValidateScenario(s)) << s.name;
    }
  }
}

TEST(ResolveDelta, SquareRootOfDtByDefault) {
  Scenario s = BuiltinScenarios("cross").front();
  const DeltaChoice d = ResolveDelta(s);
  EXPECT_EQ(d.steps_per_leg, 10);
  EXPECT_DOUBLE_EQ(d.effective, 0.1);
  EXPECT_FALSE(d.rounded);
}

TEST(ResolveDelta, RoundsToMultipleOfDt) {
  Scenario s = BuiltinScenarios("cross").front();
  s.sim.dt = 0.003;
  const DeltaChoice d = ResolveDelta(s);  // sqrt(0.003) = 0.05477...
  EXPECT_NEAR(d.requested, std::sqrt(0.003), 1e-15);
  EXPECT_EQ(d.steps_per_leg, 18);
  EXPECT_NEAR(d.effective, 0.054, 1e-15);
  EXPECT_TRUE(d.rounded);

  s.delta = 0.0001;  // below dt: one step per leg
  EXPECT_EQ(ResolveDelta(s).steps_per_leg, 1);
}

TEST(ResolveDelta, SummaryReportsBoth) {
  Scenario s = BuiltinScenarios("spin").front();
  s.sim.dt = 0.003;
  s.sim.t_end = 1.0;
  const ScenarioResult r = RunScenario(s);
  EXPECT_TRUE(r.summary.delta.rounded);
  const std::string json = SummaryJson(r.summary);
  EXPECT_NE(json.find("\"delta_requested\""), std::string::npos);
  EXPECT_NE(json.find("\"delta_effective\""), std::string::npos);
}

TEST(ValidateScenario, FieldPaths) {
  const Scenario base = BuiltinScenarios("cross").front();
  const auto field_of = [](const Scenario& s) {
    try {
      ValidateScenario(s);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return std::string("<valid>");
  };
  Scenario s = base;
  s.sim.dt = 0.0;
  EXPECT_EQ(field_of(s), "sim.dt");
  s = base;
  s.sim.t_end = 0.001;
  EXPECT_EQ(field_of(s), "sim.t_end");
  s = base;
  s.x0 = Vec::Zero(5);
  EXPECT_EQ(field_of(s), "x0");
  s = base;
  s.controller = ControllerKind::kPose2;
  EXPECT_EQ(field_of(s), "controller");
  s = base;
  s.gains.k_vel = -1;
  EXPECT_EQ(field_of(s), "gains.k_vel");
  s = base;
  s.delta = 0.0;
  EXPECT_EQ(field_of(s), "delta");
  s = base;
  s.name.clear();
  EXPECT_EQ(field_of(s), "name");
  EXPECT_EQ(field_of(base), "<valid>");
}

TEST(ParseScenarios, SingleObject) {
  const auto list = ParseScenarios(R"({
    "name": "lat", "controller": "open_loop_command", "command": [0, 0, 0.1],
    "x0": [0, 0, 1], "sim": {"dt": 0.01, "t_end": 2, "method": "euler"},
    "delta": 0.1, "gains": {"k_vel": 30}, "feedforward": false
  })");
  ASSERT_EQ(list.size(), 1u);
  const Scenario& s = list.front();
  EXPECT_EQ(s.name, "lat");
  EXPECT_EQ(s.command, (BracketCommand{0, 0, 0.1}));
  EXPECT_EQ(s.sim.method, Method::kEuler);
  EXPECT_EQ(s.gains.k_vel, 30.0);
  EXPECT_FALSE(s.feedforward);
  EXPECT_EQ(*s.delta, 0.1);
}

TEST(ParseScenarios, GroupAndReferences) {
  const auto list = ParseScenarios(R"({"scenarios": [
    {"name": "a", "model": "dubins2", "controller": "pose2", "x0": [0,0,0,0,0],
     "reference": {"type": "lissajous"}},
    {"name": "b", "controller": "pose1", "x0": [0,0,0],
     "reference": {"type": "fixed_pose", "pose": [1, 2, 0.5]}}
  ]})");
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[0].model, Model::kDubins2);
  EXPECT_EQ(list[1].reference, ReferenceKind::kFixedPose);
  EXPECT_EQ(list[1].fixed_pose.y, 2.0);
}

TEST(ParseScenarios, ErrorsNameTheField) {
  const auto field_of = [](const std::string& text) {
    try {
      ParseScenarios(text);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return std::string("<valid>");
  };
  EXPECT_EQ(field_of(R"({"scenarios": [{"name": "x", "controller": "cardinal",
      "x0": [0,0,1], "sim": {"dt": -1}}]})"),
            "scenarios[0].sim.dt");
  EXPECT_EQ(field_of(R"({"name": "x", "controller": "cardinal", "x0": [0,0,1],
      "sim": {"dt": "fast"}})"),
            "sim.dt");
  EXPECT_EQ(field_of(R"({"name": "x", "controller": "warp", "x0": [0,0,1]})"),
            "controller");
  EXPECT_EQ(field_of(R"({"name": "x", "controller": "cardinal", "x0": [0,0,1],
      "speed": 3})"),
            "speed");
  EXPECT_EQ(field_of(R"({"name": "x", "controller": "cardinal", "x0": [0,0,1],
      "command": [1, 2]})"),
            "command");
  EXPECT_EQ(field_of(R"({"name": "x", "controller": "cardinal"})"), "x0");
  EXPECT_EQ(field_of("{not json"), "<document>");
}

TEST(LoadScenarioFile, MissingFileIsIoError) {
  EXPECT_THROW(LoadScenarioFile("/nonexistent/scenario.json"), IoError);
}

TEST(RunScenario, CrossForwardDisplacement) {
  const ScenarioResult r = RunScenario(Find(BuiltinScenarios("cross"), "cross-forward"));
  EXPECT_NEAR(r.summary.net_displacement.head(2).norm(), 1.0, 1e-9);
  EXPECT_NEAR(r.summary.final_time, 10.0, 1e-12);
  EXPECT_EQ(r.trajectory.size(), 1001u);
  ASSERT_TRUE(r.trajectory.has_commands());
}

TEST(RunScenario, CrossLateralMeanVelocity) {
  const ScenarioResult r = RunScenario(Find(BuiltinScenarios("cross"), "cross-lateral"));
  const Vec v = MeanVelocity(r.trajectory, 0.0, 10.0);
  const Eigen::Vector2d lateral(std::sin(1.0), -std::cos(1.0));
  EXPECT_NEAR(v.head(2).norm(), 0.1, 0.01);
  const double cos_angle = v.head(2).normalized().dot(lateral);
  EXPECT_GT(cos_angle, std::cos(10.0 * M_PI / 180.0));
}

TEST(RunScenario, SpinTurnsInPlace) {
  const ScenarioResult r = RunScenario(Find(BuiltinScenarios("spin"), "spin-ccw"));
  EXPECT_LT(r.summary.net_displacement.head(2).norm(), 1e-12);
  EXPECT_NEAR(r.summary.final_state[2], 2.0, 1e-9);
}

TEST(RunScenario, SummaryMatchesCsvRows) {
  Scenario s = Find(BuiltinScenarios("cardinal"), "cardinal-north");
  s.sim.t_end = 3.0;
  const ScenarioResult r = RunScenario(s);
  const Trajectory back = ParseCsv(FormatCsv(r.trajectory));
  const Vec diff = back.states.back() - back.states.front();
  EXPECT_EQ(diff, r.summary.net_displacement);
}

TEST(RunScenario, TrackingSummaryOnlyForPoseControllers) {
  Scenario s = BuiltinScenarios("lissajous").front();
  s.sim.t_end = 20.0;
  s.tail_start = 10.0;
  const ScenarioResult r = RunScenario(s);
  ASSERT_TRUE(r.summary.tail_max_position_error.has_value());
  EXPECT_LE(*r.summary.tail_max_position_error, *r.summary.max_position_error);
  EXPECT_FALSE(RunScenario(BuiltinScenarios("spin").front())
                   .summary.max_position_error.has_value());
}

TEST(RunScenario, FeedforwardReducesLag) {
  Scenario s = BuiltinScenarios("pose1").front();
  s.sim.t_end = 150.0;
  s.tail_start = 50.0;
  s.gains.k_pose1 = 0.3;
  const double with_ff = *RunScenario(s).summary.tail_max_position_error;
  s.feedforward = false;
  const double without_ff = *RunScenario(s).summary.tail_max_position_error;
  EXPECT_LT(with_ff, without_ff);
}

TEST(RunScenarioProperty, DeterministicCsvBytes) {
  for (const std::string& name : {"cross", "cardinal"}) {
    for (const Scenario& s : BuiltinScenarios(name)) {
      EXPECT_EQ(FormatCsv(RunScenario(s).trajectory),
                FormatCsv(RunScenario(s).trajectory))
          << s.name;
    }
  }
}

}  // namespace
}  // namespace liebracket
