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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "liebracket/errors.h"

namespace liebracket {

using nlohmann::json;

namespace {

// Runs a driftless two-input controller through the multiplexer. The command
// is computed from the state at the start of every step and latched only when
// the cycle wraps, so each cycle sees the command of its first step.
Controller Multiplexed(std::function<BracketCommand(double, const Vec&)> command,
                       double dt) {
  return [command = std::move(command), dt](double t, const Vec& x,
                                            const MuxState& mux) {
    const MuxState next = MuxAdvance(mux, dt, command(t, x));
    const InputPair in = MuxOutput(next);
    return ControlStep{Eigen::Vector2d(in.u1, in.u2), next, next.held_command};
  };
}

ReferenceSample Reference(const Scenario& s, double t) {
  if (s.reference == ReferenceKind::kLissajous) return LissajousReference(t);
  return {s.fixed_pose, Eigen::Vector3d::Zero()};
}

Eigen::Vector3d Feedforward(const Scenario& s, const ReferenceSample& r) {
  return s.feedforward ? r.pdot : Eigen::Vector3d::Zero();
}

bool IsTracking(const Scenario& s) {
  return s.controller == ControllerKind::kPose1 ||
         s.controller == ControllerKind::kPose2;
}

Eigen::Index StateDim(Model m) { return m == Model::kDubins1 ? 3 : 5; }

}  // namespace

std::string_view ModelName(Model m) {
  return m == Model::kDubins1 ? "dubins1" : "dubins2";
}

std::string_view ControllerName(ControllerKind c) {
  switch (c) {
    case ControllerKind::kOpenLoopCommand:
      return "open_loop_command";
    case ControllerKind::kCardinal:
      return "cardinal";
    case ControllerKind::kPose1:
      return "pose1";
    case ControllerKind::kPose2:
      return "pose2";
  }
  return "?";
}

DeltaChoice ResolveDelta(const Scenario& s) {
  DeltaChoice d;
  d.requested = s.delta.value_or(std::sqrt(s.sim.dt));
  d.steps_per_leg =
      static_cast<int>(std::max(1L, std::lround(d.requested / s.sim.dt)));
  d.effective = d.steps_per_leg * s.sim.dt;
  d.rounded = std::abs(d.effective - d.requested) > 1e-12 * d.requested;
  return d;
}

void ValidateScenario(const Scenario& s) {
  if (s.name.empty()) throw ConfigError("name", "must not be empty");
  if (!(s.sim.dt > 0.0) || !std::isfinite(s.sim.dt)) {
    throw ConfigError("sim.dt", "must be positive");
  }
  if (!std::isfinite(s.sim.t_end) || s.sim.t_end < s.sim.dt) {
    throw ConfigError("sim.t_end", "must be at least sim.dt");
  }
  if (s.sim.record_stride < 1) {
    throw ConfigError("sim.record_stride", "must be a positive integer");
  }
  if (s.delta && (!(*s.delta > 0.0) || !std::isfinite(*s.delta))) {
    throw ConfigError("delta", "must be positive");
  }
  if (s.x0.size() != StateDim(s.model)) {
    throw ConfigError("x0", "needs " + std::to_string(StateDim(s.model)) +
                                " components for model " +
                                std::string(ModelName(s.model)));
  }
  if (!s.x0.allFinite()) throw ConfigError("x0", "must be finite");
  const bool needs_dubins2 = s.controller == ControllerKind::kPose2;
  if (needs_dubins2 != (s.model == Model::kDubins2)) {
    throw ConfigError("controller", "controller " +
                                        std::string(ControllerName(s.controller)) +
                                        " cannot drive model " +
                                        std::string(ModelName(s.model)));
  }
  if (!std::isfinite(s.command.a1) || !std::isfinite(s.command.a2) ||
      !std::isfinite(s.command.a3)) {
    throw ConfigError("command", "must be finite");
  }
  if (!s.xdot_d.allFinite()) throw ConfigError("xdot_d", "must be finite");
  const std::pair<const char*, double> gains[] = {
      {"gains.k_vel", s.gains.k_vel},
      {"gains.k_pose1", s.gains.k_pose1},
      {"gains.k_pose2", s.gains.k_pose2}};
  for (const auto& [field, k] : gains) {
    if (!(k > 0.0) || !std::isfinite(k)) throw ConfigError(field, "must be positive");
  }
  if (s.tail_start && !std::isfinite(*s.tail_start)) {
    throw ConfigError("tail_start", "must be finite");
  }
}

Vec ScenarioReference(const Scenario& s, double t) {
  return Reference(s, t).p.AsVector();
}

ScenarioResult RunScenario(const Scenario& s) {
  ValidateScenario(s);
  const DeltaChoice delta = ResolveDelta(s);
  const double dt = s.sim.dt;
  const MuxState mux0 = MuxState::Primed(delta.effective, dt);

  Dynamics dynamics;
  Controller controller;
  switch (s.controller) {
    case ControllerKind::kOpenLoopCommand: {
      const BracketCommand cmd = s.command;
      dynamics = [](const Vec& x, const Vec& u) { return Dubins1Dynamics(x, u); };
      controller = Multiplexed([cmd](double, const Vec&) { return cmd; }, dt);
      break;
    }
    case ControllerKind::kCardinal: {
      const Eigen::Vector3d xdot_d = s.xdot_d;
      dynamics = [](const Vec& x, const Vec& u) { return Dubins1Dynamics(x, u); };
      controller = Multiplexed(
          [xdot_d](double, const Vec& x) {
            return CardinalController(DubinsState1::FromVector(x), xdot_d);
          },
          dt);
      break;
    }
    case ControllerKind::kPose1: {
      dynamics = [](const Vec& x, const Vec& u) { return Dubins1Dynamics(x, u); };
      controller = Multiplexed(
          [s](double t, const Vec& x) {
            const ReferenceSample r = Reference(s, t);
            return PoseController1(DubinsState1::FromVector(x), r.p,
                                   Feedforward(s, r), s.gains);
          },
          dt);
      break;
    }
    case ControllerKind::kPose2: {
      dynamics = [](const Vec& x, const Vec& u) { return Dubins2Dynamics(x, u); };
      controller = [s, dt](double t, const Vec& x, const MuxState& mux) {
        const ReferenceSample r = Reference(s, t);
        const PoseControl2Output out =
            PoseController2(DubinsState2::FromVector(x), r.p, Feedforward(s, r),
                            s.gains, mux, dt);
        return ControlStep{out.u, out.mux, out.mux.held_command};
      };
      break;
    }
  }

  ScenarioResult result;
  result.trajectory = Simulate(dynamics, controller, s.x0, s.sim, mux0);
  const Trajectory& traj = result.trajectory;

  RunSummary& sum = result.summary;
  sum.name = s.name;
  sum.delta = delta;
  sum.final_time = traj.times.back();
  sum.final_state = traj.states.back();
  sum.net_displacement = traj.states.back() - traj.states.front();
  sum.mean_velocity = traj.size() > 1
                          ? MeanVelocity(traj, traj.times.front(), traj.times.back())
                          : Vec::Zero(traj.states.front().size());
  sum.tail_start = s.tail_start.value_or(s.sim.t_end / 4.0);
  if (IsTracking(s)) {
    const auto reference = [&s](double t) { return ScenarioReference(s, t); };
    const auto pos = TrackingError(traj, reference, {{0, 1}, {}});
    const auto heading = TrackingError(traj, reference, {{2}, {2}});
    double max_pos = 0.0, tail_pos = 0.0, tail_heading = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k) {
      max_pos = std::max(max_pos, pos[k]);
      if (traj.times[k] >= sum.tail_start) {
        tail_pos = std::max(tail_pos, pos[k]);
        tail_heading = std::max(tail_heading, heading[k]);
      }
    }
    sum.max_position_error = max_pos;
    sum.tail_max_position_error = tail_pos;
    sum.tail_max_heading_error = tail_heading;
  }
  return result;
}

std::vector<ScenarioResult> RunScenarios(std::span<const Scenario> batch,
                                         Execution exec) {
  std::vector<ScenarioResult> results(batch.size());
  ForEachIndex(batch.size(), exec,
               [&](std::size_t i) { results[i] = RunScenario(batch[i]); });
  return results;
}

std::vector<ScenarioResult> RunScenariosSerial(std::span<const Scenario> batch) {
  return RunScenarios(batch, Execution::kSerial);
}

std::vector<ScenarioResult> RunScenariosParallel(std::span<const Scenario> batch) {
  return RunScenarios(batch, Execution::kParallel);
}

// ---------------------------------------------------------------------------
// Built-in experiments.

namespace {

Scenario FirstOrderBase(std::string name) {
  Scenario s;
  s.name = std::move(name);
  s.model = Model::kDubins1;
  s.x0 = Eigen::Vector3d(0.0, 0.0, 1.0);
  s.sim.dt = 0.01;
  s.sim.t_end = 10.0;
  return s;
}

Scenario OpenLoop(std::string name, BracketCommand cmd) {
  Scenario s = FirstOrderBase(std::move(name));
  s.controller = ControllerKind::kOpenLoopCommand;
  s.command = cmd;
  return s;
}

Scenario Cardinal(std::string name, Eigen::Vector3d xdot_d) {
  Scenario s = FirstOrderBase(std::move(name));
  s.controller = ControllerKind::kCardinal;
  s.xdot_d = xdot_d;
  return s;
}

struct Builtin {
  const char* name;
  const char* description;
  std::vector<Scenario> (*make)();
};

const std::vector<Builtin>& Builtins() {
  static const std::vector<Builtin> kBuiltins = {
      {"cross",
       "first-order car, constant commands (+-0.1,0,0) and (0,0,+-0.1), "
       "x0 = (0,0,1), 10 s",
       [] {
         return std::vector<Scenario>{
             OpenLoop("cross-forward", {0.1, 0.0, 0.0}),
             OpenLoop("cross-lateral", {0.0, 0.0, 0.1}),
             OpenLoop("cross-backward", {-0.1, 0.0, 0.0}),
             OpenLoop("cross-lateral-neg", {0.0, 0.0, -0.1})};
       }},
      {"spin", "first-order car, commands (0,+-0.1,0): turning in place",
       [] {
         return std::vector<Scenario>{OpenLoop("spin-ccw", {0.0, 0.1, 0.0}),
                                      OpenLoop("spin-cw", {0.0, -0.1, 0.0})};
       }},
      {"cardinal",
       "first-order car driven east, west, south and north at unit speed",
       [] {
         return std::vector<Scenario>{
             Cardinal("cardinal-east", {1.0, 0.0, 0.0}),
             Cardinal("cardinal-west", {-1.0, 0.0, 0.0}),
             Cardinal("cardinal-south", {0.0, -1.0, 0.0}),
             Cardinal("cardinal-north", {0.0, 1.0, 0.0})};
       }},
      {"lissajous",
       "second-order car tracking a Lissajous curve while facing east, 400 s",
       [] {
         Scenario s;
         s.name = "lissajous";
         s.model = Model::kDubins2;
         s.controller = ControllerKind::kPose2;
         s.reference = ReferenceKind::kLissajous;
         s.x0 = Vec::Zero(5);
         s.sim.dt = 0.01;
         s.sim.t_end = 400.0;
         s.delta = 0.1;
         s.tail_start = 100.0;
         return std::vector<Scenario>{s};
       }},
      {"pose1",
       "first-order car tracking the same Lissajous curve, 400 s",
       [] {
         Scenario s;
         s.name = "pose1-lissajous";
         s.model = Model::kDubins1;
         s.controller = ControllerKind::kPose1;
         s.reference = ReferenceKind::kLissajous;
         s.x0 = Vec::Zero(3);
         s.sim.dt = 0.01;
         s.sim.t_end = 400.0;
         s.delta = 0.1;
         s.tail_start = 100.0;
         return std::vector<Scenario>{s};
       }},
  };
  return kBuiltins;
}

const Builtin* FindBuiltin(std::string_view name) {
  for (const Builtin& b : Builtins()) {
    if (name == b.name) return &b;
  }
  return nullptr;
}

}  // namespace

std::vector<std::string> BuiltinNames() {
  std::vector<std::string> names;
  for (const Builtin& b : Builtins()) names.emplace_back(b.name);
  return names;
}

std::string BuiltinDescription(std::string_view name) {
  const Builtin* b = FindBuiltin(name);
  return b ? b->description : "";
}

std::vector<Scenario> BuiltinScenarios(std::string_view name) {
  const Builtin* b = FindBuiltin(name);
  return b ? b->make() : std::vector<Scenario>{};
}

// ---------------------------------------------------------------------------
// JSON configuration.

namespace {

template <typename T>
T Get(const json& node, const std::string& path) {
  try {
    return node.get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(path, std::string("wrong type: ") + e.what());
  }
}

Vec GetVector(const json& node, const std::string& path,
              std::optional<Eigen::Index> size = std::nullopt) {
  if (!node.is_array()) throw ConfigError(path, "expected an array of numbers");
  if (size && static_cast<Eigen::Index>(node.size()) != *size) {
    throw ConfigError(path, "expected " + std::to_string(*size) + " numbers");
  }
  Vec v(static_cast<Eigen::Index>(node.size()));
  for (std::size_t i = 0; i < node.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] =
        Get<double>(node[i], path + "[" + std::to_string(i) + "]");
  }
  return v;
}

void CheckKeys(const json& node, const std::string& path,
               std::initializer_list<std::string_view> allowed) {
  if (!node.is_object()) {
    throw ConfigError(path.empty() ? "<root>" : path, "expected an object");
  }
  for (const auto& [key, value] : node.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(path.empty() ? key : path + "." + key, "unknown key");
    }
  }
}

std::string Join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

Scenario ScenarioFromJson(const json& node, const std::string& path) {
  CheckKeys(node, path,
            {"name", "model", "controller", "command", "xdot_d", "reference",
             "x0", "sim", "delta", "gains", "feedforward", "tail_start"});
  Scenario s;
  if (!node.contains("name")) throw ConfigError(Join(path, "name"), "is required");
  s.name = Get<std::string>(node["name"], Join(path, "name"));

  const std::string model =
      node.contains("model") ? Get<std::string>(node["model"], Join(path, "model"))
                             : "dubins1";
  if (model == "dubins1") {
    s.model = Model::kDubins1;
  } else if (model == "dubins2") {
    s.model = Model::kDubins2;
  } else {
    throw ConfigError(Join(path, "model"), "expected dubins1 or dubins2");
  }

  if (!node.contains("controller")) {
    throw ConfigError(Join(path, "controller"), "is required");
  }
  const std::string ctrl =
      Get<std::string>(node["controller"], Join(path, "controller"));
  if (ctrl == "open_loop_command") {
    s.controller = ControllerKind::kOpenLoopCommand;
  } else if (ctrl == "cardinal") {
    s.controller = ControllerKind::kCardinal;
  } else if (ctrl == "pose1") {
    s.controller = ControllerKind::kPose1;
  } else if (ctrl == "pose2") {
    s.controller = ControllerKind::kPose2;
  } else {
    throw ConfigError(Join(path, "controller"),
                      "expected open_loop_command, cardinal, pose1 or pose2");
  }

  if (node.contains("command")) {
    const Vec a = GetVector(node["command"], Join(path, "command"), 3);
    s.command = {a[0], a[1], a[2]};
  }
  if (node.contains("xdot_d")) {
    s.xdot_d = GetVector(node["xdot_d"], Join(path, "xdot_d"), 3);
  }
  if (node.contains("reference")) {
    const std::string rpath = Join(path, "reference");
    const json& ref = node["reference"];
    CheckKeys(ref, rpath, {"type", "pose"});
    const std::string type =
        ref.contains("type") ? Get<std::string>(ref["type"], rpath + ".type")
                             : "lissajous";
    if (type == "lissajous") {
      s.reference = ReferenceKind::kLissajous;
    } else if (type == "fixed_pose") {
      s.reference = ReferenceKind::kFixedPose;
      if (!ref.contains("pose")) throw ConfigError(rpath + ".pose", "is required");
      const Vec p = GetVector(ref["pose"], rpath + ".pose", 3);
      s.fixed_pose = {p[0], p[1], p[2]};
    } else {
      throw ConfigError(rpath + ".type", "expected lissajous or fixed_pose");
    }
  }

  if (!node.contains("x0")) throw ConfigError(Join(path, "x0"), "is required");
  s.x0 = GetVector(node["x0"], Join(path, "x0"));

  if (node.contains("sim")) {
    const std::string spath = Join(path, "sim");
    const json& sim = node["sim"];
    CheckKeys(sim, spath, {"dt", "t_end", "method", "record_stride"});
    if (sim.contains("dt")) s.sim.dt = Get<double>(sim["dt"], spath + ".dt");
    if (sim.contains("t_end")) {
      s.sim.t_end = Get<double>(sim["t_end"], spath + ".t_end");
    }
    if (sim.contains("method")) {
      const std::string m = Get<std::string>(sim["method"], spath + ".method");
      try {
        s.sim.method = ParseMethod(m);
      } catch (const ContractError& e) {
        throw ConfigError(spath + ".method", e.what());
      }
    }
    if (sim.contains("record_stride")) {
      s.sim.record_stride =
          Get<int>(sim["record_stride"], spath + ".record_stride");
    }
  }
  if (node.contains("delta")) s.delta = Get<double>(node["delta"], Join(path, "delta"));
  if (node.contains("gains")) {
    const std::string gpath = Join(path, "gains");
    const json& g = node["gains"];
    CheckKeys(g, gpath, {"k_vel", "k_pose1", "k_pose2"});
    if (g.contains("k_vel")) s.gains.k_vel = Get<double>(g["k_vel"], gpath + ".k_vel");
    if (g.contains("k_pose1")) {
      s.gains.k_pose1 = Get<double>(g["k_pose1"], gpath + ".k_pose1");
    }
    if (g.contains("k_pose2")) {
      s.gains.k_pose2 = Get<double>(g["k_pose2"], gpath + ".k_pose2");
    }
  }
  if (node.contains("feedforward")) {
    s.feedforward = Get<bool>(node["feedforward"], Join(path, "feedforward"));
  }
  if (node.contains("tail_start")) {
    s.tail_start = Get<double>(node["tail_start"], Join(path, "tail_start"));
  }

  try {
    ValidateScenario(s);
  } catch (const ConfigError& e) {
    // Re-anchor the field path inside the document.
    throw ConfigError(Join(path, e.field()),
                      std::string(e.what()).substr(e.field().size() + 2));
  }
  return s;
}

}  // namespace

std::vector<Scenario> ParseScenarios(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", e.what());
  }
  std::vector<Scenario> out;
  if (doc.is_object() && doc.contains("scenarios")) {
    CheckKeys(doc, "", {"scenarios"});
    const json& list = doc["scenarios"];
    if (!list.is_array() || list.empty()) {
      throw ConfigError("scenarios", "expected a non-empty array");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      out.push_back(
          ScenarioFromJson(list[i], "scenarios[" + std::to_string(i) + "]"));
    }
  } else {
    out.push_back(ScenarioFromJson(doc, ""));
  }
  return out;
}

std::vector<Scenario> LoadScenarioFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open scenario file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseScenarios(buf.str());
}

std::string SummaryJson(const RunSummary& summary) {
  const auto to_array = [](const Vec& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
  };
  json j;
  j["name"] = summary.name;
  j["delta_requested"] = summary.delta.requested;
  j["delta_effective"] = summary.delta.effective;
  j["delta_rounded"] = summary.delta.rounded;
  j["steps_per_leg"] = summary.delta.steps_per_leg;
  j["final_time"] = summary.final_time;
  j["final_state"] = to_array(summary.final_state);
  j["net_displacement"] = to_array(summary.net_displacement);
  j["net_position_displacement_norm"] =
      summary.net_displacement.head(2).norm();
  j["mean_velocity"] = to_array(summary.mean_velocity);
  if (summary.max_position_error) {
    j["tail_start"] = summary.tail_start;
    j["max_position_error"] = *summary.max_position_error;
    j["tail_max_position_error"] = *summary.tail_max_position_error;
    j["tail_max_heading_error"] = *summary.tail_max_heading_error;
  }
  return j.dump(2) + "\n";
}

}  // namespace liebracket
