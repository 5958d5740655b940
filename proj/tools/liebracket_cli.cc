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

// Command-line front end.
//
//   liebracket list-builtins
//   liebracket run <scenario-file|builtin> [--out-dir DIR] [--dt DT]
//       [--t-end T] [--delta D] [--method euler|rk4] [--no-feedforward] [--svg]
//   liebracket verify --deltas 0.2 0.1 0.05 0.025 [--model dubins1|linear]
//       [--x0 ...] [--substeps N]
//
// Exit codes: 0 success, 1 verification failed, 2 configuration error,
// 3 divergence, 4 I/O error.

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "liebracket/batch.h"
#include "liebracket/convergence.h"
#include "liebracket/dubins.h"
#include "liebracket/errors.h"
#include "liebracket/scenario.h"
#include "liebracket/trajectory_io.h"

namespace {

using namespace liebracket;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDivergence = 3;
constexpr int kExitIo = 4;

struct RunOptions {
  std::string target;
  std::string out_dir = ".";
  std::optional<double> dt;
  std::optional<double> t_end;
  std::optional<double> delta;
  std::optional<std::string> method;
  bool no_feedforward = false;
  bool svg = false;
  bool serial = false;
};

struct VerifyOptions {
  std::vector<double> deltas = {0.2, 0.1, 0.05, 0.025};
  std::string model = "dubins1";
  std::vector<double> x0;
  int substeps = 100;
};

std::vector<Scenario> ResolveTarget(const RunOptions& opt) {
  std::vector<Scenario> scenarios = BuiltinScenarios(opt.target);
  if (scenarios.empty()) {
    if (!std::filesystem::exists(opt.target)) {
      throw ConfigError("run", "'" + opt.target +
                                   "' is neither a builtin nor an existing file");
    }
    scenarios = LoadScenarioFile(opt.target);
  }
  for (Scenario& s : scenarios) {
    if (opt.dt) s.sim.dt = *opt.dt;
    if (opt.t_end) s.sim.t_end = *opt.t_end;
    if (opt.delta) {
      s.delta = *opt.delta;
    } else if (opt.dt) {
      s.delta.reset();  // back to sqrt(dt)
    }
    if (opt.method) {
      try {
        s.sim.method = ParseMethod(*opt.method);
      } catch (const ContractError& e) {
        throw ConfigError("--method", e.what());
      }
    }
    if (opt.no_feedforward) s.feedforward = false;
    ValidateScenario(s);
  }
  return scenarios;
}

int Run(const RunOptions& opt) {
  const std::vector<Scenario> scenarios = ResolveTarget(opt);
  const std::filesystem::path out_dir(opt.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError(out_dir.string(), ec.message());

  const auto results = RunScenarios(
      scenarios, opt.serial ? Execution::kSerial : Execution::kParallel);
  for (const ScenarioResult& r : results) {
    const RunSummary& s = r.summary;
    WriteCsv(r.trajectory, out_dir / (s.name + ".csv"));
    const auto summary_path = out_dir / (s.name + "_summary.json");
    std::FILE* f = std::fopen(summary_path.string().c_str(), "wb");
    if (f == nullptr) throw IoError(summary_path.string(), "cannot open for writing");
    const std::string text = SummaryJson(s);
    const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
    if (std::fclose(f) != 0 || !ok) throw IoError(summary_path.string(), "write failed");
    if (opt.svg) WriteSvg(r.trajectory, out_dir / (s.name + ".svg"));

    std::cout << s.name << ": t = " << s.final_time << ", final state = ("
              << s.final_state.transpose() << "), |dp| = "
              << s.net_displacement.head(2).norm();
    if (s.delta.rounded) {
      std::cout << ", delta " << s.delta.requested << " -> " << s.delta.effective;
    }
    if (s.tail_max_position_error) {
      std::cout << ", tail error " << *s.tail_max_position_error << " m / "
                << *s.tail_max_heading_error << " rad";
    }
    std::cout << "\n";
  }
  return 0;
}

int Verify(const VerifyOptions& opt) {
  std::optional<VectorField> f, g;
  Vec x0;
  if (opt.model == "dubins1") {
    DubinsFields fields = Dubins1Fields();
    f = fields.f;
    g = fields.g;
    x0 = Eigen::Vector3d::Zero();
  } else if (opt.model == "linear") {
    Mat a(2, 2), b(2, 2);
    a << 0, 1, 0, 0;
    b << 0, 0, 1, 0;
    f = VectorField::Linear(a, "Ax");
    g = VectorField::Linear(b, "Bx");
    x0 = Eigen::Vector2d(1.0, 1.0);
  } else {
    throw ConfigError("--model", "expected dubins1 or linear");
  }
  if (!opt.x0.empty()) {
    if (static_cast<int>(opt.x0.size()) != f->dim()) {
      throw ConfigError("--x0", "expected " + std::to_string(f->dim()) + " values");
    }
    x0 = Eigen::Map<const Vec>(opt.x0.data(), f->dim());
  }
  ConvergenceReport report;
  try {
    report = VerifyConvergence(*f, *g, x0, opt.deltas, opt.substeps,
                               Execution::kParallel);
  } catch (const ContractError& e) {
    throw ConfigError("--deltas", e.what());
  }

  std::cout << std::setw(12) << "delta" << std::setw(24) << "|dx-[f,g]d^2|/d^2"
            << std::setw(12) << "slope" << "\n";
  for (const ConvergenceRow& row : report.rows) {
    std::cout << std::setw(12) << row.delta << std::setw(24)
              << row.normalized_error << std::setw(12);
    if (row.slope) {
      std::cout << *row.slope;
    } else {
      std::cout << "-";
    }
    std::cout << "\n";
  }
  std::cout << "fitted slope " << report.fitted_slope << ", strictly decreasing: "
            << (report.strictly_decreasing ? "yes" : "no") << "\n";
  std::cout << (report.Passed() ? "PASS" : "FAIL") << "\n";
  return report.Passed() ? 0 : kExitVerifyFailed;
}

int ListBuiltins() {
  for (const std::string& name : BuiltinNames()) {
    std::cout << name << "\t" << BuiltinDescription(name) << "\n";
    for (const Scenario& s : BuiltinScenarios(name)) {
      std::cout << "    " << s.name << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie-bracket multiplexed control of Dubins cars"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "run a scenario file or builtin");
  run->add_option("target", run_opt.target, "scenario JSON file or builtin name")
      ->required();
  run->add_option("--out-dir", run_opt.out_dir, "output directory");
  run->add_option("--dt", run_opt.dt, "integrator step [s]");
  run->add_option("--t-end", run_opt.t_end, "simulated duration [s]");
  run->add_option("--delta", run_opt.delta, "cycle leg duration [s]");
  run->add_option("--method", run_opt.method, "euler or rk4");
  run->add_flag("--no-feedforward", run_opt.no_feedforward,
                "drop the reference derivative from the pose loops");
  run->add_flag("--svg", run_opt.svg, "also write an SVG of the path");
  run->add_flag("--serial", run_opt.serial, "run batch members one at a time");

  VerifyOptions verify_opt;
  CLI::App* verify =
      app.add_subcommand("verify", "check the per-cycle bracket displacement law");
  verify->add_option("--deltas", verify_opt.deltas, "strictly decreasing leg durations")
      ->expected(2, -1);
  verify->add_option("--model", verify_opt.model, "dubins1 or linear");
  verify->add_option("--x0", verify_opt.x0, "initial state");
  verify->add_option("--substeps", verify_opt.substeps, "integrator steps per leg")
      ->check(CLI::PositiveNumber);

  app.add_subcommand("list-builtins", "list builtin scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (run->parsed()) return Run(run_opt);
    if (verify->parsed()) return Verify(verify_opt);
    return ListBuiltins();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ContractError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DivergenceError& e) {
    std::cerr << "divergence: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const EvaluationError& e) {
    std::cerr << "divergence: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  }
}
