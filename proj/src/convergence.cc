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

#include "liebracket/convergence.h"

#include <cmath>

#include "liebracket/errors.h"

namespace liebracket {

Dynamics DriftlessDynamics(const VectorField& f, const VectorField& g) {
  if (f.dim() != g.dim()) {
    throw ContractError("driftless system fields differ in dimension");
  }
  return [f, g](const Vec& x, const Vec& u) -> Vec {
    return f(x) * u[0] + g(x) * u[1];
  };
}

Vec CycleDisplacement(const VectorField& f, const VectorField& g,
                      const Vec& x0, double delta, int substeps_per_leg,
                      const std::function<InputPair(int leg)>& legs,
                      Method method) {
  if (!(delta > 0.0)) throw ContractError("delta must be positive");
  if (substeps_per_leg < 1) throw ContractError("substeps_per_leg must be positive");
  const double dt = delta / substeps_per_leg;
  SimConfig config;
  config.dt = dt;
  config.t_end = 4.0 * delta;
  config.method = method;
  const long per_leg = substeps_per_leg;
  const Controller controller = [&](double t, const Vec&, const MuxState& mux) {
    const long step = std::lround(t / dt);
    const InputPair in = legs(static_cast<int>((step / per_leg) % 4));
    return ControlStep{Eigen::Vector2d(in.u1, in.u2), mux, std::nullopt};
  };
  const Trajectory traj =
      Simulate(DriftlessDynamics(f, g), controller, x0, config);
  return traj.states.back() - traj.states.front();
}

Vec UnitCycleDisplacement(const VectorField& f, const VectorField& g,
                          const Vec& x0, double delta, int substeps_per_leg,
                          Method method) {
  return CycleDisplacement(f, g, x0, delta, substeps_per_leg, UnitCycleInput,
                           method);
}

double LogLogSlope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ContractError("log-log fit needs at least two paired points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConvergenceReport VerifyConvergence(const VectorField& f, const VectorField& g,
                                    const Vec& x0, std::span<const double> deltas,
                                    int substeps_per_leg, Execution exec) {
  if (deltas.size() < 2) throw ContractError("need at least two deltas");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0.0)) throw ContractError("deltas must be positive");
    if (i > 0 && !(deltas[i] < deltas[i - 1])) {
      throw ContractError("deltas must be strictly decreasing");
    }
  }
  const Vec bracket = LieBracket(f, g, x0);

  ConvergenceReport report;
  report.rows.resize(deltas.size());
  ForEachIndex(deltas.size(), exec, [&](std::size_t i) {
    ConvergenceRow& row = report.rows[i];
    row.delta = deltas[i];
    row.displacement =
        UnitCycleDisplacement(f, g, x0, row.delta, substeps_per_leg);
    row.predicted = bracket * row.delta * row.delta;
    row.normalized_error =
        (row.displacement - row.predicted).norm() / (row.delta * row.delta);
  });

  std::vector<double> ds, errs;
  report.strictly_decreasing = true;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    ConvergenceRow& row = report.rows[i];
    ds.push_back(row.delta);
    errs.push_back(row.normalized_error);
    if (i == 0) continue;
    const ConvergenceRow& prev = report.rows[i - 1];
    if (!(row.normalized_error < prev.normalized_error)) {
      report.strictly_decreasing = false;
    }
    if (row.normalized_error > 0.0 && prev.normalized_error > 0.0) {
      row.slope = std::log(prev.normalized_error / row.normalized_error) /
                  std::log(prev.delta / row.delta);
    }
  }
  bool all_positive = true;
  for (const double e : errs) all_positive = all_positive && e > 0.0;
  report.fitted_slope = all_positive ? LogLogSlope(ds, errs) : 0.0;
  return report;
}

}  // namespace liebracket
