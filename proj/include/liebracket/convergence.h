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

// Numerical check of the commutator displacement law: one cycle of
// {(1,0),(0,1),(-1,0),(0,-1)} with legs of length delta moves a driftless
// system by [f,g](x0) * delta^2 + o(delta^2).

#ifndef LIEBRACKET_CONVERGENCE_H_
#define LIEBRACKET_CONVERGENCE_H_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "liebracket/batch.h"
#include "liebracket/multiplexer.h"
#include "liebracket/simulator.h"
#include "liebracket/vector_field.h"

namespace liebracket {

// x' = f(x) u1 + g(x) u2.
Dynamics DriftlessDynamics(const VectorField& f, const VectorField& g);

// Net displacement x(4 delta) - x(0) over one cycle whose leg inputs come
// from `legs`, integrated with `substeps_per_leg` steps per leg.
Vec CycleDisplacement(const VectorField& f, const VectorField& g,
                      const Vec& x0, double delta, int substeps_per_leg,
                      const std::function<InputPair(int leg)>& legs,
                      Method method = Method::kRk4);

Vec UnitCycleDisplacement(const VectorField& f, const VectorField& g,
                          const Vec& x0, double delta, int substeps_per_leg,
                          Method method = Method::kRk4);

struct ConvergenceRow {
  double delta = 0.0;
  Vec displacement;
  Vec predicted;  // [f,g](x0) * delta^2
  double normalized_error = 0.0;
  // log-log slope against the previous row.
  std::optional<double> slope;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  double fitted_slope = 0.0;  // least squares over all rows
  bool strictly_decreasing = false;

  bool Passed(double min_slope = 0.9) const {
    return strictly_decreasing && fitted_slope >= min_slope;
  }
};

// `deltas` must be strictly decreasing and positive. Each delta is integrated
// with dt = delta / substeps_per_leg.
ConvergenceReport VerifyConvergence(const VectorField& f, const VectorField& g,
                                    const Vec& x0, std::span<const double> deltas,
                                    int substeps_per_leg = 100,
                                    Execution exec = Execution::kSerial);

// Least-squares slope of log(y) against log(x).
double LogLogSlope(std::span<const double> x, std::span<const double> y);

}  // namespace liebracket

#endif  // LIEBRACKET_CONVERGENCE_H_
