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

// Serial and OpenMP execution of independent work items.
//
// Every parallel entry point has a serial twin computing the same thing in
// the same per-item order, so the two must agree bit for bit. Tests compare
// them; bench/ times them.

#ifndef LIEBRACKET_BATCH_H_
#define LIEBRACKET_BATCH_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "liebracket/vector_field.h"

namespace liebracket {

enum class Execution { kSerial, kParallel };

// Calls body(i) for i in [0, n). With kParallel the calls are distributed
// over OpenMP threads; the first exception thrown by any call is rethrown
// after the loop finishes.
void ForEachIndex(std::size_t n, Execution exec,
                  const std::function<void(std::size_t)>& body);

std::vector<Vec> BracketOnPointsSerial(const VectorField& f,
                                       const VectorField& g,
                                       std::span<const Vec> points,
                                       double step = kDefaultFdStep);

std::vector<Vec> BracketOnPointsParallel(const VectorField& f,
                                         const VectorField& g,
                                         std::span<const Vec> points,
                                         double step = kDefaultFdStep);

// Maximum over the points of |[f,g](x) + [g,f](x)|.
double MaxAntisymmetryResidual(const VectorField& f, const VectorField& g,
                               std::span<const Vec> points, Execution exec,
                               double step = kDefaultFdStep);

int MaxThreads();

}  // namespace liebracket

#endif  // LIEBRACKET_BATCH_H_
