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

#include "liebracket/batch.h"

#include <algorithm>
#include <exception>
#include <mutex>

#include <omp.h>

namespace liebracket {

void ForEachIndex(std::size_t n, Execution exec,
                  const std::function<void(std::size_t)>& body) {
  if (exec == Execution::kSerial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<Vec> BracketOnPointsSerial(const VectorField& f,
                                       const VectorField& g,
                                       std::span<const Vec> points,
                                       double step) {
  std::vector<Vec> out;
  out.reserve(points.size());
  for (const Vec& x : points) out.push_back(LieBracket(f, g, x, step));
  return out;
}

std::vector<Vec> BracketOnPointsParallel(const VectorField& f,
                                         const VectorField& g,
                                         std::span<const Vec> points,
                                         double step) {
  std::vector<Vec> out(points.size());
  ForEachIndex(points.size(), Execution::kParallel, [&](std::size_t i) {
    out[i] = LieBracket(f, g, points[i], step);
  });
  return out;
}

double MaxAntisymmetryResidual(const VectorField& f, const VectorField& g,
                               std::span<const Vec> points, Execution exec,
                               double step) {
  std::vector<double> residual(points.size(), 0.0);
  ForEachIndex(points.size(), exec, [&](std::size_t i) {
    residual[i] = (LieBracket(f, g, points[i], step) +
                   LieBracket(g, f, points[i], step))
                      .norm();
  });
  return residual.empty() ? 0.0
                          : *std::max_element(residual.begin(), residual.end());
}

int MaxThreads() { return omp_get_max_threads(); }

}  // namespace liebracket
