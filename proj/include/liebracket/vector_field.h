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

// Vector fields on R^n and the Lie bracket algebra built on top of them.
//
// A VectorField is an immutable handle around an evaluator x -> f(x) and an
// optional analytic Jacobian. Brackets use the analytic Jacobian when one is
// attached and central finite differences otherwise, so brackets of brackets
// (derived fields) compose without symbolic differentiation.

#ifndef LIEBRACKET_VECTOR_FIELD_H_
#define LIEBRACKET_VECTOR_FIELD_H_

#include <functional>
#include <memory>
#include <span>
#include <string>

#include <Eigen/Core>

namespace liebracket {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Default central-difference step for fields on unit-scale states.
inline constexpr double kDefaultFdStep = 1e-5;
// Step used when differentiating fields that are themselves brackets.
inline constexpr double kNestedFdStep = 1e-4;
// Relative singular-value cutoff for lie_span_rank.
inline constexpr double kDefaultRankTol = 1e-6;

class VectorField {
 public:
  using EvalFn = std::function<Vec(const Vec&)>;
  using JacobianFn = std::function<Mat(const Vec&)>;

  // `eval` and `jacobian` must be pure.
  VectorField(int dim, EvalFn eval, JacobianFn jacobian = nullptr,
              std::string label = "");

  static VectorField Zero(int dim);
  static VectorField Constant(const Vec& value, std::string label = "");
  // f(x) = a * x, with exact Jacobian a.
  static VectorField Linear(const Mat& a, std::string label = "");

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  bool has_jacobian() const { return static_cast<bool>(impl_->jacobian); }

  // Throws ContractError on a length mismatch and EvaluationError when the
  // result is not finite.
  Vec operator()(const Vec& x) const;

  // Requires has_jacobian().
  Mat AnalyticJacobian(const Vec& x) const;

  // The field s * f; keeps the analytic Jacobian when present.
  VectorField Scaled(double s) const;

 private:
  struct Impl {
    EvalFn eval;
    JacobianFn jacobian;
  };

  int dim_;
  std::shared_ptr<const Impl> impl_;
  std::string label_;
};

enum class JacobianScheme { kAnalytic, kCentral };

struct JacobianEstimate {
  Mat matrix;
  double step = 0.0;
  JacobianScheme scheme = JacobianScheme::kCentral;
};

// Analytic Jacobian when the field carries one; otherwise column j is
// (f(x + h e_j) - f(x - h e_j)) / 2h.
JacobianEstimate JacobianAt(const VectorField& field, const Vec& x,
                            double step = kDefaultFdStep);

// [f, g](x) = Dg(x) f(x) - Df(x) g(x).
Vec LieBracket(const VectorField& f, const VectorField& g, const Vec& x,
               double step = kDefaultFdStep);

// The bracket [f, g] as a field in its own right (no analytic Jacobian).
// `step` is used for the inner Jacobians of f and g.
VectorField BracketField(const VectorField& f, const VectorField& g,
                         double step = kDefaultFdStep);

// [f,[g,h]] + [h,[f,g]] + [g,[h,f]] at x. Inner brackets use kDefaultFdStep
// (or analytic Jacobians); the outer derivative of each inner bracket uses
// `nested_step`. Vanishes up to discretization error for smooth fields.
Vec JacobiResidual(const VectorField& f, const VectorField& g,
                   const VectorField& h, const Vec& x,
                   double nested_step = kNestedFdStep);

// Numerical rank of {fields} together with all iterated brackets up to
// `depth` levels, evaluated at x. Singular values below tol * sigma_max count
// as zero.
int LieSpanRank(std::span<const VectorField> fields, const Vec& x, int depth,
                double step = kDefaultFdStep, double tol = kDefaultRankTol);

}  // namespace liebracket

#endif  // LIEBRACKET_VECTOR_FIELD_H_
