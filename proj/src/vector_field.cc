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

#include "liebracket/vector_field.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include <Eigen/SVD>

#include "liebracket/errors.h"

namespace liebracket {

namespace {

void CheckDim(const VectorField& field, const Vec& x) {
  if (x.size() != field.dim()) {
    std::ostringstream os;
    os << "field '" << field.label() << "' has dim " << field.dim()
       << " but was given a point of length " << x.size();
    throw ContractError(os.str());
  }
}

void CheckStep(double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw ContractError("finite-difference step must be positive");
  }
}

}  // namespace

VectorField::VectorField(int dim, EvalFn eval, JacobianFn jacobian,
                         std::string label)
    : dim_(dim),
      impl_(std::make_shared<const Impl>(
          Impl{std::move(eval), std::move(jacobian)})),
      label_(std::move(label)) {
  if (dim <= 0) throw ContractError("vector field dimension must be positive");
  if (!impl_->eval) throw ContractError("vector field needs an evaluator");
}

VectorField VectorField::Zero(int dim) {
  return VectorField(
      dim, [dim](const Vec&) { return Vec::Zero(dim); },
      [dim](const Vec&) { return Mat::Zero(dim, dim); }, "0");
}

VectorField VectorField::Constant(const Vec& value, std::string label) {
  const int n = static_cast<int>(value.size());
  return VectorField(
      n, [value](const Vec&) { return value; },
      [n](const Vec&) { return Mat::Zero(n, n); }, std::move(label));
}

VectorField VectorField::Linear(const Mat& a, std::string label) {
  if (a.rows() != a.cols()) throw ContractError("linear field needs a square matrix");
  return VectorField(
      static_cast<int>(a.rows()), [a](const Vec& x) -> Vec { return a * x; },
      [a](const Vec&) { return a; }, std::move(label));
}

Vec VectorField::operator()(const Vec& x) const {
  CheckDim(*this, x);
  Vec v = impl_->eval(x);
  if (v.size() != dim_) {
    throw ContractError("field '" + label_ + "' returned a vector of wrong length");
  }
  if (!v.allFinite()) {
    throw EvaluationError("field '" + label_ + "' evaluated to a non-finite value", x);
  }
  return v;
}

Mat VectorField::AnalyticJacobian(const Vec& x) const {
  if (!has_jacobian()) {
    throw ContractError("field '" + label_ + "' has no analytic Jacobian");
  }
  CheckDim(*this, x);
  Mat j = impl_->jacobian(x);
  if (j.rows() != dim_ || j.cols() != dim_) {
    throw ContractError("field '" + label_ + "' returned a Jacobian of wrong shape");
  }
  if (!j.allFinite()) {
    throw EvaluationError("Jacobian of '" + label_ + "' is not finite", x);
  }
  return j;
}

VectorField VectorField::Scaled(double s) const {
  auto impl = impl_;
  JacobianFn jac;
  if (has_jacobian()) {
    jac = [impl, s](const Vec& x) -> Mat { return s * impl->jacobian(x); };
  }
  std::ostringstream label;
  label << s << "*" << label_;
  return VectorField(
      dim_, [impl, s](const Vec& x) -> Vec { return s * impl->eval(x); },
      std::move(jac), label.str());
}

JacobianEstimate JacobianAt(const VectorField& field, const Vec& x,
                            double step) {
  CheckDim(field, x);
  CheckStep(step);
  if (field.has_jacobian()) {
    return {field.AnalyticJacobian(x), step, JacobianScheme::kAnalytic};
  }
  const int n = field.dim();
  Mat jac(n, n);
  Vec probe = x;
  for (int j = 0; j < n; ++j) {
    probe[j] = x[j] + step;
    const Vec plus = field(probe);
    probe[j] = x[j] - step;
    const Vec minus = field(probe);
    probe[j] = x[j];
    jac.col(j) = (plus - minus) / (2.0 * step);
  }
  if (!jac.allFinite()) {
    throw EvaluationError("finite-difference Jacobian is not finite", x);
  }
  return {std::move(jac), step, JacobianScheme::kCentral};
}

Vec LieBracket(const VectorField& f, const VectorField& g, const Vec& x,
               double step) {
  if (f.dim() != g.dim()) {
    throw ContractError("bracket of fields with different dimensions");
  }
  const Mat jf = JacobianAt(f, x, step).matrix;
  const Mat jg = JacobianAt(g, x, step).matrix;
  Vec out = jg * f(x) - jf * g(x);
  if (!out.allFinite()) {
    throw EvaluationError("Lie bracket is not finite", x);
  }
  return out;
}

VectorField BracketField(const VectorField& f, const VectorField& g,
                         double step) {
  if (f.dim() != g.dim()) {
    throw ContractError("bracket of fields with different dimensions");
  }
  CheckStep(step);
  return VectorField(
      f.dim(), [f, g, step](const Vec& x) { return LieBracket(f, g, x, step); },
      nullptr, "[" + f.label() + "," + g.label() + "]");
}

Vec JacobiResidual(const VectorField& f, const VectorField& g,
                   const VectorField& h, const Vec& x, double nested_step) {
  if (f.dim() != g.dim() || g.dim() != h.dim()) {
    throw ContractError("Jacobi residual needs fields of equal dimension");
  }
  CheckStep(nested_step);
  const VectorField gh = BracketField(g, h);
  const VectorField fg = BracketField(f, g);
  const VectorField hf = BracketField(h, f);
  return LieBracket(f, gh, x, nested_step) + LieBracket(h, fg, x, nested_step) +
         LieBracket(g, hf, x, nested_step);
}

int LieSpanRank(std::span<const VectorField> fields, const Vec& x, int depth,
                double step, double tol) {
  if (fields.empty()) throw ContractError("span rank needs at least one field");
  if (depth < 1) throw ContractError("bracket depth must be at least 1");
  if (!(tol > 0.0)) throw ContractError("rank tolerance must be positive");
  const int n = fields.front().dim();
  for (const auto& field : fields) {
    if (field.dim() != n) throw ContractError("span rank fields differ in dimension");
  }
  CheckStep(step);

  std::vector<VectorField> all(fields.begin(), fields.end());
  std::vector<VectorField> level;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    for (std::size_t j = i + 1; j < fields.size(); ++j) {
      level.push_back(BracketField(fields[i], fields[j], step));
    }
  }
  all.insert(all.end(), level.begin(), level.end());
  const double nested = std::max(step, kNestedFdStep);
  for (int d = 2; d <= depth && !level.empty(); ++d) {
    std::vector<VectorField> next;
    for (const auto& base : fields) {
      for (const auto& prev : level) {
        next.push_back(BracketField(base, prev, nested));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }

  Mat stacked(n, static_cast<Eigen::Index>(all.size()));
  for (std::size_t k = 0; k < all.size(); ++k) {
    stacked.col(static_cast<Eigen::Index>(k)) = all[k](x);
  }
  const Eigen::JacobiSVD<Mat> svd(stacked);
  const Vec& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma[0] == 0.0) return 0;
  const double cutoff = tol * sigma[0];
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma[i] > cutoff) ++rank;
  }
  return rank;
}

}  // namespace liebracket
