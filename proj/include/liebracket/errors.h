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

#ifndef LIEBRACKET_ERRORS_H_
#define LIEBRACKET_ERRORS_H_

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace liebracket {

// Violated precondition: bad dimensions, non-positive steps, etc.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A vector field produced a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, Eigen::VectorXd x)
      : std::runtime_error(what), x_(std::move(x)) {}
  const Eigen::VectorXd& x() const { return x_; }

 private:
  Eigen::VectorXd x_;
};

// The integrated state left the finite reals.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, double time,
                  Eigen::VectorXd last_finite_state)
      : std::runtime_error(what),
        time_(time),
        last_finite_state_(std::move(last_finite_state)) {}
  double time() const { return time_; }
  const Eigen::VectorXd& last_finite_state() const {
    return last_finite_state_;
  }

 private:
  double time_;
  Eigen::VectorXd last_finite_state_;
};

// Scenario configuration is invalid. `field()` is a dotted path such as
// "sim.dt".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  IoError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace liebracket

#endif  // LIEBRACKET_ERRORS_H_
