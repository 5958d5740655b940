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

// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "liebracket/convergence.h"
#include "liebracket/dubins.h"
#include "liebracket/scenario.h"
#include "liebracket/simulator.h"
#include "liebracket/trajectory_io.h"
#include "liebracket/vector_field.h"

namespace lb = liebracket;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

double AngleBetween(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  const double c = a.dot(b) / (a.norm() * b.norm());
  return std::acos(std::clamp(c, -1.0, 1.0)) * 180.0 / M_PI;
}

std::string Fmt(const char* fmt, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c);
  return buf;
}

void Fail(Outcome& o, const std::string& msg) {
  o.ok = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += msg;
}

// h(x) = (x2 x3, sin x1, x1^2) with its Jacobian.
lb::VectorField Curvy() {
  return lb::VectorField(
      3,
      [](const lb::Vec& x) {
        return lb::Vec(Eigen::Vector3d(x[1] * x[2], std::sin(x[0]), x[0] * x[0]));
      },
      [](const lb::Vec& x) {
        lb::Mat j(3, 3);
        j << 0, x[2], x[1], std::cos(x[0]), 0, 0, 2 * x[0], 0, 0;
        return j;
      },
      "h");
}

lb::VectorField Combine(double a, const lb::VectorField& f, double b,
                        const lb::VectorField& g) {
  return lb::VectorField(
      f.dim(), [=](const lb::Vec& x) { return lb::Vec(a * f(x) + b * g(x)); },
      [=](const lb::Vec& x) {
        return lb::Mat(a * f.AnalyticJacobian(x) + b * g.AnalyticJacobian(x));
      });
}

Outcome Criterion1() {
  Outcome o;
  const lb::DubinsFields d = lb::Dubins1Fields();
  const lb::VectorField h = Curvy();
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double anti = 0, bilin = 0, lin = 0, jac = 0;
  for (int i = 0; i < 100; ++i) {
    const lb::Vec x = Eigen::Vector3d(u(rng), u(rng), u(rng));
    const double a = u(rng), b = u(rng);
    anti = std::max(anti, (lb::LieBracket(d.f, h, x) + lb::LieBracket(h, d.f, x)).norm());
    const lb::Vec lhs = lb::LieBracket(Combine(a, d.f, b, h), d.g, x);
    const lb::Vec rhs = a * lb::LieBracket(d.f, d.g, x) + b * lb::LieBracket(h, d.g, x);
    bilin = std::max(bilin, (lhs - rhs).norm());

    lb::Mat ma = lb::Mat::NullaryExpr(3, 3, [&] { return u(rng); });
    lb::Mat mb = lb::Mat::NullaryExpr(3, 3, [&] { return u(rng); });
    const lb::Vec expect = (mb * ma - ma * mb) * x;
    const lb::Vec got =
        lb::LieBracket(lb::VectorField::Linear(ma), lb::VectorField::Linear(mb), x);
    lin = std::max(lin, (got - expect).norm() / std::max(1.0, expect.norm()));

    jac = std::max(jac, lb::JacobiResidual(d.f, d.g, h, x, 1e-4).norm());
  }
  if (anti >= 1e-9) Fail(o, Fmt("antisymmetry %.3g", anti));
  if (bilin >= 1e-9) Fail(o, Fmt("bilinearity %.3g", bilin));
  if (lin >= 1e-12) Fail(o, Fmt("linear %.3g", lin));
  if (jac >= 1e-4) Fail(o, Fmt("jacobi %.3g", jac));
  if (o.ok) {
    o.detail = Fmt("anti %.2g bilin %.2g linear %.2g", anti, bilin, lin) +
               Fmt(" jacobi %.2g", jac);
  }
  return o;
}

Outcome Criterion2() {
  Outcome o;
  const lb::DubinsFields d = lb::Dubins1Fields();
  const lb::VectorField f_fd(3, [f = d.f](const lb::Vec& x) { return f(x); });
  const lb::VectorField g_fd(3, [g = d.g](const lb::Vec& x) { return g(x); });
  double analytic = 0, fd = 0;
  for (int i = 0; i < 100; ++i) {
    const double x3 = -M_PI + 2 * M_PI * i / 99.0;
    const lb::Vec x = Eigen::Vector3d(0.3, -1.2, x3);
    const lb::Vec expect = Eigen::Vector3d(std::sin(x3), -std::cos(x3), 0);
    analytic = std::max(analytic, (lb::LieBracket(d.f, d.g, x) - expect).norm());
    fd = std::max(fd, (lb::LieBracket(f_fd, g_fd, x, 1e-5) - expect).norm());
  }
  if (analytic >= 1e-9) Fail(o, Fmt("analytic %.3g", analytic));
  if (fd >= 1e-6) Fail(o, Fmt("fd %.3g", fd));
  if (o.ok) o.detail = Fmt("analytic %.2g fd %.2g", analytic, fd);
  return o;
}

Outcome Criterion3() {
  Outcome o;
  const lb::DubinsFields d = lb::Dubins1Fields();
  const std::vector<double> deltas{0.2, 0.1, 0.05, 0.025};
  const lb::ConvergenceReport r =
      lb::VerifyConvergence(d.f, d.g, lb::Vec::Zero(3), deltas, 100);
  if (!r.strictly_decreasing) Fail(o, "normalized error not strictly decreasing");
  if (r.fitted_slope < 0.9) Fail(o, Fmt("slope %.3f", r.fitted_slope));
  if (o.ok) {
    o.detail = Fmt("slope %.3f err(0.2) %.3g err(0.025) %.3g", r.fitted_slope,
                   r.rows.front().normalized_error, r.rows.back().normalized_error);
  }
  return o;
}

Outcome Criterion4() {
  Outcome o;
  const Eigen::Vector2d forward(std::cos(1.0), std::sin(1.0));
  const Eigen::Vector2d lateral(std::sin(1.0), -std::cos(1.0));
  for (const lb::Scenario& s : lb::BuiltinScenarios("cross")) {
    const lb::ScenarioResult r = lb::RunScenario(s);
    const Eigen::Vector2d pos = r.summary.final_state.head(2);
    Eigen::Vector2d dir = s.command.a1 != 0 ? forward : lateral;
    if (s.command.a1 + s.command.a3 < 0) dir = -dir;
    const double n = pos.norm();
    const double ang = AngleBetween(pos, dir);
    if (n < 0.85 || n > 1.15) Fail(o, s.name + Fmt(" norm %.3f", n));
    if (ang > 10.0) Fail(o, s.name + Fmt(" angle %.2f deg", ang));
    if (o.ok) o.detail += s.name + Fmt(" %.3f/%.1fdeg ", n, ang);
  }
  return o;
}

Outcome Criterion5() {
  Outcome o;
  lb::Scenario spin;
  for (const lb::Scenario& s : lb::BuiltinScenarios("spin")) {
    if (s.command == lb::BracketCommand{0, 0.1, 0}) spin = s;
  }
  if (spin.name.empty()) {
    Fail(o, "no spin scenario with command (0,0.1,0)");
    return o;
  }
  const lb::ScenarioResult r = lb::RunScenario(spin);
  const double n = r.summary.final_state.head(2).norm();
  const double heading = r.summary.final_state[2];
  if (n >= 0.05) Fail(o, Fmt("position norm %.3g", n));
  if (std::abs(heading - 2.0) > 0.02) Fail(o, Fmt("heading %.4f", heading));
  if (o.ok) o.detail = Fmt("norm %.2g heading %.4f", n, heading);
  return o;
}

Outcome Criterion6() {
  Outcome o;
  for (const lb::Scenario& s : lb::BuiltinScenarios("cardinal")) {
    const lb::ScenarioResult r = lb::RunScenario(s);
    const lb::Vec v = lb::MeanVelocity(r.trajectory, 0.0, s.sim.t_end);
    const Eigen::Vector2d want = s.xdot_d.head(2);
    const double ang = AngleBetween(v.head(2), want);
    const double mag = v.head(2).norm() / want.norm();
    const double drift = std::abs(r.summary.final_state[2] - 1.0);
    if (ang > 10.0) Fail(o, s.name + Fmt(" angle %.2f deg", ang));
    if (std::abs(mag - 1.0) > 0.15) Fail(o, s.name + Fmt(" magnitude %.3f", mag));
    if (drift >= 0.1) Fail(o, s.name + Fmt(" heading drift %.3f", drift));
    if (o.ok) o.detail += s.name + Fmt(" %.1fdeg/%.3f ", ang, mag);
  }
  return o;
}

Outcome Criterion7() {
  Outcome o;
  const lb::Scenario s = lb::BuiltinScenarios("lissajous").front();
  const lb::ScenarioResult r = lb::RunScenario(s);
  const double pos = *r.summary.tail_max_position_error;
  const double head = *r.summary.tail_max_heading_error;
  if (pos >= 0.5) Fail(o, Fmt("tail position error %.3f m", pos));
  if (head >= 0.2) Fail(o, Fmt("tail heading error %.3f rad", head));
  if (o.ok) o.detail = Fmt("tail position %.3f m heading %.3f rad", pos, head);
  return o;
}

Outcome Criterion8() {
  Outcome o;
  double ortho = 0;
  for (int i = 0; i < 100; ++i) {
    const Eigen::Matrix3d a = lb::BodyMatrix(-M_PI + 2 * M_PI * i / 99.0);
    ortho = std::max(ortho, (a * a.transpose() - Eigen::Matrix3d::Identity()).norm());
  }
  if (ortho >= 1e-12) Fail(o, Fmt("orthogonality %.3g", ortho));
  const lb::DubinsFields d = lb::Dubins1Fields();
  const std::vector<lb::VectorField> fields{d.f, d.g};
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 20; ++i) {
    const lb::Vec x = Eigen::Vector3d(u(rng), u(rng), u(rng));
    const int rank = lb::LieSpanRank(fields, x, 1);
    if (rank != 3) Fail(o, Fmt("rank %.0f at sample %.0f", rank, i));
  }
  if (o.ok) o.detail = Fmt("orthogonality %.2g, rank 3 at 20 states", ortho);
  return o;
}

Outcome Criterion9() {
  Outcome o;
  int runs = 0;
  for (const std::string& name : lb::BuiltinNames()) {
    for (const lb::Scenario& s : lb::BuiltinScenarios(name)) {
      const std::string a = lb::FormatCsv(lb::RunScenario(s).trajectory);
      const std::string b = lb::FormatCsv(lb::RunScenario(s).trajectory);
      if (a != b) Fail(o, s.name + " not byte-identical");
      const lb::Trajectory back = lb::ParseCsv(a);
      if (lb::FormatCsv(back) != a) Fail(o, s.name + " round-trip mismatch");
      ++runs;
    }
  }
  if (o.ok) o.detail = std::to_string(runs) + " scenarios byte-identical and round-trip exact";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;  // <= 0: no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "bracket algebra", 1.0, Criterion1},
      {2, "dubins bracket identity", 1.0, Criterion2},
      {3, "cycle convergence", 5.0, Criterion3},
      {4, "cross maneuvers", 2.0, Criterion4},
      {5, "spin in place", 0.0, Criterion5},
      {6, "cardinal directions", 2.0, Criterion6},
      {7, "lissajous tracking", 30.0, Criterion7},
      {8, "orthogonality and span", 0.0, Criterion8},
      {9, "determinism and csv", 0.0, Criterion9},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      Fail(o, Fmt("runtime %.2f s over %.0f s", secs, c.budget_s));
    }
    std::printf("%s criterion %d (%s) [%.2f s]: %s\n", o.ok ? "PASS" : "FAIL", c.id,
                c.title, secs, o.detail.c_str());
    if (!o.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
