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

#include "liebracket/trajectory_io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "liebracket/errors.h"

namespace liebracket {

namespace {

void WriteText(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << text;
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double ParseDouble(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw IoError("<csv>", "line " + std::to_string(line_no) +
                               ": cannot parse number '" + std::string(field) +
                               "'");
  }
  return value;
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                       std::chars_format::general, 17);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string CsvHeader(const Trajectory& traj) {
  // An empty trajectory still gets the first-order car layout.
  const Eigen::Index n = traj.empty() ? 3 : traj.states.front().size();
  const Eigen::Index m = traj.empty() ? 2 : traj.inputs.front().size();
  std::string header = "t";
  for (Eigen::Index i = 1; i <= n; ++i) header += ",x" + std::to_string(i);
  for (Eigen::Index i = 1; i <= m; ++i) header += ",u" + std::to_string(i);
  if (traj.has_commands()) header += ",a1,a2,a3";
  return header;
}

std::string FormatCsv(const Trajectory& traj) {
  std::string out = CsvHeader(traj);
  out += '\n';
  for (std::size_t k = 0; k < traj.size(); ++k) {
    out += FormatDouble(traj.times[k]);
    for (const double v : traj.states[k]) {
      out += ',';
      out += FormatDouble(v);
    }
    for (const double v : traj.inputs[k]) {
      out += ',';
      out += FormatDouble(v);
    }
    if (traj.has_commands()) {
      const BracketCommand& a = traj.commands[k];
      for (const double v : {a.a1, a.a2, a.a3}) {
        out += ',';
        out += FormatDouble(v);
      }
    }
    out += '\n';
  }
  return out;
}

void WriteCsv(const Trajectory& traj, const std::filesystem::path& path) {
  WriteText(FormatCsv(traj), path);
}

Trajectory ParseCsv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty()) throw IoError("<csv>", "missing header");

  const auto header = SplitFields(lines.front());
  if (header.empty() || header.front() != "t") {
    throw IoError("<csv>", "header must start with 't'");
  }
  std::size_t n = 0, m = 0;
  bool commands = false;
  for (std::size_t i = 1; i < header.size(); ++i) {
    const std::string_view name = header[i];
    if (name.starts_with('x')) {
      ++n;
    } else if (name.starts_with('u')) {
      ++m;
    } else if (name == "a1") {
      commands = true;
    }
  }
  const std::size_t width = 1 + n + m + (commands ? 3 : 0);
  if (width != header.size()) throw IoError("<csv>", "unrecognized header");

  Trajectory traj;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto fields = SplitFields(lines[li]);
    if (fields.size() != width) {
      throw IoError("<csv>", "line " + std::to_string(li + 1) +
                                 ": expected " + std::to_string(width) +
                                 " fields");
    }
    std::size_t c = 0;
    traj.times.push_back(ParseDouble(fields[c++], li + 1));
    Vec x(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      x[static_cast<Eigen::Index>(i)] = ParseDouble(fields[c++], li + 1);
    }
    Vec u(static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) {
      u[static_cast<Eigen::Index>(i)] = ParseDouble(fields[c++], li + 1);
    }
    traj.states.push_back(std::move(x));
    traj.inputs.push_back(std::move(u));
    if (commands) {
      BracketCommand a;
      a.a1 = ParseDouble(fields[c++], li + 1);
      a.a2 = ParseDouble(fields[c++], li + 1);
      a.a3 = ParseDouble(fields[c++], li + 1);
      traj.commands.push_back(a);
    }
  }
  return traj;
}

Trajectory ReadCsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ParseCsv(buf.str());
  } catch (const IoError& e) {
    throw IoError(path.string(), e.what());
  }
}

std::string FormatSvg(const Trajectory& traj) {
  double min_x = -1.0, max_x = 1.0, min_y = -1.0, max_y = 1.0;
  if (!traj.empty()) {
    min_x = max_x = traj.states.front()[0];
    min_y = max_y = traj.states.front()[1];
    for (const Vec& s : traj.states) {
      min_x = std::min(min_x, s[0]);
      max_x = std::max(max_x, s[0]);
      min_y = std::min(min_y, s[1]);
      max_y = std::max(max_y, s[1]);
    }
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-6});
  const double pad = 0.05 * span;
  const double size = span + 2.0 * pad;
  const double left = min_x - pad;
  // SVG's y axis points down, so flip north up.
  const double top = -(max_y + pad);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
     << "viewBox=\"" << FormatDouble(left) << ' ' << FormatDouble(top) << ' '
     << FormatDouble(size) << ' ' << FormatDouble(size) << "\">\n";
  os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\""
     << FormatDouble(size / 600.0) << "\" points=\"";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    if (k > 0) os << ' ';
    os << FormatDouble(traj.states[k][0]) << ','
       << FormatDouble(-traj.states[k][1]);
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

void WriteSvg(const Trajectory& traj, const std::filesystem::path& path) {
  WriteText(FormatSvg(traj), path);
}

}  // namespace liebracket
