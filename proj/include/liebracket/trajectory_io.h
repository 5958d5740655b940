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

// CSV and SVG output for trajectories.
//
// CSV layout: header "t,x1,...,xn,u1,...,um[,a1,a2,a3]", one row per
// recorded sample, comma separated, '\n' terminated, every number printed
// with 17 significant digits so that it parses back to the same double.

#ifndef LIEBRACKET_TRAJECTORY_IO_H_
#define LIEBRACKET_TRAJECTORY_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "liebracket/simulator.h"

namespace liebracket {

std::string CsvHeader(const Trajectory& traj);
std::string FormatCsv(const Trajectory& traj);

// Throws IoError when the file cannot be written.
void WriteCsv(const Trajectory& traj, const std::filesystem::path& path);

// Inverse of FormatCsv. Throws IoError for malformed input.
Trajectory ParseCsv(std::string_view text);
Trajectory ReadCsv(const std::filesystem::path& path);

// Polyline of (x1, x2) scaled into an auto-fitted viewBox.
std::string FormatSvg(const Trajectory& traj);
void WriteSvg(const Trajectory& traj, const std::filesystem::path& path);

// 17 significant digits, locale independent.
std::string FormatDouble(double value);

}  // namespace liebracket

#endif  // LIEBRACKET_TRAJECTORY_IO_H_
