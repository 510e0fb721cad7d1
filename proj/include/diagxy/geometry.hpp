// Copyright 2026 The diagxyc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <compare>
#include <cstdint>

namespace diagxy {

// One logical unit is 0.01 em. The y axis points up, as in the macro
// arithmetic where advancing ypos moves to the row above.
struct LogicalPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LogicalPoint&, const LogicalPoint&) = default;
  friend LogicalPoint operator+(LogicalPoint a, LogicalPoint b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend LogicalPoint operator-(LogicalPoint a, LogicalPoint b) {
    return {a.x - b.x, a.y - b.y};
  }
};

// Physical coordinates in points, y up.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
  friend Vec2 operator*(double s, Vec2 a) { return {a.x * s, a.y * s}; }
  friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }

  double length() const { return std::hypot(x, y); }
  Vec2 normalized() const {
    double len = length();
    return len == 0.0 ? Vec2{} : Vec2{x / len, y / len};
  }
  // Left-of-direction normal (counter-clockwise quarter turn).
  Vec2 left_normal() const { return {-y, x}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

struct RenderConfig {
  double em_pt = 10.0;
  double object_margin_pt = 3.0;
  double axis_pt = 2.5;
  double loop_reach_em = 2.0;
  // Scale applied to label widths in auto-width and inline-length
  // measurement (stands in for the script-size label style).
  double label_scale = 1.0;
  double label_gap_pt = 2.0;

  // Default configuration for a given em size; the math axis tracks 0.25 em.
  static RenderConfig for_em(double em_pt);

  // Throws std::invalid_argument when em_pt <= 0 or a margin/axis is negative.
  void validate() const;

  double unit_pt() const { return 0.01 * em_pt; }
};

Vec2 to_physical(LogicalPoint p, const RenderConfig& cfg);

}  // namespace diagxy
