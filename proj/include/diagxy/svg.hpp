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

#include <string>

#include "diagxy/layout.hpp"

namespace diagxy {

// Tip and shaft geometry in points. These stand in for the arrow-tip fonts.
struct TipGeometry {
  static constexpr double kHeadLength = 4.0;
  static constexpr double kHeadWidth = 3.0;
  static constexpr double kDoubleHeadGap = 1.5;
  static constexpr double kDoubleShaftOffset = 0.8;
  static constexpr double kHookRadius = 1.5;
  static constexpr double kTickLength = 3.0;
  static constexpr double kBarLength = 3.0;
  static constexpr double kStrokeWidth = 0.4;
  static constexpr double kPadding = 5.0;
};

// Static SVG 1.1 document with y flipped so logical up is screen up.
std::string emit_svg(const Layout& layout, const RenderConfig& cfg);

}  // namespace diagxy
