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
#include <string_view>

#include "diagxy/geometry.hpp"

namespace diagxy {

enum class Tail { kNone, kMono, kHookUp, kHookDown, kBar };
enum class Shaft { kSolid, kDashed, kDotted, kDouble, kInvisible };
enum class Head { kNone, kNormal, kDoubleHead };
enum class Mid { kNone, kTick, kCross };

// Canonical decomposition of an arrow specification. When `reversed` is set
// the head decorations belong at the `from` end and the tail decorations at
// the `to` end; endpoints themselves are never swapped.
struct ArrowStyle {
  Tail tail = Tail::kNone;
  Shaft shaft = Shaft::kSolid;
  Head head = Head::kNormal;
  Mid mid = Mid::kNone;
  double parallel_offset_pt = 0.0;
  bool reversed = false;

  friend bool operator==(const ArrowStyle&, const ArrowStyle&) = default;
};

std::string_view to_string(Tail t);
std::string_view to_string(Shaft s);
std::string_view to_string(Head h);
std::string_view to_string(Mid m);

// Parses the text between the slashes of a constructor's /.../ argument.
// Whitespace is significant (" >->" is the spaced mono tail). A spec whose
// first character is '@' is raw: its @{...} body is re-parsed as a
// directional and the trailing modifiers (|-*@{|}, |-*@{+}, @<Xpt>) apply.
// Throws CompileError(kUnsupportedArrowSpec) with the offending offset.
ArrowStyle parse_arrow_spec(std::string_view spec);

// Same arrow drawn the other way round: flips `reversed` only.
ArrowStyle reversed(ArrowStyle style);

// Unit vector for l, r, u, d, ul, ur, dl, dr (also accepts lu, ru, ld, rd).
// Throws CompileError(kBadDirection).
Vec2 resolve_compass(std::string_view direction);

}  // namespace diagxy
