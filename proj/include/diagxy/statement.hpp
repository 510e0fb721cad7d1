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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "diagxy/error.hpp"
#include "diagxy/geometry.hpp"
#include "diagxy/scene.hpp"

namespace diagxy {

enum class Constructor {
  kMorphism, kVect, kSquare, kAutoSquare, kDiamond, kTriangle, kTrianglePair,
  kPullback, kHSquares, kHAutoSquares, kVSquares, kVAutoSquares, kCube,
  kGrid3x3, kGrid3x2, kPlace, kNode, kNamedArrow, kLoop, kInlineLoop,
  kInlineArrow, kBeginFig, kEndFig,
};

// A trailing argument block owned by a composite constructor: the trident of
// \pullback, the inner square or the connectors of \cube.
struct Block {
  LogicalPoint origin;
  std::string placements;
  std::vector<std::string> arrow_specs;
  std::vector<std::int64_t> spans;
  std::vector<std::string> nodes;
  std::vector<std::string> labels;

  friend bool operator==(const Block&, const Block&) = default;
};

struct StatementExtras {
  char triangle_kind = 0;        // p q d b A V C D for triangles and pairs
  InlineKind inline_kind = InlineKind::kTo;
  std::int64_t mask = 0;         // grid border bitmask
  std::vector<std::int64_t> border;  // grid border spans
  Block trident;                 // \pullback
  Block inner;                   // \cube inner square
  Block connectors;              // \cube connector placements/specs/labels
  std::vector<std::string> names;    // \node name, \arrow endpoints
  std::string out_dir, in_dir;   // \Loop, \iloop
  Anchor anchor = Anchor::kCenter;   // \place[..]

  friend bool operator==(const StatementExtras&, const StatementExtras&) = default;
};

// One constructor invocation with every optional argument resolved. Node and
// label fields are kept verbatim (braces included); inline arrows store
// sup/sub/mid in `labels` and the explicit length in spans[0].
struct Statement {
  Constructor constructor = Constructor::kMorphism;
  SourcePos pos;
  LogicalPoint origin;
  std::string placements;
  std::vector<std::string> arrow_specs;
  std::vector<std::int64_t> spans;
  std::vector<std::string> nodes;
  std::vector<std::string> labels;
  StatementExtras extras;

  // Equality ignores the source position.
  friend bool operator==(const Statement& a, const Statement& b) {
    return a.constructor == b.constructor && a.origin == b.origin &&
           a.placements == b.placements && a.arrow_specs == b.arrow_specs &&
           a.spans == b.spans && a.nodes == b.nodes && a.labels == b.labels &&
           a.extras == b.extras;
  }
};

// The backslash word that produced a statement, e.g. "\Atrianglepair".
std::string keyword_of(const Statement& s);

// Prints a statement with every argument explicit; parsing the output yields
// an equal statement.
std::string print(const Statement& s);

}  // namespace diagxy
