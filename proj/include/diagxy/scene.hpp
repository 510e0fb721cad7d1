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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diagxy/arrow_style.hpp"
#include "diagxy/geometry.hpp"

namespace diagxy {

enum class Anchor { kCenter, kL, kR, kU, kD, kLU, kLD, kRU, kRD };

std::string_view to_string(Anchor a);
// Accepts the xy-pic spellings, case-insensitively, in either letter order
// ("lu" == "ul"). Returns nullopt for anything else.
std::optional<Anchor> parse_anchor(std::string_view s);

struct NodeInstance {
  LogicalPoint pos;  // on the math axis
  std::string text;  // label source, one brace level already stripped
  Anchor anchor = Anchor::kCenter;
  bool phantom = false;  // occupies extent but is not inked

  friend bool operator==(const NodeInstance&, const NodeInstance&) = default;
};

// Same node under the deduplication rule: position, text and anchor.
bool same_node(const NodeInstance& a, const NodeInstance& b);

enum class LabelRule { kL, kM, kR, kA, kB, kNone };

std::string_view to_string(LabelRule r);
LabelRule label_rule_for(char placement);

// Which node box clips an arrow end; the box sits at that end's point.
struct NodeRef {
  std::string text;
  Anchor anchor = Anchor::kCenter;

  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

// Self-loop departure and arrival compass directions.
struct LoopDirections {
  std::string out;
  std::string in;

  friend bool operator==(const LoopDirections&, const LoopDirections&) = default;
};

struct ArrowInstance {
  LogicalPoint from;
  LogicalPoint to;
  ArrowStyle style;
  std::string label;
  LabelRule label_rule = LabelRule::kNone;
  std::optional<NodeRef> source_extent;  // absent for bare vectors
  std::optional<NodeRef> target_extent;
  std::optional<LoopDirections> loop;  // from == to when set

  friend bool operator==(const ArrowInstance&, const ArrowInstance&) = default;
};

enum class InlineKind {
  kTo, kTwo, kThree, kTwoar, kMon, kEpi, kToleft, kMonleft, kEpileft,
  kRlimto, kLlimto,
};

std::string_view to_string(InlineKind k);

// One shaft of an inline arrow, drawn from the fragment origin to `to`.
// The parallel offset lives in the style.
struct InlineArrow {
  LogicalPoint to;
  ArrowStyle style;
  std::string sup;  // above (left of direction)
  std::string sub;  // below
  std::string mid;  // on the shaft

  friend bool operator==(const InlineArrow&, const InlineArrow&) = default;
};

struct InlineFragment {
  InlineKind kind = InlineKind::kTo;
  std::vector<InlineArrow> arrows;
  double unit_scale = 1.0;  // 0.1 for \twoar coordinates
  double tip_scale = 1.0;
  double raise_pt = 0.0;

  friend bool operator==(const InlineFragment&, const InlineFragment&) = default;
};

struct Scene {
  std::vector<NodeInstance> nodes;
  std::vector<ArrowInstance> arrows;  // lowering order is z-order
  std::vector<InlineFragment> inlines;

  friend bool operator==(const Scene&, const Scene&) = default;
};

// Keeps the first occurrence of every (pos, text, anchor); a node is inked if
// any of its twins was.
Scene dedupe_nodes(Scene scene);

}  // namespace diagxy
