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
#include <vector>

#include "diagxy/arrow_style.hpp"
#include "diagxy/geometry.hpp"
#include "diagxy/lower.hpp"
#include "diagxy/metrics.hpp"
#include "diagxy/scene.hpp"

namespace diagxy {

// Axis-aligned rectangle in points, y up.
struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  Vec2 center() const { return {(x0 + x1) / 2, (y0 + y1) / 2}; }
  Box inflated(double dx, double dy) const { return {x0 - dx, y0 - dy, x1 + dx, y1 + dy}; }
  Box united(const Box& o) const;
  bool contains(Vec2 p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
};

// Distance from p to the rectangle's boundary (0 when p is on an edge).
double distance_to_boundary(const Box& b, Vec2 p);

// Extent of typeset text whose reference point is `ref`.
struct TextBox {
  Box ink;       // text extent before the margin
  Box clip;      // ink inflated by the object margin
  Vec2 baseline; // left end of the baseline
  double width = 0;
};

// Node text box: measured width, fixed ascent/descent from the metrics table,
// baseline axis_pt below the reference point, positioned by the anchor.
TextBox node_box(LogicalPoint ref, std::string_view text, Anchor anchor,
                 const MetricsTable& metrics, const RenderConfig& cfg,
                 Warnings* warnings = nullptr);
TextBox node_box(const NodeInstance& n, const MetricsTable& metrics,
                 const RenderConfig& cfg, Warnings* warnings = nullptr);

struct ResolvedLabel {
  std::string text;
  LabelSide side = LabelSide::kNone;
  Vec2 attach;  // midpoint of the visible shaft
  Vec2 anchor;  // attach moved off the shaft along the side vector
  Vec2 center;  // where the label text box is centered
  Vec2 side_vector;
  double width = 0;
  double height = 0;
  std::optional<Box> backing;  // masking box for on-shaft labels
};

struct ResolvedArrow {
  Vec2 from;  // visible shaft start
  Vec2 to;    // visible shaft end
  ArrowStyle style;
  std::vector<ResolvedLabel> labels;
  bool loop = false;
  Vec2 c1, c2;  // cubic control points of a self-loop
  double tip_scale = 1.0;
};

struct ResolvedNode {
  NodeInstance node;
  TextBox box;
};

struct Layout {
  std::vector<ResolvedNode> nodes;
  std::vector<ResolvedArrow> arrows;
  Box bounds;
};

// Clips the segment between two reference points to the given clip boxes.
// Boxes are optional (bare vectors). Throws CompileError(kNodesOverlap) when
// nothing of the shaft remains visible.
ResolvedArrow clip_to_boxes(Vec2 from, Vec2 to, const ArrowStyle& style,
                            const std::optional<Box>& source,
                            const std::optional<Box>& target);

// Positions a label on the resolved shaft. Returns nothing for rule none,
// empty text, or an on-shaft label that measures zero.
std::optional<ResolvedLabel> place_label(const ResolvedArrow& r, std::string_view text,
                                         LabelSide side, const MetricsTable& metrics,
                                         const RenderConfig& cfg,
                                         Warnings* warnings = nullptr);

// Translates the shaft perpendicular to itself; positive is left of direction.
ResolvedArrow offset_parallel(ResolvedArrow r, double offset_pt);

// Resolves every node box, arrow clip, loop and label. Inline fragments are
// laid out left to right after the figure.
Layout layout(const Scene& scene, const MetricsTable& metrics, const RenderConfig& cfg,
              Warnings* warnings = nullptr);

}  // namespace diagxy
