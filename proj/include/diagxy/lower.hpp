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

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "diagxy/error.hpp"
#include "diagxy/geometry.hpp"
#include "diagxy/metrics.hpp"
#include "diagxy/scene.hpp"
#include "diagxy/statement.hpp"

namespace diagxy {

enum class LabelSide { kLeft, kRight, kOnShaft, kNone };

std::string_view to_string(LabelSide s);

// Side of the direction of travel (dx, dy) on which a label with placement
// rule `rule` sits: l and r look at the sign of dy, a and b at the sign of dx.
LabelSide label_side(LabelRule rule, std::int64_t dx, std::int64_t dy);

// The endpoint of \twoar(dx,dy) in tenths of a logical unit. Throws
// CompileError(kDegenerateArrow) for (0,0).
LogicalPoint twoar_endpoint(std::int64_t dx, std::int64_t dy);

// Lowers statements into one scene. Named nodes live in the context, so a
// context spans one figure.
class LoweringContext {
 public:
  LoweringContext(const MetricsTable& metrics, const RenderConfig& cfg,
                  Warnings* warnings = nullptr)
      : metrics_(metrics), cfg_(cfg), warnings_(warnings) {}

  // Throws CompileError carrying the statement's position and keyword.
  void lower(const Statement& s);

  // The scene so far with duplicate nodes removed.
  Scene scene() const { return dedupe_nodes(scene_); }
  // The scene so far in raw emission order (every node a macro typesets).
  const Scene& raw_scene() const { return scene_; }

  // One morphism: nodes a at `origin` and b at origin + (dx, dy), joined by
  // an arrow. An empty spec typesets the nodes and draws nothing.
  void emit_morphism(LogicalPoint origin, char placement, std::string_view spec,
                     std::int64_t dx, std::int64_t dy, std::string_view a,
                     std::string_view b, std::string_view label, bool phantom_a = false,
                     bool phantom_b = false);

 private:
  struct Named {
    LogicalPoint pos;
    std::string text;
  };

  void square(LogicalPoint o, std::string_view places,
              std::span<const std::string> specs, std::int64_t dx, std::int64_t dy,
              std::span<const std::string> nodes, std::span<const std::string> labels);
  std::int64_t width(std::string_view a, std::string_view b, std::string_view label);
  void node(LogicalPoint pos, std::string_view text, Anchor anchor = Anchor::kCenter,
            bool phantom = false);

  void lower_statement(const Statement& s);
  void lower_triangle(const Statement& s);
  void lower_pair(const Statement& s);
  void lower_pullback(const Statement& s);
  void lower_cube(const Statement& s);
  void lower_grid3x3(const Statement& s);
  void lower_grid3x2(const Statement& s);
  void lower_loop(LogicalPoint pos, const Statement& s);
  void lower_inline(const Statement& s);

  const MetricsTable& metrics_;
  const RenderConfig& cfg_;
  Warnings* warnings_;
  Scene scene_;
  std::map<std::string, Named, std::less<>> registry_;
};

// Convenience: lowers a statement list in a fresh context.
Scene lower(std::span<const Statement> statements, const MetricsTable& metrics,
            const RenderConfig& cfg, Warnings* warnings = nullptr);

// Field text as used for typesetting: trimmed, one brace level removed.
std::string field_text(std::string_view field);

}  // namespace diagxy
