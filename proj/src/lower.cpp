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

#include "diagxy/lower.hpp"

#include <algorithm>
#include <cstdlib>

#include "diagxy/arrow_style.hpp"
#include "diagxy/lexer.hpp"

namespace diagxy {
namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void degenerate(std::string_view what) {
  throw CompileError(ErrorKind::kDegenerateArrow,
                     std::string(what) + " has zero length; its direction is undefined");
}

const std::string kEmpty;

}  // namespace

std::string_view to_string(LabelSide s) {
  switch (s) {
    case LabelSide::kLeft: return "left";
    case LabelSide::kRight: return "right";
    case LabelSide::kOnShaft: return "on_shaft";
    case LabelSide::kNone: return "none";
  }
  return "none";
}

LabelSide label_side(LabelRule rule, std::int64_t dx, std::int64_t dy) {
  switch (rule) {
    case LabelRule::kL: return dy > 0 ? LabelSide::kLeft : LabelSide::kRight;
    case LabelRule::kR: return dy < 0 ? LabelSide::kLeft : LabelSide::kRight;
    case LabelRule::kA: return dx > 0 ? LabelSide::kLeft : LabelSide::kRight;
    case LabelRule::kB: return dx < 0 ? LabelSide::kLeft : LabelSide::kRight;
    case LabelRule::kM: return LabelSide::kOnShaft;
    case LabelRule::kNone: return LabelSide::kNone;
  }
  return LabelSide::kNone;
}

LogicalPoint twoar_endpoint(std::int64_t dx, std::int64_t dy) {
  if (dx == 0 && dy == 0) degenerate("\\twoar(0,0)");
  const std::int64_t a = std::llabs(dx), b = std::llabs(dy);
  const std::int64_t d = a > b ? 3 * a + b : a + 3 * b;
  const std::int64_t s = 3 * (dx * dx + dy * dy);
  const std::int64_t ux = 500 * dx, uy = 500 * dy;
  return {ux * 3 / d + ux * d / s, uy * 3 / d + uy * d / s};
}

std::string field_text(std::string_view field) { return strip_braces(trim(field)); }

void LoweringContext::node(LogicalPoint pos, std::string_view text, Anchor anchor,
                           bool phantom) {
  scene_.nodes.push_back({pos, std::string(text), anchor, phantom});
}

void LoweringContext::emit_morphism(LogicalPoint origin, char placement,
                                    std::string_view spec, std::int64_t dx,
                                    std::int64_t dy, std::string_view a,
                                    std::string_view b, std::string_view label,
                                    bool phantom_a, bool phantom_b) {
  const LogicalPoint end = origin + LogicalPoint{dx, dy};
  std::string ta = field_text(a), tb = field_text(b);
  node(origin, ta, Anchor::kCenter, phantom_a);
  node(end, tb, Anchor::kCenter, phantom_b);
  if (spec.empty()) return;
  if (dx == 0 && dy == 0) degenerate("arrow " + ta + " -> " + tb);
  ArrowInstance arrow;
  arrow.from = origin;
  arrow.to = end;
  arrow.style = parse_arrow_spec(spec);
  arrow.label = field_text(label);
  arrow.label_rule = label_rule_for(placement);
  arrow.source_extent = NodeRef{ta, Anchor::kCenter};
  arrow.target_extent = NodeRef{tb, Anchor::kCenter};
  scene_.arrows.push_back(std::move(arrow));
}

std::int64_t LoweringContext::width(std::string_view a, std::string_view b,
                                    std::string_view label) {
  return morphism_width(metrics_, field_text(a), field_text(b), field_text(label), cfg_,
                        warnings_);
}

// Draw order bottom, left, top, right. Slots: a A->B, b A->C, c B->D, d C->D.
void LoweringContext::square(LogicalPoint o, std::string_view p,
                             std::span<const std::string> s, std::int64_t dx,
                             std::int64_t dy, std::span<const std::string> n,
                             std::span<const std::string> l) {
  emit_morphism(o, p[3], s[3], dx, 0, n[2], n[3], l[3]);
  LogicalPoint top = o + LogicalPoint{0, dy};
  emit_morphism(top, p[1], s[1], 0, -dy, n[0], n[2], l[1]);
  emit_morphism(top, p[0], s[0], dx, 0, n[0], n[1], l[0]);
  emit_morphism(top + LogicalPoint{dx, 0}, p[2], s[2], 0, -dy, n[1], n[3], l[2]);
}

void LoweringContext::lower(const Statement& s) {
  const std::size_t seen = warnings_ ? warnings_->size() : 0;
  try {
    lower_statement(s);
  } catch (const CompileError& e) {
    throw e.with_context(s.pos, keyword_of(s));
  }
  if (!warnings_) return;
  for (std::size_t i = seen; i < warnings_->size(); ++i) {
    auto& w = (*warnings_)[i];
    if (w.pos.line == 0) w.pos = s.pos;
    if (w.constructor.empty()) w.constructor = keyword_of(s);
  }
}

void LoweringContext::lower_statement(const Statement& s) {
  const LogicalPoint o = s.origin;
  const auto& p = s.placements;
  const auto& sp = s.arrow_specs;
  const auto& n = s.nodes;
  const auto& l = s.labels;
  switch (s.constructor) {
    case Constructor::kMorphism:
      emit_morphism(o, p[0], sp[0], s.spans[0], s.spans[1], n[0], n[1], l[0]);
      return;
    case Constructor::kVect: {
      if (s.spans[0] == 0 && s.spans[1] == 0) degenerate("vector");
      ArrowInstance arrow;
      arrow.from = o;
      arrow.to = o + LogicalPoint{s.spans[0], s.spans[1]};
      arrow.style = parse_arrow_spec(sp[0]);
      scene_.arrows.push_back(std::move(arrow));
      return;
    }
    case Constructor::kSquare:
      square(o, p, sp, s.spans[0], s.spans[1], n, l);
      return;
    case Constructor::kAutoSquare: {
      std::int64_t w = std::max(width(n[0], n[1], l[0]), width(n[2], n[3], l[3]));
      square(o, p, sp, w, s.spans[0], n, l);
      return;
    }
    case Constructor::kDiamond: {
      const std::int64_t dx = s.spans[0], dy = s.spans[1];
      LogicalPoint pos = o + LogicalPoint{0, dy};
      emit_morphism(pos, p[2], sp[2], dx, -dy, n[1], n[3], l[2]);
      pos.x += 2 * dx;
      emit_morphism(pos, p[3], sp[3], -dx, -dy, n[2], n[3], l[3]);
      pos = pos + LogicalPoint{-dx, dy};
      emit_morphism(pos, p[0], sp[0], -dx, -dy, n[0], n[1], l[0]);
      emit_morphism(pos, p[1], sp[1], dx, -dy, n[0], n[2], l[1]);
      return;
    }
    case Constructor::kTriangle:
      lower_triangle(s);
      return;
    case Constructor::kTrianglePair:
      lower_pair(s);
      return;
    case Constructor::kPullback:
      lower_pullback(s);
      return;
    case Constructor::kHSquares: {
      const std::int64_t dX = s.spans[0], dX2 = s.spans[1], dY = s.spans[2];
      std::string p1{p[0], p[2], p[3], p[5]}, p2{p[1], p[3], p[4], p[6]};
      square(o, p1, std::vector{sp[0], sp[2], sp[3], sp[5]}, dX, dY,
             std::vector{n[0], n[1], n[3], n[4]}, std::vector{l[0], l[2], l[3], l[5]});
      square(o + LogicalPoint{dX, 0}, p2, std::vector{sp[1], kEmpty, sp[4], sp[6]}, dX2, dY,
             std::vector{n[1], n[2], n[4], n[5]}, std::vector{l[1], kEmpty, l[4], l[6]});
      return;
    }
    case Constructor::kHAutoSquares: {
      const std::int64_t dY = s.spans[0];
      std::int64_t w1 = std::max(width(n[0], n[1], l[0]), width(n[3], n[4], l[5]));
      std::int64_t w2 = std::max(width(n[1], n[2], l[1]), width(n[4], n[5], l[6]));
      std::string p1{p[0], p[2], p[3], p[5]}, p2{p[1], p[3], p[4], p[6]};
      square(o, p1, std::vector{sp[0], sp[2], sp[3], sp[5]}, w1, dY,
             std::vector{n[0], n[1], n[3], n[4]}, std::vector{l[0], l[2], l[3], l[5]});
      square(o + LogicalPoint{w1, 0}, p2, std::vector{sp[1], kEmpty, sp[4], sp[6]}, w2, dY,
             std::vector{n[1], n[2], n[4], n[5]}, std::vector{l[1], kEmpty, l[4], l[6]});
      return;
    }
    case Constructor::kVSquares: {
      const std::int64_t dX = s.spans[0], dY = s.spans[1], dY2 = s.spans[2];
      square(o, p.substr(3, 4), std::vector{kEmpty, sp[4], sp[5], sp[6]}, dX, dY2,
             std::vector{n[2], n[3], n[4], n[5]}, std::vector{kEmpty, l[4], l[5], l[6]});
      square(o + LogicalPoint{0, dY2}, p.substr(0, 4),
             std::vector{sp[0], sp[1], sp[2], sp[3]}, dX, dY,
             std::vector{n[0], n[1], n[2], n[3]}, std::vector{l[0], l[1], l[2], l[3]});
      return;
    }
    case Constructor::kVAutoSquares: {
      const std::int64_t dX = s.spans[0], dY = s.spans[1];
      std::int64_t w = std::max({width(n[0], n[1], l[0]), width(n[2], n[3], l[3]),
                                 width(n[4], n[5], l[6])});
      square(o, p.substr(3, 4), std::vector{kEmpty, sp[4], sp[5], sp[6]}, w, dY,
             std::vector{n[2], n[3], n[4], n[5]}, std::vector{kEmpty, l[4], l[5], l[6]});
      square(o + LogicalPoint{0, dY}, p.substr(0, 4),
             std::vector{sp[0], sp[1], sp[2], sp[3]}, w, dX,
             std::vector{n[0], n[1], n[2], n[3]}, std::vector{l[0], l[1], l[2], l[3]});
      return;
    }
    case Constructor::kCube:
      lower_cube(s);
      return;
    case Constructor::kGrid3x3:
      lower_grid3x3(s);
      return;
    case Constructor::kGrid3x2:
      lower_grid3x2(s);
      return;
    case Constructor::kPlace:
      node(o, field_text(n[0]), s.extras.anchor);
      return;
    case Constructor::kNode: {
      const std::string& name = s.extras.names[0];
      if (registry_.contains(name)) {
        throw CompileError(ErrorKind::kDuplicateNode,
                           "node \"" + name + "\" is already defined");
      }
      std::string text = field_text(n[0]);
      registry_.emplace(name, Named{o, text});
      node(o, text);
      return;
    }
    case Constructor::kNamedArrow: {
      const Named* ends[2];
      for (int i = 0; i < 2; ++i) {
        auto it = registry_.find(s.extras.names[i]);
        if (it == registry_.end()) {
          throw CompileError(ErrorKind::kUnknownNode,
                             "no node named \"" + s.extras.names[i] + "\"");
        }
        ends[i] = &it->second;
      }
      LogicalPoint d = ends[1]->pos - ends[0]->pos;
      emit_morphism(ends[0]->pos, p[0], sp[0], d.x, d.y, ends[0]->text, ends[1]->text, l[0],
                    true, true);
      return;
    }
    case Constructor::kLoop:
      lower_loop(o, s);
      return;
    case Constructor::kInlineLoop:
      lower_loop({0, 0}, s);
      return;
    case Constructor::kInlineArrow:
      lower_inline(s);
      return;
    case Constructor::kBeginFig:
    case Constructor::kEndFig:
      return;
  }
}

void LoweringContext::lower_triangle(const Statement& s) {
  const LogicalPoint o = s.origin;
  const std::int64_t dx = s.spans[0], dy = s.spans[1];
  const auto& p = s.placements;
  const auto& sp = s.arrow_specs;
  const auto& n = s.nodes;
  const auto& l = s.labels;
  // Arrow a joins nodes[0]->nodes[1], b nodes[0]->nodes[2], c nodes[1]->nodes[2],
  // except that the D kind draws a as A->C and b as A->B.
  auto a = [&](LogicalPoint at, std::int64_t x, std::int64_t y) {
    emit_morphism(at, p[0], sp[0], x, y, n[0], n[1], l[0]);
  };
  auto b = [&](LogicalPoint at, std::int64_t x, std::int64_t y) {
    emit_morphism(at, p[1], sp[1], x, y, n[0], n[2], l[1]);
  };
  auto c = [&](LogicalPoint at, std::int64_t x, std::int64_t y) {
    emit_morphism(at, p[2], sp[2], x, y, n[1], n[2], l[2]);
  };
  switch (s.extras.triangle_kind) {
    case 'p': {
      LogicalPoint A = o + LogicalPoint{0, dy};
      a(A, dx, 0);
      b(A, 0, -dy);
      c(A + LogicalPoint{dx, 0}, -dx, -dy);
      return;
    }
    case 'q': {
      LogicalPoint A = o + LogicalPoint{0, dy};
      a(A, dx, 0);
      b(A, dx, -dy);
      c(A + LogicalPoint{dx, 0}, 0, -dy);
      return;
    }
    case 'd': {
      c(o, dx, 0);
      LogicalPoint A = o + LogicalPoint{dx, dy};
      a(A, -dx, -dy);
      b(A, 0, -dy);
      return;
    }
    case 'b': {
      c(o, dx, 0);
      LogicalPoint A = o + LogicalPoint{0, dy};
      a(A, 0, -dy);
      b(A, dx, -dy);
      return;
    }
    case 'A': {
      c(o, 2 * dx, 0);
      LogicalPoint A = o + LogicalPoint{dx, dy};
      a(A, -dx, -dy);
      b(A, dx, -dy);
      return;
    }
    case 'V': {
      LogicalPoint A = o + LogicalPoint{0, dy};
      b(A, dx, -dy);
      a(A, 2 * dx, 0);
      c(A + LogicalPoint{2 * dx, 0}, -dx, -dy);
      return;
    }
    case 'C': {
      LogicalPoint B = o + LogicalPoint{0, dy};
      c(B, dx, -dy);
      LogicalPoint A = B + LogicalPoint{dx, dy};
      a(A, -dx, -dy);
      b(A, 0, -2 * dy);
      return;
    }
    case 'D': {
      LogicalPoint B = o + LogicalPoint{dx, dy};
      c(B, -dx, -dy);
      LogicalPoint A = o + LogicalPoint{0, 2 * dy};
      emit_morphism(A, p[1], sp[1], dx, -dy, n[0], n[1], l[1]);
      emit_morphism(A, p[0], sp[0], 0, -2 * dy, n[0], n[2], l[0]);
      return;
    }
  }
}

void LoweringContext::lower_pair(const Statement& s) {
  const LogicalPoint o = s.origin;
  const std::int64_t dx = s.spans[0], dy = s.spans[1];
  const auto& p = s.placements;
  const auto& sp = s.arrow_specs;
  const auto& n = s.nodes;
  const auto& l = s.labels;
  auto arrow = [&](int slot, LogicalPoint at, std::int64_t x, std::int64_t y, int from,
                   int to) {
    emit_morphism(at, p[slot], sp[slot], x, y, n[from], n[to], l[slot]);
  };
  switch (s.extras.triangle_kind) {
    case 'A': {
      arrow(3, o, dx, 0, 1, 2);
      arrow(4, o + LogicalPoint{dx, 0}, dx, 0, 2, 3);
      LogicalPoint A = o + LogicalPoint{dx, dy};
      arrow(0, A, -dx, -dy, 0, 1);
      arrow(1, A, 0, -dy, 0, 2);
      arrow(2, A, dx, -dy, 0, 3);
      return;
    }
    case 'V': {
      LogicalPoint A = o + LogicalPoint{0, dy};
      arrow(0, A, dx, 0, 0, 1);
      arrow(2, A, dx, -dy, 0, 3);
      LogicalPoint B = A + LogicalPoint{dx, 0};
      arrow(1, B, dx, 0, 1, 2);
      arrow(3, B, 0, -dy, 1, 3);
      arrow(4, B + LogicalPoint{dx, 0}, -dx, -dy, 2, 3);
      return;
    }
    case 'C': {
      LogicalPoint C = o + LogicalPoint{0, dy};
      arrow(4, C, 0, -dy, 2, 3);
      LogicalPoint B = C - LogicalPoint{dx, 0};
      arrow(2, B, dx, 0, 1, 2);
      arrow(3, B, dx, -dy, 1, 3);
      LogicalPoint A = o + LogicalPoint{0, 2 * dy};
      arrow(0, A, -dx, -dy, 0, 1);
      arrow(1, A, 0, -dy, 0, 2);
      return;
    }
    case 'D': {
      LogicalPoint B = o + LogicalPoint{0, dy};
      arrow(2, B, dx, 0, 1, 2);
      arrow(3, B, 0, -dy, 1, 3);
      LogicalPoint A = o + LogicalPoint{0, 2 * dy};
      arrow(0, A, 0, -dy, 0, 1);
      arrow(1, A, dx, -dy, 0, 2);
      arrow(4, B + LogicalPoint{dx, 0}, -dx, -dy, 2, 3);
      return;
    }
  }
}

void LoweringContext::lower_pullback(const Statement& s) {
  const std::int64_t dx = s.spans[0], dy = s.spans[1];
  square(s.origin, s.placements, s.arrow_specs, dx, dy, s.nodes, s.labels);
  const Block& t = s.extras.trident;
  const std::int64_t w = t.spans[0], h = t.spans[1];
  const LogicalPoint E = s.origin + LogicalPoint{-w, dy + h};
  const auto& n = s.nodes;
  emit_morphism(E, t.placements[0], t.arrow_specs[0], dx + w, -h, t.nodes[0], n[1],
                t.labels[0]);
  emit_morphism(E, t.placements[1], t.arrow_specs[1], w, -h, t.nodes[0], n[0], t.labels[1]);
  emit_morphism(E, t.placements[2], t.arrow_specs[2], w, -(dy + h), t.nodes[0], n[2],
                t.labels[2]);
}

void LoweringContext::lower_cube(const Statement& s) {
  const std::int64_t dX = s.spans[0], dY = s.spans[1];
  square(s.origin, s.placements, s.arrow_specs, dX, dY, s.nodes, s.labels);
  const Block& in = s.extras.inner;
  const std::int64_t dx = in.spans[0], dy = in.spans[1];
  square(in.origin, in.placements, in.arrow_specs, dx, dy, in.nodes, in.labels);
  const Block& c = s.extras.connectors;
  // Corner offsets within a square for nodes A, B, C, D.
  const LogicalPoint outer[4] = {{0, dY}, {dX, dY}, {0, 0}, {dX, 0}};
  const LogicalPoint inner[4] = {{0, dy}, {dx, dy}, {0, 0}, {dx, 0}};
  for (int slot : {1, 0, 2, 3}) {
    LogicalPoint from = s.origin + outer[slot];
    LogicalPoint to = in.origin + inner[slot];
    LogicalPoint d = to - from;
    emit_morphism(from, c.placements[slot], c.arrow_specs[slot], d.x, d.y, s.nodes[slot],
                  in.nodes[slot], c.labels[slot], false, true);
  }
}

namespace {

void check_mask(std::int64_t mask, int bits) {
  if (mask < 0 || mask >= (std::int64_t{1} << bits)) {
    throw CompileError(ErrorKind::kMaskOutOfRange,
                       "border mask " + std::to_string(mask) + " is outside [0, " +
                           std::to_string((std::int64_t{1} << bits) - 1) + "]");
  }
}

}  // namespace

void LoweringContext::lower_grid3x3(const Statement& s) {
  check_mask(s.extras.mask, 12);
  const auto bit = [&](int i) { return (s.extras.mask >> i) & 1; };
  const std::int64_t x = s.origin.x, y = s.origin.y;
  const std::int64_t dx = s.spans[0], dy = s.spans[1];
  const std::int64_t bX = s.extras.border[0], bY = s.extras.border[1];
  const auto& p = s.placements;
  const auto& sp = s.arrow_specs;
  const auto& n = s.nodes;
  const auto& l = s.labels;
  auto edge = [&](int slot, std::int64_t px, std::int64_t py, std::int64_t ex,
                  std::int64_t ey, int from, int to) {
    emit_morphism({px, py}, p[slot], sp[slot], ex, ey, n[from], n[to], l[slot]);
  };
  // Incoming borders are drawn from the 0 node; outgoing ones into it.
  auto in_border = [&](int target, std::int64_t px, std::int64_t py, std::int64_t ex,
                       std::int64_t ey) {
    emit_morphism({px + ex, py + ey}, 'a', ">", -ex, -ey, "0", n[target], "");
  };
  auto out_border = [&](int source, std::int64_t px, std::int64_t py, std::int64_t ex,
                        std::int64_t ey) {
    emit_morphism({px, py}, 'a', ">", ex, ey, n[source], "0", "");
  };
  enum { A, B, C, D, E, F, G, H, I };
  // Middle row.
  std::int64_t row = y + dy;
  if (bit(5)) in_border(D, x, row, -bX, 0);
  edge(5, x, row, dx, 0, D, E);
  edge(6, x + dx, row, dx, 0, E, F);
  if (bit(6)) out_border(F, x + 2 * dx, row, bX, 0);
  // Top row.
  row = y + 2 * dy;
  if (bit(3)) in_border(A, x, row, -bX, 0);
  if (bit(0)) in_border(A, x, row, 0, bY);
  edge(0, x, row, dx, 0, A, B);
  edge(2, x, row, 0, -dy, A, D);
  edge(1, x + dx, row, dx, 0, B, C);
  edge(3, x + dx, row, 0, -dy, B, E);
  if (bit(1)) in_border(B, x + dx, row, 0, bY);
  edge(4, x + 2 * dx, row, 0, -dy, C, F);
  if (bit(2)) in_border(C, x + 2 * dx, row, 0, bY);
  if (bit(4)) out_border(C, x + 2 * dx, row, bX, 0);
  // Bottom row.
  if (bit(7)) in_border(G, x, y, -bX, 0);
  if (bit(9)) out_border(G, x, y, 0, -bY);
  edge(10, x, y, dx, 0, G, H);
  edge(11, x + dx, y, dx, 0, H, I);
  if (bit(10)) out_border(H, x + dx, y, 0, -bY);
  if (bit(8)) out_border(I, x + 2 * dx, y, bX, 0);
  if (bit(11)) out_border(I, x + 2 * dx, y, 0, -bY);
  // Lower verticals.
  row = y + dy;
  edge(7, x, row, 0, -dy, D, G);
  edge(8, x + dx, row, 0, -dy, E, H);
  edge(9, x + 2 * dx, row, 0, -dy, F, I);
}

void LoweringContext::lower_grid3x2(const Statement& s) {
  check_mask(s.extras.mask, 4);
  const auto bit = [&](int i) { return (s.extras.mask >> i) & 1; };
  const std::int64_t x = s.origin.x, y = s.origin.y;
  const std::int64_t dx = s.spans[0], dy = s.spans[1];
  const std::int64_t bX = s.extras.border[0];
  const auto& p = s.placements;
  const auto& sp = s.arrow_specs;
  const auto& n = s.nodes;
  const auto& l = s.labels;
  auto edge = [&](int slot, std::int64_t px, std::int64_t py, std::int64_t ex,
                  std::int64_t ey, int from, int to) {
    emit_morphism({px, py}, p[slot], sp[slot], ex, ey, n[from], n[to], l[slot]);
  };
  enum { A, B, C, D, E, F };
  if (bit(2)) emit_morphism({x - bX, y}, 'a', ">", bX, 0, "0", n[D], "");
  edge(5, x, y, dx, 0, D, E);
  edge(6, x + dx, y, dx, 0, E, F);
  if (bit(3)) emit_morphism({x + 2 * dx, y}, 'a', ">", bX, 0, n[F], "0", "");
  const std::int64_t top = y + dy;
  if (bit(0)) emit_morphism({x - bX, top}, 'a', ">", bX, 0, "0", n[A], "");
  edge(0, x, top, dx, 0, A, B);
  edge(2, x, top, 0, -dy, A, D);
  edge(1, x + dx, top, dx, 0, B, C);
  edge(3, x + dx, top, 0, -dy, B, E);
  edge(4, x + 2 * dx, top, 0, -dy, C, F);
  if (bit(1)) emit_morphism({x + 2 * dx, top}, 'a', ">", bX, 0, n[C], "0", "");
}

void LoweringContext::lower_loop(LogicalPoint pos, const Statement& s) {
  const std::string& out = s.extras.out_dir;
  const std::string& in = s.extras.in_dir;
  Vec2 vo = resolve_compass(out), vi = resolve_compass(in);
  if (vo == vi) {
    throw CompileError(ErrorKind::kDegenerateLoop,
                       "loop leaves and arrives along the same direction (" + out + "," +
                           in + ")");
  }
  std::string text = field_text(s.nodes[0]);
  node(pos, text);
  ArrowInstance arrow;
  arrow.from = pos;
  arrow.to = pos;
  arrow.source_extent = NodeRef{text, Anchor::kCenter};
  arrow.target_extent = NodeRef{text, Anchor::kCenter};
  arrow.loop = LoopDirections{out, in};
  scene_.arrows.push_back(std::move(arrow));
}

void LoweringContext::lower_inline(const Statement& s) {
  InlineFragment f;
  f.kind = s.extras.inline_kind;
  auto shaft = [](std::string_view spec, double offset) {
    ArrowStyle st = parse_arrow_spec(spec);
    st.parallel_offset_pt += offset;
    return st;
  };
  const auto& lab = s.labels;
  const std::int64_t explicit_len = s.spans.empty() ? 0 : s.spans[0];
  switch (f.kind) {
    case InlineKind::kTwoar: {
      LogicalPoint end = twoar_endpoint(s.spans[0], s.spans[1]);
      f.unit_scale = 0.1;
      f.arrows.push_back({end, parse_arrow_spec("=>"), "", "", ""});
      break;
    }
    case InlineKind::kRlimto:
    case InlineKind::kLlimto:
      f.tip_scale = 0.8;
      f.raise_pt = 2.0;
      f.arrows.push_back({{explicit_len, 0}, parse_arrow_spec(s.arrow_specs[0]), "", "", ""});
      break;
    case InlineKind::kTwo: {
      std::int64_t len = inline_length(metrics_, lab, 200, explicit_len, cfg_, warnings_);
      f.arrows.push_back({{len, 0}, shaft(s.arrow_specs[0], 2.5), lab[0], "", ""});
      f.arrows.push_back({{len, 0}, shaft(s.arrow_specs[1], -2.5), "", lab[1], ""});
      break;
    }
    case InlineKind::kThree: {
      std::int64_t len = inline_length(metrics_, lab, 300, explicit_len, cfg_, warnings_);
      f.arrows.push_back({{len, 0}, shaft(s.arrow_specs[1], 0), "", "", lab[1]});
      f.arrows.push_back({{len, 0}, shaft(s.arrow_specs[0], 4.5), lab[0], "", ""});
      f.arrows.push_back({{len, 0}, shaft(s.arrow_specs[2], -4.5), "", lab[2], ""});
      break;
    }
    default: {
      std::int64_t len = inline_length(metrics_, lab, 100, explicit_len, cfg_, warnings_);
      f.arrows.push_back({{len, 0}, shaft(s.arrow_specs[0], 0), lab[0], lab[1], ""});
    }
  }
  scene_.inlines.push_back(std::move(f));
}

Scene lower(std::span<const Statement> statements, const MetricsTable& metrics,
            const RenderConfig& cfg, Warnings* warnings) {
  LoweringContext ctx(metrics, cfg, warnings);
  for (const auto& s : statements) ctx.lower(s);
  return ctx.scene();
}

}  // namespace diagxy
