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

#include "diagxy/layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace diagxy {
namespace {

constexpr double kMaskPadX = 1.0;  // *+<1pt,4pt> around on-shaft labels
constexpr double kMaskPadY = 4.0;
constexpr double kInlineGap = 10.0;

// Parameter interval where the line p + t*d lies inside b.
std::optional<std::pair<double, double>> slab(const Box& b, Vec2 p, Vec2 d) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  const double mins[2] = {b.x0, b.y0}, maxs[2] = {b.x1, b.y1};
  const double ps[2] = {p.x, p.y}, ds[2] = {d.x, d.y};
  for (int i = 0; i < 2; ++i) {
    if (ds[i] == 0.0) {
      if (ps[i] < mins[i] || ps[i] > maxs[i]) return std::nullopt;
      continue;
    }
    double t0 = (mins[i] - ps[i]) / ds[i], t1 = (maxs[i] - ps[i]) / ds[i];
    if (t0 > t1) std::swap(t0, t1);
    lo = std::max(lo, t0);
    hi = std::min(hi, t1);
  }
  if (lo > hi) return std::nullopt;
  return std::pair{lo, hi};
}

// Where a ray from inside the box leaves it.
Vec2 exit_point(const Box& b, Vec2 p, Vec2 d) {
  auto t = slab(b, p, d);
  if (!t || t->second <= 0) return p;
  return p + d * t->second;
}

Vec2 side_vector(Vec2 dir, LabelSide side) {
  Vec2 left = dir.normalized().left_normal();
  switch (side) {
    case LabelSide::kLeft: return left;
    case LabelSide::kRight: return -left;
    default: return {};
  }
}

}  // namespace

Box Box::united(const Box& o) const {
  return {std::min(x0, o.x0), std::min(y0, o.y0), std::max(x1, o.x1), std::max(y1, o.y1)};
}

double distance_to_boundary(const Box& b, Vec2 p) {
  double dx = std::max({b.x0 - p.x, 0.0, p.x - b.x1});
  double dy = std::max({b.y0 - p.y, 0.0, p.y - b.y1});
  if (dx > 0 || dy > 0) return std::hypot(dx, dy);
  return std::min({p.x - b.x0, b.x1 - p.x, p.y - b.y0, b.y1 - p.y});
}

TextBox node_box(LogicalPoint ref, std::string_view text, Anchor anchor,
                 const MetricsTable& metrics, const RenderConfig& cfg, Warnings* warnings) {
  const Vec2 r = to_physical(ref, cfg);
  TextBox out;
  const double m = cfg.object_margin_pt;
  if (text.empty()) {
    out.ink = {r.x, r.y, r.x, r.y};
    out.clip = out.ink.inflated(m, m);
    out.baseline = r;
    return out;
  }
  const double w = metrics.measure(text, cfg, warnings);
  const double asc = metrics.ascent() * cfg.em_pt / 1000.0;
  const double desc = metrics.descent() * cfg.em_pt / 1000.0;
  double x0 = r.x - w / 2;
  double base = r.y - cfg.axis_pt;
  switch (anchor) {
    case Anchor::kL: case Anchor::kLU: case Anchor::kLD: x0 = r.x; break;
    case Anchor::kR: case Anchor::kRU: case Anchor::kRD: x0 = r.x - w; break;
    default: break;
  }
  switch (anchor) {
    case Anchor::kU: case Anchor::kLU: case Anchor::kRU: base = r.y - asc; break;
    case Anchor::kD: case Anchor::kLD: case Anchor::kRD: base = r.y + desc; break;
    default: break;
  }
  out.width = w;
  out.ink = {x0, base - desc, x0 + w, base + asc};
  out.clip = out.ink.inflated(m, m);
  out.baseline = {x0, base};
  return out;
}

TextBox node_box(const NodeInstance& n, const MetricsTable& metrics, const RenderConfig& cfg,
                 Warnings* warnings) {
  return node_box(n.pos, n.text, n.anchor, metrics, cfg, warnings);
}

ResolvedArrow clip_to_boxes(Vec2 from, Vec2 to, const ArrowStyle& style,
                            const std::optional<Box>& source,
                            const std::optional<Box>& target) {
  const Vec2 d = to - from;
  double t0 = 0.0, t1 = 1.0;
  if (source) {
    if (auto t = slab(*source, from, d)) t0 = std::max(t0, t->second);
  }
  if (target) {
    if (auto t = slab(*target, from, d)) t1 = std::min(t1, t->first);
  }
  if (!(t0 < t1)) {
    throw CompileError(ErrorKind::kNodesOverlap,
                       "node boxes overlap; no part of the arrow is visible");
  }
  ResolvedArrow r;
  r.from = from + d * t0;
  r.to = from + d * t1;
  r.style = style;
  return r;
}

std::optional<ResolvedLabel> place_label(const ResolvedArrow& r, std::string_view text,
                                         LabelSide side, const MetricsTable& metrics,
                                         const RenderConfig& cfg, Warnings* warnings) {
  if (side == LabelSide::kNone || text.empty()) return std::nullopt;
  const double w = metrics.measure(text, cfg, warnings);
  if (side == LabelSide::kOnShaft && w == 0.0) return std::nullopt;
  ResolvedLabel l;
  l.text = std::string(text);
  l.side = side;
  l.width = w;
  l.height = (metrics.ascent() + metrics.descent()) * cfg.em_pt / 1000.0;
  l.attach = (r.from + r.to) * 0.5;
  if (side == LabelSide::kOnShaft) {
    l.anchor = l.center = l.attach;
    Box b{l.center.x - w / 2, l.center.y - l.height / 2, l.center.x + w / 2,
          l.center.y + l.height / 2};
    l.backing = b.inflated(kMaskPadX / 2, kMaskPadY / 2);
    return l;
  }
  l.side_vector = side_vector(r.to - r.from, side);
  l.anchor = l.attach + l.side_vector * (l.height / 2 + cfg.label_gap_pt);
  // Push the box clear of the shaft sideways as well: on a vertical arrow the
  // label's half-width faces the shaft.
  l.center = l.anchor + l.side_vector * (std::abs(l.side_vector.x) * w / 2);
  return l;
}

ResolvedArrow offset_parallel(ResolvedArrow r, double offset_pt) {
  if (offset_pt == 0.0) return r;
  Vec2 n = (r.to - r.from).normalized().left_normal() * offset_pt;
  r.from = r.from + n;
  r.to = r.to + n;
  if (r.loop) {
    r.c1 = r.c1 + n;
    r.c2 = r.c2 + n;
  }
  return r;
}

namespace {

Box label_box(const ResolvedLabel& l) {
  if (l.backing) return *l.backing;
  return {l.center.x - l.width / 2, l.center.y - l.height / 2, l.center.x + l.width / 2,
          l.center.y + l.height / 2};
}

void grow(std::optional<Box>& bounds, const Box& b) {
  bounds = bounds ? bounds->united(b) : b;
}

void grow(std::optional<Box>& bounds, Vec2 p) { grow(bounds, Box{p.x, p.y, p.x, p.y}); }

ResolvedArrow resolve_loop(const ArrowInstance& a, const MetricsTable& metrics,
                           const RenderConfig& cfg, Warnings* warnings) {
  TextBox box = node_box(a.from, a.source_extent ? a.source_extent->text : "",
                         a.source_extent ? a.source_extent->anchor : Anchor::kCenter,
                         metrics, cfg, warnings);
  const Vec2 out = resolve_compass(a.loop->out), in = resolve_compass(a.loop->in);
  const Vec2 c = to_physical(a.from, cfg);
  const double reach = cfg.loop_reach_em * cfg.em_pt;
  ResolvedArrow r;
  r.loop = true;
  r.style = a.style;
  r.from = exit_point(box.clip, c, out);
  r.to = exit_point(box.clip, c, in);
  r.c1 = r.from + out * reach;
  r.c2 = r.to + in * reach;
  return r;
}

}  // namespace

Layout layout(const Scene& scene, const MetricsTable& metrics, const RenderConfig& cfg,
              Warnings* warnings) {
  Layout out;
  std::optional<Box> bounds;
  for (const auto& n : scene.nodes) {
    ResolvedNode rn{n, node_box(n, metrics, cfg, warnings)};
    grow(bounds, rn.box.ink);
    out.nodes.push_back(std::move(rn));
  }
  for (const auto& a : scene.arrows) {
    ResolvedArrow r;
    if (a.loop) {
      r = resolve_loop(a, metrics, cfg, warnings);
      grow(bounds, r.c1);
      grow(bounds, r.c2);
    } else {
      std::optional<Box> src, dst;
      if (a.source_extent) {
        src = node_box(a.from, a.source_extent->text, a.source_extent->anchor, metrics, cfg,
                       warnings).clip;
      }
      if (a.target_extent) {
        dst = node_box(a.to, a.target_extent->text, a.target_extent->anchor, metrics, cfg,
                       warnings).clip;
      }
      r = clip_to_boxes(to_physical(a.from, cfg), to_physical(a.to, cfg), a.style, src, dst);
      r = offset_parallel(r, a.style.parallel_offset_pt);
      const LogicalPoint d = a.to - a.from;
      auto label = place_label(r, a.label, label_side(a.label_rule, d.x, d.y), metrics, cfg,
                               warnings);
      if (label) {
        grow(bounds, label_box(*label));
        r.labels.push_back(std::move(*label));
      }
    }
    grow(bounds, r.from);
    grow(bounds, r.to);
    out.arrows.push_back(std::move(r));
  }

  double cursor = bounds ? bounds->x1 + kInlineGap : 0.0;
  for (const auto& f : scene.inlines) {
    const Vec2 origin{cursor, f.raise_pt};
    double right = cursor;
    for (const auto& ia : f.arrows) {
      Vec2 end = origin + to_physical(ia.to, cfg) * f.unit_scale;
      ResolvedArrow r = clip_to_boxes(origin, end, ia.style, std::nullopt, std::nullopt);
      r = offset_parallel(r, ia.style.parallel_offset_pt);
      r.tip_scale = f.tip_scale;
      const std::pair<const std::string*, LabelSide> labels[] = {
          {&ia.sup, LabelSide::kLeft}, {&ia.sub, LabelSide::kRight},
          {&ia.mid, LabelSide::kOnShaft}};
      for (const auto& [text, side] : labels) {
        if (auto l = place_label(r, *text, side, metrics, cfg, warnings)) {
          grow(bounds, label_box(*l));
          r.labels.push_back(std::move(*l));
        }
      }
      grow(bounds, r.from);
      grow(bounds, r.to);
      right = std::max({right, r.from.x, r.to.x});
      out.arrows.push_back(std::move(r));
    }
    cursor = right + kInlineGap;
  }
  out.bounds = bounds.value_or(Box{});
  return out;
}

}  // namespace diagxy
