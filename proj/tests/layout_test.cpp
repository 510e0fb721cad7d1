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

#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "diagxy/error.hpp"
#include "diagxy/layout.hpp"
#include "diagxy/lower.hpp"
#include "diagxy/parser.hpp"

namespace diagxy {
namespace {

const MetricsTable& M() {
  static const MetricsTable m = MetricsTable::builtin();
  return m;
}

Layout lay(const std::string& src, const RenderConfig& cfg = {}) {
  auto stmts = parse_source(src);
  return layout(lower(stmts, M(), cfg), M(), cfg);
}

TEST(Layout, NodeBox) {
  RenderConfig cfg;
  TextBox b = node_box({0, 0}, "A", Anchor::kCenter, M(), cfg);
  EXPECT_DOUBLE_EQ(b.ink.width(), 5.0);
  EXPECT_DOUBLE_EQ(b.clip.width(), 11.0);
  EXPECT_DOUBLE_EQ(b.ink.height(), 10.0);
  EXPECT_DOUBLE_EQ(b.ink.x0, -2.5);
  EXPECT_DOUBLE_EQ(b.baseline.y, -2.5);
  EXPECT_DOUBLE_EQ(b.ink.y0, -5.5);
  EXPECT_DOUBLE_EQ(b.ink.y1, 4.5);

  TextBox e = node_box({500, 0}, "", Anchor::kCenter, M(), cfg);
  EXPECT_DOUBLE_EQ(e.clip.width(), 6.0);
  EXPECT_DOUBLE_EQ(e.clip.height(), 6.0);
  EXPECT_EQ(e.clip.center(), (Vec2{50, 0}));

  TextBox l = node_box({0, 0}, "AB", Anchor::kL, M(), cfg);
  EXPECT_DOUBLE_EQ(l.ink.x0, 0.0);
  EXPECT_DOUBLE_EQ(l.ink.x1, 10.0);
  TextBox r = node_box({0, 0}, "AB", Anchor::kR, M(), cfg);
  EXPECT_DOUBLE_EQ(r.ink.x1, 0.0);
  TextBox u = node_box({0, 0}, "AB", Anchor::kU, M(), cfg);
  EXPECT_DOUBLE_EQ(u.ink.y1, 0.0);
  TextBox d = node_box({0, 0}, "AB", Anchor::kD, M(), cfg);
  EXPECT_DOUBLE_EQ(d.ink.y0, 0.0);
}

TEST(Layout, ClipSquareTopEdge) {
  Layout l = lay("\\square[A`B`C`D;f`g`h`k]");
  // arrows are drawn bottom, left, top, right
  const ResolvedArrow& top = l.arrows[2];
  EXPECT_NEAR(top.from.x, 5.5, 1e-12);
  EXPECT_NEAR(top.to.x, 44.5, 1e-12);
  EXPECT_NEAR(top.from.y, 50.0, 1e-12);
  const ResolvedArrow& left = l.arrows[1];
  EXPECT_NEAR(left.from.y, 50.0 - 8.5, 1e-12);
  EXPECT_NEAR(left.to.y, 7.5, 1e-12);
}

TEST(Layout, DistanceToBoundary) {
  Box b{0, 0, 10, 4};
  EXPECT_DOUBLE_EQ(distance_to_boundary(b, {0, 2}), 0.0);
  EXPECT_DOUBLE_EQ(distance_to_boundary(b, {5, 1}), 1.0);
  EXPECT_DOUBLE_EQ(distance_to_boundary(b, {13, 8}), 5.0);
}

TEST(Layout, ClipEdges) {
  ArrowStyle st;
  ResolvedArrow bare = clip_to_boxes({0, 0}, {50, 0}, st, std::nullopt, std::nullopt);
  EXPECT_EQ(bare.from, (Vec2{0, 0}));
  EXPECT_EQ(bare.to, (Vec2{50, 0}));
  Box b{-3, -3, 3, 3};
  try {
    clip_to_boxes({0, 0}, {1, 0}, st, b, Box{-2, -3, 4, 3});
    ADD_FAILURE();
  } catch (const CompileError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNodesOverlap);
  }
  ResolvedArrow diag = clip_to_boxes({0, 0}, {40, 30}, st, b, Box{37, 27, 43, 33});
  EXPECT_NEAR(distance_to_boundary(b, diag.from), 0.0, 1e-12);
  EXPECT_NEAR(diag.from.x, 3.0, 1e-12);
  EXPECT_NEAR(diag.from.y, 2.25, 1e-12);
  EXPECT_NEAR(diag.to.x, 37.0, 1e-12);
}

TEST(Layout, NodesOverlapThroughPipeline) {
  try {
    lay("\\morphism<50,0>[A`B;f]");
    ADD_FAILURE();
  } catch (const CompileError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNodesOverlap);
  }
}

TEST(Layout, LabelAboveRightward) {
  Layout l = lay("\\morphism|a|[A`B;f]");
  ASSERT_EQ(l.arrows[0].labels.size(), 1u);
  const auto& lab = l.arrows[0].labels[0];
  EXPECT_EQ(lab.side, LabelSide::kLeft);
  EXPECT_NEAR(lab.attach.x, 25.0, 1e-12);
  EXPECT_NEAR(lab.attach.y, 0.0, 1e-12);
  EXPECT_NEAR(lab.center.x, 25.0, 1e-12);
  EXPECT_NEAR(lab.center.y, 5.0 + 2.0, 1e-12);  // half height + gap
  EXPECT_NEAR(lab.side_vector.y, 1.0, 1e-12);
}

TEST(Layout, LabelEastOfDownward) {
  Layout l = lay("\\morphism|r|<0,-500>[A`B;f]");
  const auto& lab = l.arrows[0].labels[0];
  EXPECT_GT(lab.center.x, lab.attach.x);
  Layout w = lay("\\morphism|l|<0,-500>[A`B;f]");
  EXPECT_LT(w.arrows[0].labels[0].center.x, w.arrows[0].labels[0].attach.x);
}

TEST(Layout, OnShaftLabel) {
  Layout l = lay("\\morphism|m|[A`B;f]");
  const auto& lab = l.arrows[0].labels[0];
  EXPECT_EQ(lab.side, LabelSide::kOnShaft);
  EXPECT_EQ(lab.center, lab.attach);
  ASSERT_TRUE(lab.backing);
  EXPECT_NEAR(lab.backing->width(), 5.0 + 1.0, 1e-12);
  EXPECT_NEAR(lab.backing->height(), 10.0 + 4.0, 1e-12);
  Layout e = lay("\\morphism|m|[A`B;]");
  EXPECT_TRUE(e.arrows[0].labels.empty());
  Layout z = lay("\\morphism|m|[A`B;{}]");
  EXPECT_TRUE(z.arrows[0].labels.empty());
}

TEST(Layout, OffsetParallel) {
  ResolvedArrow r;
  r.from = {0, 0};
  r.to = {30, 40};
  ResolvedArrow o = offset_parallel(r, 2.5);
  EXPECT_NEAR((o.to - o.from).length(), 50.0, 1e-12);
  EXPECT_NEAR(o.from.x, -2.0, 1e-12);
  EXPECT_NEAR(o.from.y, 1.5, 1e-12);
  EXPECT_EQ(offset_parallel(r, 0.0).from, r.from);
  Layout two = lay("\\two");
  ASSERT_EQ(two.arrows.size(), 2u);
  EXPECT_NEAR(two.arrows[0].from.y - two.arrows[1].from.y, 5.0, 1e-12);
}

TEST(Layout, Loop) {
  RenderConfig cfg;
  Layout l = lay("\\Loop(0,0)X(ul,ur)", cfg);
  ASSERT_EQ(l.arrows.size(), 1u);
  const auto& r = l.arrows[0];
  EXPECT_TRUE(r.loop);
  EXPECT_GT(r.c1.y, r.from.y);
  EXPECT_GT(r.c2.y, r.to.y);
  EXPECT_LT(r.from.x, 0.0);
  EXPECT_GT(r.to.x, 0.0);
  EXPECT_NEAR((r.c1 - r.from).length(), cfg.loop_reach_em * cfg.em_pt, 1e-12);
  Box clip = node_box({0, 0}, "X", Anchor::kCenter, M(), cfg).clip;
  EXPECT_NEAR(distance_to_boundary(clip, r.from), 0.0, 1e-12);
}

TEST(Layout, InlineFragmentsFollowFigure) {
  Layout l = lay("\\morphism[A`B;f]\\to\\epi");
  ASSERT_EQ(l.arrows.size(), 3u);
  EXPECT_GT(l.arrows[1].from.x, 50.0);
  EXPECT_GT(l.arrows[2].from.x, l.arrows[1].to.x);
  EXPECT_NEAR(l.arrows[1].to.x - l.arrows[1].from.x, 15.0, 1e-12);
  Layout r = lay("\\rlimto");
  EXPECT_DOUBLE_EQ(r.arrows[0].tip_scale, 0.8);
  EXPECT_DOUBLE_EQ(r.arrows[0].from.y, 2.0);
}

TEST(Layout, BoundsCoverEverything) {
  Layout l = lay("\\square[A`B`C`D;f`g`h`k]");
  for (const auto& n : l.nodes) {
    EXPECT_TRUE(l.bounds.contains({n.box.ink.x0, n.box.ink.y0}));
    EXPECT_TRUE(l.bounds.contains({n.box.ink.x1, n.box.ink.y1}));
  }
}

}  // namespace
}  // namespace diagxy
