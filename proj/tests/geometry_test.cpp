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
#include <stdexcept>

#include "diagxy/geometry.hpp"

namespace diagxy {
namespace {

TEST(Geometry, LogicalToPhysical) {
  RenderConfig cfg;
  Vec2 p = to_physical({500, 0}, cfg);
  EXPECT_DOUBLE_EQ(p.x, 50.0);
  EXPECT_DOUBLE_EQ(p.y, 0.0);
  p = to_physical({-250, 1000}, RenderConfig::for_em(12.0));
  EXPECT_DOUBLE_EQ(p.x, -30.0);
  EXPECT_DOUBLE_EQ(p.y, 120.0);
}

TEST(Geometry, Defaults) {
  RenderConfig cfg;
  EXPECT_DOUBLE_EQ(cfg.em_pt, 10.0);
  EXPECT_DOUBLE_EQ(cfg.object_margin_pt, 3.0);
  EXPECT_DOUBLE_EQ(cfg.axis_pt, 2.5);
  EXPECT_DOUBLE_EQ(cfg.loop_reach_em, 2.0);
  EXPECT_DOUBLE_EQ(cfg.label_scale, 1.0);
  EXPECT_DOUBLE_EQ(RenderConfig::for_em(8.0).axis_pt, 2.0);
  EXPECT_DOUBLE_EQ(cfg.unit_pt(), 0.1);
}

TEST(Geometry, ValidateRejectsBadConfigs) {
  RenderConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.em_pt = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = RenderConfig{};
  cfg.object_margin_pt = -1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = RenderConfig{};
  cfg.label_scale = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Geometry, VectorOps) {
  Vec2 v{3, 4};
  EXPECT_DOUBLE_EQ(v.length(), 5.0);
  EXPECT_DOUBLE_EQ(v.normalized().x, 0.6);
  EXPECT_EQ(v.left_normal(), (Vec2{-4, 3}));
  EXPECT_DOUBLE_EQ(dot(v, v.left_normal()), 0.0);
  EXPECT_EQ(Vec2{}.normalized(), Vec2{});
  EXPECT_EQ((LogicalPoint{1, 2} + LogicalPoint{3, -4}), (LogicalPoint{4, -2}));
}

}  // namespace
}  // namespace diagxy
