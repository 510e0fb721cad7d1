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

#include "diagxy/geometry.hpp"

#include <stdexcept>

namespace diagxy {

RenderConfig RenderConfig::for_em(double em_pt) {
  RenderConfig cfg;
  cfg.em_pt = em_pt;
  cfg.axis_pt = 0.25 * em_pt;
  return cfg;
}

void RenderConfig::validate() const {
  if (!(em_pt > 0.0)) throw std::invalid_argument("em_pt must be positive");
  if (!(object_margin_pt >= 0.0))
    throw std::invalid_argument("object_margin_pt must be non-negative");
  if (!(axis_pt >= 0.0)) throw std::invalid_argument("axis_pt must be non-negative");
  if (!(label_scale > 0.0)) throw std::invalid_argument("label_scale must be positive");
}

Vec2 to_physical(LogicalPoint p, const RenderConfig& cfg) {
  return {static_cast<double>(p.x) * 0.01 * cfg.em_pt,
          static_cast<double>(p.y) * 0.01 * cfg.em_pt};
}

}  // namespace diagxy
