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

#include "diagxy/scene_json.hpp"

namespace diagxy {
namespace {

using nlohmann::ordered_json;

ordered_json point(LogicalPoint p) { return {{"x", p.x}, {"y", p.y}}; }

ordered_json style(const ArrowStyle& s) {
  return {{"tail", to_string(s.tail)},
          {"shaft", to_string(s.shaft)},
          {"head", to_string(s.head)},
          {"mid", to_string(s.mid)},
          {"parallel_offset_pt", s.parallel_offset_pt},
          {"reversed", s.reversed}};
}

ordered_json extent(const std::optional<NodeRef>& r) {
  if (!r) return nullptr;
  return {{"text", r->text}, {"anchor", to_string(r->anchor)}};
}

}  // namespace

ordered_json scene_to_json(const Scene& scene) {
  ordered_json nodes = ordered_json::array();
  for (const auto& n : scene.nodes) {
    nodes.push_back({{"pos", point(n.pos)},
                     {"text", n.text},
                     {"anchor", to_string(n.anchor)},
                     {"phantom", n.phantom}});
  }
  ordered_json arrows = ordered_json::array();
  for (const auto& a : scene.arrows) {
    ordered_json loop = nullptr;
    if (a.loop) loop = {{"out", a.loop->out}, {"in", a.loop->in}};
    arrows.push_back({{"from", point(a.from)},
                      {"to", point(a.to)},
                      {"style", style(a.style)},
                      {"label", a.label},
                      {"label_rule", to_string(a.label_rule)},
                      {"source_extent", extent(a.source_extent)},
                      {"target_extent", extent(a.target_extent)},
                      {"loop", loop}});
  }
  ordered_json inlines = ordered_json::array();
  for (const auto& f : scene.inlines) {
    ordered_json shafts = ordered_json::array();
    for (const auto& ia : f.arrows) {
      shafts.push_back({{"to", point(ia.to)},
                        {"style", style(ia.style)},
                        {"sup", ia.sup},
                        {"sub", ia.sub},
                        {"mid", ia.mid}});
    }
    inlines.push_back({{"kind", to_string(f.kind)},
                       {"unit_scale", f.unit_scale},
                       {"tip_scale", f.tip_scale},
                       {"raise_pt", f.raise_pt},
                       {"arrows", shafts}});
  }
  ordered_json doc;
  doc["nodes"] = std::move(nodes);
  doc["arrows"] = std::move(arrows);
  doc["inlines"] = std::move(inlines);
  return doc;
}

std::string emit_scene(const Scene& scene) {
  return scene_to_json(scene).dump(2, ' ', false) + "\n";
}

}  // namespace diagxy
