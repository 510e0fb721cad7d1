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

#include "diagxy/scene.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

namespace diagxy {

std::string_view to_string(Anchor a) {
  switch (a) {
    case Anchor::kCenter: return "center";
    case Anchor::kL: return "l";
    case Anchor::kR: return "r";
    case Anchor::kU: return "u";
    case Anchor::kD: return "d";
    case Anchor::kLU: return "lu";
    case Anchor::kLD: return "ld";
    case Anchor::kRU: return "ru";
    case Anchor::kRD: return "rd";
  }
  return "center";
}

std::optional<Anchor> parse_anchor(std::string_view s) {
  std::string t;
  for (char c : s) {
    if (c == ' ') continue;
    t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (t.empty() || t == "c" || t == "center") return Anchor::kCenter;
  if (t == "l") return Anchor::kL;
  if (t == "r") return Anchor::kR;
  if (t == "u") return Anchor::kU;
  if (t == "d") return Anchor::kD;
  if (t == "lu" || t == "ul") return Anchor::kLU;
  if (t == "ld" || t == "dl") return Anchor::kLD;
  if (t == "ru" || t == "ur") return Anchor::kRU;
  if (t == "rd" || t == "dr") return Anchor::kRD;
  return std::nullopt;
}

bool same_node(const NodeInstance& a, const NodeInstance& b) {
  return a.pos == b.pos && a.text == b.text && a.anchor == b.anchor;
}

std::string_view to_string(LabelRule r) {
  switch (r) {
    case LabelRule::kL: return "l";
    case LabelRule::kM: return "m";
    case LabelRule::kR: return "r";
    case LabelRule::kA: return "a";
    case LabelRule::kB: return "b";
    case LabelRule::kNone: return "none";
  }
  return "none";
}

LabelRule label_rule_for(char placement) {
  switch (placement) {
    case 'l': return LabelRule::kL;
    case 'm': return LabelRule::kM;
    case 'r': return LabelRule::kR;
    case 'a': return LabelRule::kA;
    case 'b': return LabelRule::kB;
    default: return LabelRule::kNone;
  }
}

std::string_view to_string(InlineKind k) {
  switch (k) {
    case InlineKind::kTo: return "to";
    case InlineKind::kTwo: return "two";
    case InlineKind::kThree: return "three";
    case InlineKind::kTwoar: return "twoar";
    case InlineKind::kMon: return "mon";
    case InlineKind::kEpi: return "epi";
    case InlineKind::kToleft: return "toleft";
    case InlineKind::kMonleft: return "monleft";
    case InlineKind::kEpileft: return "epileft";
    case InlineKind::kRlimto: return "rlimto";
    case InlineKind::kLlimto: return "llimto";
  }
  return "to";
}

Scene dedupe_nodes(Scene scene) {
  using Key = std::tuple<std::int64_t, std::int64_t, std::string, Anchor>;
  std::map<Key, std::size_t> first;
  std::vector<NodeInstance> kept;
  kept.reserve(scene.nodes.size());
  for (auto& n : scene.nodes) {
    Key key{n.pos.x, n.pos.y, n.text, n.anchor};
    auto [it, inserted] = first.emplace(std::move(key), kept.size());
    if (inserted) {
      kept.push_back(std::move(n));
    } else if (!n.phantom) {
      kept[it->second].phantom = false;
    }
  }
  scene.nodes = std::move(kept);
  return scene;
}

}  // namespace diagxy
