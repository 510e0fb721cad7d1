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

#include "diagxy/statement.hpp"

namespace diagxy {
namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string ints(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string point(LogicalPoint p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string block(const Block& b, bool with_origin) {
  std::string out;
  if (with_origin) out += point(b.origin);
  out += "|" + b.placements + "|";
  out += "/" + join(b.arrow_specs, '`') + "/";
  out += "<" + ints(b.spans) + ">";
  out += "[" + join(b.nodes, '`') + ";" + join(b.labels, '`') + "]";
  return out;
}

Block main_block(const Statement& s) {
  return {s.origin, s.placements, s.arrow_specs, s.spans, s.nodes, s.labels};
}

bool has_fixed_spec(InlineKind k) {
  switch (k) {
    case InlineKind::kTo: case InlineKind::kTwo: case InlineKind::kThree: return false;
    default: return true;
  }
}

}  // namespace

std::string keyword_of(const Statement& s) {
  switch (s.constructor) {
    case Constructor::kMorphism: return "\\morphism";
    case Constructor::kVect: return "\\vect";
    case Constructor::kSquare: return "\\square";
    case Constructor::kAutoSquare: return "\\Square";
    case Constructor::kDiamond: return "\\Diamond";
    case Constructor::kTriangle:
      return std::string("\\") + s.extras.triangle_kind + "triangle";
    case Constructor::kTrianglePair:
      return std::string("\\") + s.extras.triangle_kind + "trianglepair";
    case Constructor::kPullback: return "\\pullback";
    case Constructor::kHSquares: return "\\hsquares";
    case Constructor::kHAutoSquares: return "\\hSquares";
    case Constructor::kVSquares: return "\\vsquares";
    case Constructor::kVAutoSquares: return "\\vSquares";
    case Constructor::kCube: return "\\cube";
    case Constructor::kGrid3x3: return "\\iiixiii";
    case Constructor::kGrid3x2: return "\\iiixii";
    case Constructor::kPlace: return "\\place";
    case Constructor::kNode: return "\\node";
    case Constructor::kNamedArrow: return "\\arrow";
    case Constructor::kLoop: return "\\Loop";
    case Constructor::kInlineLoop: return "\\iloop";
    case Constructor::kInlineArrow:
      return "\\" + std::string(to_string(s.extras.inline_kind));
    case Constructor::kBeginFig: return "\\bfig";
    case Constructor::kEndFig: return "\\efig";
  }
  return "\\?";
}

std::string print(const Statement& s) {
  std::string out = keyword_of(s);
  const auto& x = s.extras;
  switch (s.constructor) {
    case Constructor::kVect:
      out += point(s.origin) + "/" + s.arrow_specs.at(0) + "/<" + ints(s.spans) + ">";
      break;
    case Constructor::kPullback:
      out += block(main_block(s), true);
      out += "|" + x.trident.placements + "|/" + join(x.trident.arrow_specs, '`') + "/<" +
             ints(x.trident.spans) + ">[" + join(x.trident.nodes, '`') + ";" +
             join(x.trident.labels, '`') + "]";
      break;
    case Constructor::kCube:
      out += block(main_block(s), true) + block(x.inner, true);
      out += "|" + x.connectors.placements + "|/" + join(x.connectors.arrow_specs, '`') +
             "/[" + join(x.connectors.labels, '`') + "]";
      break;
    case Constructor::kGrid3x3:
    case Constructor::kGrid3x2: {
      Block b = main_block(s);
      out += point(b.origin) + "|" + b.placements + "|/" + join(b.arrow_specs, '`') +
             "/<" + ints(b.spans) + ">{" + std::to_string(x.mask) + "}<" +
             ints(x.border) + ">[" + join(b.nodes, '`') + ";" + join(b.labels, '`') + "]";
      break;
    }
    case Constructor::kPlace:
      out += "[" + std::string(to_string(x.anchor)) + "]" + point(s.origin) + "[" +
             s.nodes.at(0) + "]";
      break;
    case Constructor::kNode:
      out += " " + x.names.at(0) + point(s.origin) + "[" + s.nodes.at(0) + "]";
      break;
    case Constructor::kNamedArrow:
      out += "|" + s.placements + "|/" + s.arrow_specs.at(0) + "/[" + join(x.names, '`') +
             ";" + join(s.labels, '`') + "]";
      break;
    case Constructor::kLoop:
      out += point(s.origin) + "{" + s.nodes.at(0) + "}(" + x.out_dir + "," + x.in_dir + ")";
      break;
    case Constructor::kInlineLoop:
      out += "{" + s.nodes.at(0) + "}(" + x.out_dir + "," + x.in_dir + ")";
      break;
    case Constructor::kInlineArrow:
      if (x.inline_kind == InlineKind::kTwoar) {
        out += "(" + ints(s.spans) + ")";
        break;
      }
      if (x.inline_kind == InlineKind::kRlimto || x.inline_kind == InlineKind::kLlimto) break;
      if (!has_fixed_spec(x.inline_kind)) out += "/" + join(s.arrow_specs, '`') + "/";
      out += "<" + ints(s.spans) + ">";
      out += "^{" + s.labels.at(0) + "}";
      if (x.inline_kind == InlineKind::kThree) {
        out += "|{" + s.labels.at(1) + "}_{" + s.labels.at(2) + "}";
      } else {
        out += "_{" + s.labels.at(1) + "}";
      }
      break;
    case Constructor::kBeginFig:
    case Constructor::kEndFig:
      break;
    default:
      out += block(main_block(s), true);
  }
  return out;
}

}  // namespace diagxy
