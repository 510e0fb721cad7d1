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

#include "diagxy/compiler.hpp"

#include <algorithm>
#include <optional>

#include "diagxy/layout.hpp"
#include "diagxy/lower.hpp"
#include "diagxy/parser.hpp"
#include "diagxy/scene_json.hpp"
#include "diagxy/svg.hpp"

namespace diagxy {
namespace {

bool standalone_ok(Constructor c) {
  return c == Constructor::kInlineArrow || c == Constructor::kInlineLoop;
}

Warnings unique(const Warnings& in) {
  Warnings out;
  for (const auto& w : in) {
    bool dup = std::any_of(out.begin(), out.end(), [&](const Diagnostic& o) {
      return o.kind == w.kind && o.message == w.message;
    });
    if (!dup) out.push_back(w);
  }
  return out;
}

}  // namespace

CompileResult compile(std::string_view source, const MetricsTable& metrics,
                      const CompileOptions& options) {
  const RenderConfig& cfg = options.cfg;
  CompileResult result;
  Warnings warnings;
  std::vector<Statement> statements = parse_source(source);

  auto finish = [&](Scene scene) {
    Output out;
    Layout lay = layout(scene, metrics, cfg, &warnings);
    out.scene_text = emit_scene(scene);
    out.svg = emit_svg(lay, cfg);
    out.scene = std::move(scene);
    result.outputs.push_back(std::move(out));
  };

  const bool has_figures = std::any_of(statements.begin(), statements.end(), [](const auto& s) {
    return s.constructor == Constructor::kBeginFig;
  });

  if (!has_figures) {
    LoweringContext ctx(metrics, cfg, &warnings);
    for (const auto& s : statements) {
      if (s.constructor == Constructor::kEndFig) {
        throw CompileError(ErrorKind::kParseError, "\\efig without \\bfig", s.pos, "\\efig");
      }
      ctx.lower(s);
    }
    finish(ctx.scene());
  } else {
    std::optional<LoweringContext> figure;
    SourcePos opened;
    for (const auto& s : statements) {
      if (s.constructor == Constructor::kBeginFig) {
        if (figure) {
          throw CompileError(ErrorKind::kParseError, "\\bfig inside an open figure", s.pos,
                             "\\bfig");
        }
        figure.emplace(metrics, cfg, &warnings);
        opened = s.pos;
      } else if (s.constructor == Constructor::kEndFig) {
        if (!figure) {
          throw CompileError(ErrorKind::kParseError, "\\efig without \\bfig", s.pos,
                             "\\efig");
        }
        finish(figure->scene());
        figure.reset();
      } else if (figure) {
        figure->lower(s);
      } else if (standalone_ok(s.constructor)) {
        LoweringContext one(metrics, cfg, &warnings);
        one.lower(s);
        finish(one.scene());
      } else {
        throw CompileError(ErrorKind::kOutsideFigure,
                           keyword_of(s) + " must appear between \\bfig and \\efig", s.pos,
                           keyword_of(s));
      }
    }
    if (figure) {
      throw CompileError(ErrorKind::kUnbalancedGroup, "\\bfig is never closed by \\efig",
                         opened, "\\bfig");
    }
  }

  result.warnings = unique(warnings);
  if (options.strict && !result.warnings.empty()) {
    const Diagnostic& w = result.warnings.front();
    throw CompileError(w.kind, w.message, w.pos, w.constructor);
  }
  return result;
}

}  // namespace diagxy
