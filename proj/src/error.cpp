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

#include "diagxy/error.hpp"

namespace diagxy {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnbalancedGroup: return "UnbalancedGroup";
    case ErrorKind::kUnknownConstructor: return "UnknownConstructor";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kArityError: return "ArityError";
    case ErrorKind::kUnsupportedArrowSpec: return "UnsupportedArrowSpec";
    case ErrorKind::kBadDirection: return "BadDirection";
    case ErrorKind::kDegenerateArrow: return "DegenerateArrow";
    case ErrorKind::kDegenerateLoop: return "DegenerateLoop";
    case ErrorKind::kMaskOutOfRange: return "MaskOutOfRange";
    case ErrorKind::kUnknownNode: return "UnknownNode";
    case ErrorKind::kDuplicateNode: return "DuplicateNode";
    case ErrorKind::kNodesOverlap: return "NodesOverlap";
    case ErrorKind::kMetricsFile: return "MetricsFileError";
    case ErrorKind::kOutsideFigure: return "OutsideFigure";
    case ErrorKind::kUnknownGlyph: return "UnknownGlyph";
  }
  return "Unknown";
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string out;
  if (d.pos.line > 0) {
    out += std::to_string(d.pos.line) + ":" + std::to_string(d.pos.col) + ": ";
  }
  out += "[";
  out += to_string(d.kind);
  out += "] ";
  if (!d.constructor.empty()) out += d.constructor + ": ";
  out += d.message;
  return out;
}

CompileError::CompileError(ErrorKind kind, std::string message, SourcePos pos,
                           std::string constructor)
    : std::runtime_error(format_diagnostic(
          Diagnostic{kind, pos, constructor, message})),
      diag_{kind, pos, std::move(constructor), std::move(message)} {}

CompileError CompileError::with_context(SourcePos pos,
                                        std::string_view constructor) const {
  SourcePos p = diag_.pos.line > 0 ? diag_.pos : pos;
  std::string c = diag_.constructor.empty() ? std::string(constructor)
                                            : diag_.constructor;
  return CompileError(diag_.kind, diag_.message, p, std::move(c));
}

}  // namespace diagxy
