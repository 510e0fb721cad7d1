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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace diagxy {

enum class ErrorKind {
  kUnbalancedGroup,
  kUnknownConstructor,
  kParseError,
  kArityError,
  kUnsupportedArrowSpec,
  kBadDirection,
  kDegenerateArrow,
  kDegenerateLoop,
  kMaskOutOfRange,
  kUnknownNode,
  kDuplicateNode,
  kNodesOverlap,
  kMetricsFile,
  kOutsideFigure,
  kUnknownGlyph,  // warning unless --strict
};

std::string_view to_string(ErrorKind kind);

// 1-based; line 0 means "no position known".
struct SourcePos {
  int line = 0;
  int col = 0;
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

struct Diagnostic {
  ErrorKind kind;
  SourcePos pos;
  std::string constructor;
  std::string message;
};

// Renders as "line:col: [Kind] \ctor: message" (position and constructor
// omitted when unknown).
std::string format_diagnostic(const Diagnostic& d);

class CompileError : public std::runtime_error {
 public:
  CompileError(ErrorKind kind, std::string message, SourcePos pos = {},
               std::string constructor = {});

  ErrorKind kind() const { return diag_.kind; }
  const SourcePos& pos() const { return diag_.pos; }
  const std::string& constructor() const { return diag_.constructor; }
  const std::string& message() const { return diag_.message; }
  const Diagnostic& diagnostic() const { return diag_; }

  // Lowering attaches the statement context to errors raised by helpers that
  // do not know where they were called from.
  CompileError with_context(SourcePos pos, std::string_view constructor) const;

 private:
  Diagnostic diag_;
};

using Warnings = std::vector<Diagnostic>;

}  // namespace diagxy
