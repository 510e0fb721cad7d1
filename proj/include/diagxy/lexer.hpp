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

#include <string>
#include <string_view>
#include <vector>

#include "diagxy/error.hpp"

namespace diagxy {

enum class TokenKind {
  kKeyword,  // \square, \to, ... (text holds the name without backslash)
  kGroup,    // delimited group; text holds the inner source verbatim
  kRaw,      // undelimited run such as a node name or a grid mask
  kScript,   // ^X, _X, or |X after \three; text holds the argument
  kEnd,
};

enum class GroupKind { kParen, kPipe, kSlash, kAngle, kBracket, kBrace };

char opener(GroupKind g);
char closer(GroupKind g);

struct Token {
  TokenKind kind = TokenKind::kEnd;
  GroupKind group = GroupKind::kParen;
  char script = 0;  // '^', '_' or '|' for kScript
  std::string text;
  SourcePos pos;
};

// True for every backslash word that starts a statement.
bool is_constructor_keyword(std::string_view name);

// Splits a document into tokens. '%' comments out the rest of a line. Groups
// close at the first matching delimiter outside braces, so braces inside a
// group are kept verbatim. Throws CompileError(kUnbalancedGroup) for an
// unterminated group or brace and kUnknownConstructor for a top-level
// backslash word that is not a constructor.
std::vector<Token> tokenize(std::string_view source);

// Splits group text at top-level occurrences of `sep` (outside braces).
std::vector<std::string> split_top_level(std::string_view text, char sep);

// Removes one enclosing brace pair when the whole string is a single group.
std::string strip_braces(std::string_view text);

}  // namespace diagxy
