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

#include <span>
#include <string_view>
#include <vector>

#include "diagxy/lexer.hpp"
#include "diagxy/statement.hpp"

namespace diagxy {

// Optional arguments follow each constructor's fixed order; any of them may
// be omitted, but one given out of order is a ParseError, as is a required
// argument that is missing. Wrong field counts raise kArityError naming the
// expected and actual counts.
std::vector<Statement> parse(std::span<const Token> tokens);

// Parses a single \pullback invocation: a square argument run followed by a
// trident run |..|/..`..`../<w,h>[E;e`f`g]. A missing or short trident block
// is an ArityError.
Statement parse_pullback(std::span<const Token> tokens);

std::vector<Statement> parse_source(std::string_view source);

}  // namespace diagxy
