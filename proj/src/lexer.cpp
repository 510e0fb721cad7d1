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

#include "diagxy/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace diagxy {
namespace {

constexpr std::string_view kKeywords[] = {
    "morphism",  "vect",      "square",    "Square",    "Diamond",
    "ptriangle", "qtriangle", "dtriangle", "btriangle", "Atriangle",
    "Vtriangle", "Ctriangle", "Dtriangle", "Atrianglepair", "Vtrianglepair",
    "Ctrianglepair", "Dtrianglepair", "pullback", "hsquares", "hSquares",
    "vsquares",  "vSquares",  "cube",      "iiixiii",   "iiixii",
    "place",     "node",      "arrow",     "Loop",      "iloop",
    "to",        "two",       "three",     "twoar",     "mon",
    "epi",       "toleft",    "monleft",   "epileft",   "rlimto",
    "llimto",    "bfig",      "efig",
};

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      if (at_end()) break;
      SourcePos pos = here();
      char c = peek();
      if (c == '\\') {
        out.push_back(keyword(pos));
        in_three_ = out.back().text == "three";
      } else if (c == '|' && in_three_) {
        out.push_back(script(pos));
      } else if (c == '^' || c == '_') {
        out.push_back(script(pos));
      } else if (c == '(' || c == '|' || c == '/' || c == '<' || c == '[' || c == '{') {
        out.push_back(group(pos));
      } else if (c == ')' || c == ']' || c == '>' || c == '}') {
        throw CompileError(ErrorKind::kParseError,
                           std::string("unexpected '") + c + "'", pos);
      } else {
        out.push_back(raw(pos));
      }
    }
    Token end;
    end.kind = TokenKind::kEnd;
    end.pos = here();
    out.push_back(std::move(end));
    return out;
  }

 private:
  bool at_end() const { return i_ >= src_.size(); }
  char peek() const { return src_[i_]; }
  SourcePos here() const { return {line_, col_}; }

  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_comment() {
    while (!at_end() && peek() != '\n') advance();
  }

  void skip_space_and_comments() {
    while (!at_end()) {
      char c = peek();
      if (c == '%') {
        skip_comment();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  Token keyword(SourcePos pos) {
    advance();  // backslash
    std::string name;
    if (!at_end() && is_letter(peek())) {
      while (!at_end() && is_letter(peek())) {
        name += peek();
        advance();
      }
    } else if (!at_end()) {
      name += peek();
      advance();
    }
    if (!is_constructor_keyword(name)) {
      throw CompileError(ErrorKind::kUnknownConstructor,
                         "unknown constructor \\" + name, pos, "\\" + name);
    }
    Token t;
    t.kind = TokenKind::kKeyword;
    t.text = std::move(name);
    t.pos = pos;
    return t;
  }

  // Reads from just after an opener up to the matching closer; braces nest.
  std::string scan_until(char close, bool brace_group, SourcePos pos, char open) {
    std::string text;
    int depth = brace_group ? 1 : 0;
    while (!at_end()) {
      char c = peek();
      if (c == '\\') {
        text += c;
        advance();
        if (!at_end()) {
          text += peek();
          advance();
        }
        continue;
      }
      if (c == '%') {
        skip_comment();
        if (!at_end()) advance();  // the newline goes with the comment
        continue;
      }
      if (c == '{') {
        ++depth;
      } else if (c == '}') {
        --depth;
        if (brace_group && depth == 0) {
          advance();
          return text;
        }
        if (depth < 0) {
          throw CompileError(ErrorKind::kUnbalancedGroup,
                             std::string("unmatched '}' inside '") + open + "' group", here());
        }
      } else if (!brace_group && depth == 0 && c == close) {
        advance();
        return text;
      }
      text += c;
      advance();
    }
    throw CompileError(ErrorKind::kUnbalancedGroup,
                       std::string("unterminated '") + open + "' group (missing '" +
                           close + "')",
                       pos);
  }

  Token group(SourcePos pos) {
    char open = peek();
    GroupKind kind = open == '(' ? GroupKind::kParen
                   : open == '|' ? GroupKind::kPipe
                   : open == '/' ? GroupKind::kSlash
                   : open == '<' ? GroupKind::kAngle
                   : open == '[' ? GroupKind::kBracket
                                 : GroupKind::kBrace;
    advance();
    Token t;
    t.kind = TokenKind::kGroup;
    t.group = kind;
    t.pos = pos;
    t.text = scan_until(closer(kind), kind == GroupKind::kBrace, pos, open);
    return t;
  }

  // ^X, _X and \three's |X: X is a brace group (stripped), a control word or
  // one character.
  Token script(SourcePos pos) {
    Token t;
    t.kind = TokenKind::kScript;
    t.script = peek();
    t.pos = pos;
    advance();
    skip_space_and_comments();
    if (at_end()) {
      throw CompileError(ErrorKind::kParseError,
                         std::string("missing argument after '") + t.script + "'", pos);
    }
    char c = peek();
    if (c == '{') {
      SourcePos gpos = here();
      advance();
      t.text = scan_until('}', true, gpos, '{');
    } else if (c == '\\') {
      t.text += c;
      advance();
      if (!at_end() && is_letter(peek())) {
        while (!at_end() && is_letter(peek())) {
          t.text += peek();
          advance();
        }
      } else if (!at_end()) {
        t.text += peek();
        advance();
      }
    } else {
      // One UTF-8 character.
      auto b0 = static_cast<unsigned char>(c);
      int len = b0 < 0x80 ? 1 : (b0 >> 5) == 0x6 ? 2 : (b0 >> 4) == 0xE ? 3 : 4;
      for (int k = 0; k < len && !at_end(); ++k) {
        t.text += peek();
        advance();
      }
    }
    return t;
  }

  Token raw(SourcePos pos) {
    Token t;
    t.kind = TokenKind::kRaw;
    t.pos = pos;
    while (!at_end()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) break;
      if (std::string_view("\\(|/<[{^_%)]>}").find(c) != std::string_view::npos) break;
      t.text += c;
      advance();
    }
    return t;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
  bool in_three_ = false;
};

}  // namespace

char opener(GroupKind g) {
  switch (g) {
    case GroupKind::kParen: return '(';
    case GroupKind::kPipe: return '|';
    case GroupKind::kSlash: return '/';
    case GroupKind::kAngle: return '<';
    case GroupKind::kBracket: return '[';
    case GroupKind::kBrace: return '{';
  }
  return '?';
}

char closer(GroupKind g) {
  switch (g) {
    case GroupKind::kParen: return ')';
    case GroupKind::kPipe: return '|';
    case GroupKind::kSlash: return '/';
    case GroupKind::kAngle: return '>';
    case GroupKind::kBracket: return ']';
    case GroupKind::kBrace: return '}';
  }
  return '?';
}

bool is_constructor_keyword(std::string_view name) {
  return std::find(std::begin(kKeywords), std::end(kKeywords), name) != std::end(kKeywords);
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts(1);
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\\' && i + 1 < text.size()) {
      parts.back() += c;
      parts.back() += text[++i];
      continue;
    }
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.emplace_back();
      continue;
    }
    parts.back() += c;
  }
  return parts;
}

std::string strip_braces(std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') return std::string(text);
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\\') {
      ++i;
      continue;
    }
    if (text[i] == '{') ++depth;
    if (text[i] == '}' && --depth == 0 && i + 1 != text.size()) return std::string(text);
  }
  return std::string(text.substr(1, text.size() - 2));
}

}  // namespace diagxy
