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

#include "diagxy/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <optional>

namespace diagxy {
namespace {

struct ShapeDefaults {
  std::string_view placements;
  int specs;
  std::vector<std::int64_t> spans;
  int nodes;
  int labels;
};

const ShapeDefaults kSquare{"alrb", 4, {500, 500}, 4, 4};
const ShapeDefaults kAutoSquare{"alrb", 4, {500}, 4, 4};
const ShapeDefaults kDiamond{"lrlr", 4, {400, 400}, 4, 4};
const ShapeDefaults kHSquares{"aalmrbb", 7, {500, 500, 500}, 6, 7};
const ShapeDefaults kHAutoSquares{"aalmrbb", 7, {500}, 6, 7};
const ShapeDefaults kVSquares{"aalmrbb", 7, {500, 500, 500}, 6, 7};
const ShapeDefaults kVAutoSquares{"alrmlrb", 7, {500, 500}, 6, 7};
const ShapeDefaults kCubeOuter{"alrb", 4, {1500, 1500}, 4, 4};
const ShapeDefaults kCubeInner{"alrb", 4, {500, 500}, 4, 4};
const ShapeDefaults kGrid3x3{"aalmrmmlmrbb", 12, {500, 500}, 9, 12};
const ShapeDefaults kGrid3x2{"aalmrbb", 7, {500, 500}, 6, 7};
const ShapeDefaults kTrident{"amb", 3, {500, 500}, 1, 3};
const ShapeDefaults kMorphism{"a", 1, {500, 0}, 2, 1};

std::string_view triangle_placements(char kind) {
  switch (kind) {
    case 'p': case 'q': return "alr";
    case 'd': case 'b': case 'A': return "lrb";
    case 'V': return "alb";
    case 'C': return "arb";
    case 'D': return "lab";
  }
  return "alr";
}

std::string_view pair_placements(char kind) {
  switch (kind) {
    case 'A': return "lmrbb";
    case 'V': return "aalmr";
    default: return "lrmlr";  // C and D
  }
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::kKeyword: return "\\" + t.text;
    case TokenKind::kGroup:
      return std::string(1, opener(t.group)) + "..." + std::string(1, closer(t.group)) +
             " group";
    case TokenKind::kRaw: return "\"" + t.text + "\"";
    case TokenKind::kScript: return std::string(1, t.script) + " argument";
    case TokenKind::kEnd: return "end of input";
  }
  return "token";
}

class Parser {
 public:
  explicit Parser(std::span<const Token> toks) : toks_(toks) {}

  std::vector<Statement> run() {
    std::vector<Statement> out;
    while (peek().kind != TokenKind::kEnd) {
      const Token& t = peek();
      if (t.kind != TokenKind::kKeyword) {
        throw CompileError(ErrorKind::kParseError,
                           "expected a constructor, found " + describe(t), t.pos);
      }
      out.push_back(statement());
      const Token& next = peek();
      if (next.kind != TokenKind::kKeyword && next.kind != TokenKind::kEnd) {
        throw CompileError(ErrorKind::kParseError,
                           "unexpected " + describe(next) +
                               "; optional arguments must appear in order",
                           next.pos, keyword_);
      }
    }
    return out;
  }

 private:
  const Token& peek() const { return toks_[std::min(i_, toks_.size() - 1)]; }
  const Token& take() {
    const Token& t = peek();
    if (i_ < toks_.size() - 1) ++i_;
    return t;
  }

  bool at_group(GroupKind g) const {
    return peek().kind == TokenKind::kGroup && peek().group == g;
  }
  bool at_script(char c) const {
    return peek().kind == TokenKind::kScript && peek().script == c;
  }

  [[noreturn]] void fail(ErrorKind kind, const std::string& msg, SourcePos pos) const {
    throw CompileError(kind, msg, pos, keyword_);
  }
  [[noreturn]] void arity(std::string_view what, std::size_t expected, std::size_t actual,
                          SourcePos pos) const {
    fail(ErrorKind::kArityError,
         std::string(what) + ": expected " + std::to_string(expected) + ", got " +
             std::to_string(actual),
         pos);
  }

  const Token& require_group(GroupKind g, std::string_view what) {
    if (!at_group(g)) {
      fail(ErrorKind::kParseError,
           std::string("expected ") + opener(g) + std::string(what) + closer(g) +
               ", found " + describe(peek()),
           peek().pos);
    }
    return take();
  }

  std::int64_t parse_int(std::string_view text, SourcePos pos) const {
    std::string s = trim(text);
    std::string_view v = s;
    if (!v.empty() && v.front() == '+') v.remove_prefix(1);
    std::int64_t out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc{} || p != v.data() + v.size()) {
      fail(ErrorKind::kParseError, "expected an integer, found \"" + s + "\"", pos);
    }
    return out;
  }

  std::vector<std::int64_t> ints(const Token& t, std::size_t n, std::string_view what,
                                 ErrorKind count_error) const {
    auto parts = split_top_level(t.text, ',');
    if (parts.size() != n) {
      if (count_error == ErrorKind::kArityError) arity(what, n, parts.size(), t.pos);
      fail(count_error,
           std::string(what) + ": expected " + std::to_string(n) + " integers", t.pos);
    }
    std::vector<std::int64_t> out;
    for (const auto& p : parts) out.push_back(parse_int(p, t.pos));
    return out;
  }

  LogicalPoint origin(const Token& t) const {
    auto v = ints(t, 2, "coordinate", ErrorKind::kParseError);
    return {v[0], v[1]};
  }

  std::string placements(const Token& t, std::size_t n) const {
    std::string p;
    for (char c : t.text) {
      if (!std::isspace(static_cast<unsigned char>(c))) p += c;
    }
    if (n != 0 && p.size() != n) arity("placements", n, p.size(), t.pos);
    return p;
  }

  std::vector<std::string> specs(const Token& t, std::size_t n) const {
    auto parts = split_top_level(t.text, '`');
    if (parts.size() != n) arity("arrow specs", n, parts.size(), t.pos);
    return parts;
  }

  void fields(const Token& t, std::size_t n_nodes, std::size_t n_labels,
              std::vector<std::string>& nodes, std::vector<std::string>& labels) const {
    auto halves = split_top_level(t.text, ';');
    if (halves.size() < 2) {
      fail(ErrorKind::kArityError,
           "expected [nodes;labels] with " + std::to_string(n_nodes) + " nodes and " +
               std::to_string(n_labels) + " labels",
           t.pos);
    }
    // Only the first top-level ';' separates nodes from labels.
    std::string rest = halves[1];
    for (std::size_t k = 2; k < halves.size(); ++k) rest += ";" + halves[k];
    nodes = split_top_level(halves[0], '`');
    labels = split_top_level(rest, '`');
    if (nodes.size() != n_nodes) arity("nodes", n_nodes, nodes.size(), t.pos);
    if (labels.size() != n_labels) arity("labels", n_labels, labels.size(), t.pos);
  }

  // (x,y)|p|/s`s/<spans>  with an optional hook between spans and fields,
  // then [nodes;labels].
  void shape(Block& b, const ShapeDefaults& d, bool has_origin, LogicalPoint def_origin,
             const std::function<void()>& after_spans = {}) {
    b.origin = def_origin;
    if (has_origin && at_group(GroupKind::kParen)) b.origin = origin(take());
    b.placements = std::string(d.placements);
    if (at_group(GroupKind::kPipe)) b.placements = placements(take(), d.placements.size());
    b.arrow_specs.assign(d.specs, ">");
    if (at_group(GroupKind::kSlash)) {
      const Token& t = take();
      if (d.specs == 1) {
        b.arrow_specs = {t.text};
      } else {
        b.arrow_specs = specs(t, d.specs);
      }
    }
    b.spans = d.spans;
    if (at_group(GroupKind::kAngle)) {
      b.spans = ints(take(), d.spans.size(), "spans", ErrorKind::kArityError);
    }
    if (after_spans) after_spans();
    const Token& f = require_group(GroupKind::kBracket, "nodes;labels");
    fields(f, d.nodes, d.labels, b.nodes, b.labels);
  }

  void assign(Statement& s, Block&& b) {
    s.origin = b.origin;
    s.placements = std::move(b.placements);
    s.arrow_specs = std::move(b.arrow_specs);
    s.spans = std::move(b.spans);
    s.nodes = std::move(b.nodes);
    s.labels = std::move(b.labels);
  }

  void simple_shape(Statement& s, const ShapeDefaults& d) {
    Block b;
    shape(b, d, true, {});
    assign(s, std::move(b));
  }

  void grid(Statement& s, const ShapeDefaults& d, std::vector<std::int64_t> border) {
    Block b;
    s.extras.border = std::move(border);
    shape(b, d, true, {}, [&] {
      if (peek().kind == TokenKind::kRaw ||
          (peek().kind == TokenKind::kGroup && peek().group == GroupKind::kBrace)) {
        const Token& t = take();
        s.extras.mask = parse_int(strip_braces(t.text), t.pos);
        if (at_group(GroupKind::kAngle)) {
          s.extras.border =
              ints(take(), s.extras.border.size(), "border spans", ErrorKind::kArityError);
        }
      } else if (at_group(GroupKind::kAngle)) {
        fail(ErrorKind::kParseError, "border spans require a mask before them", peek().pos);
      }
    });
    assign(s, std::move(b));
  }

  void trident(Statement& s) {
    if (!at_group(GroupKind::kPipe) && !at_group(GroupKind::kSlash) &&
        !at_group(GroupKind::kAngle) && !at_group(GroupKind::kBracket)) {
      fail(ErrorKind::kArityError,
           "expected a trident block [E;e`f`g] after the square (expected 1 node and 3 "
           "labels, got none)",
           peek().pos);
    }
    shape(s.extras.trident, kTrident, false, {});
    s.extras.trident.origin = {};
  }

  void cube(Statement& s) {
    simple_shape(s, kCubeOuter);
    shape(s.extras.inner, kCubeInner, true, {kDefaultSpanCoord, kDefaultSpanCoord});
    Block& c = s.extras.connectors;
    c.placements = "mmmm";
    if (at_group(GroupKind::kPipe)) c.placements = placements(take(), 4);
    c.arrow_specs.assign(4, ">");
    if (at_group(GroupKind::kSlash)) c.arrow_specs = specs(take(), 4);
    const Token& t = require_group(GroupKind::kBracket, "connector labels");
    c.labels = split_top_level(t.text, '`');
    if (c.labels.size() != 4) arity("connector labels", 4, c.labels.size(), t.pos);
  }

  std::string text_argument(std::string_view what) {
    const Token& t = peek();
    if (t.kind == TokenKind::kRaw) return take().text;
    if (t.kind == TokenKind::kGroup && t.group == GroupKind::kBrace) return take().text;
    fail(ErrorKind::kParseError,
         "expected " + std::string(what) + ", found " + describe(t), t.pos);
  }

  void directions(Statement& s) {
    const Token& t = require_group(GroupKind::kParen, "out,in");
    auto parts = split_top_level(t.text, ',');
    if (parts.size() != 2) arity("loop directions", 2, parts.size(), t.pos);
    s.extras.out_dir = trim(parts[0]);
    s.extras.in_dir = trim(parts[1]);
  }

  void inline_arrow(Statement& s, InlineKind kind) {
    s.constructor = Constructor::kInlineArrow;
    s.extras.inline_kind = kind;
    switch (kind) {
      case InlineKind::kTwoar: {
        const Token& t = require_group(GroupKind::kParen, "dx,dy");
        s.spans = ints(t, 2, "twoar delta", ErrorKind::kArityError);
        return;
      }
      case InlineKind::kRlimto: s.arrow_specs = {"->"}; s.spans = {100}; return;
      case InlineKind::kLlimto: s.arrow_specs = {"<-"}; s.spans = {100}; return;
      default: break;
    }
    std::size_t n_specs = kind == InlineKind::kTwo ? 2 : kind == InlineKind::kThree ? 3 : 1;
    switch (kind) {
      case InlineKind::kMon: s.arrow_specs = {" >->"}; break;
      case InlineKind::kEpi: s.arrow_specs = {"->>"}; break;
      case InlineKind::kToleft: s.arrow_specs = {"<-"}; break;
      case InlineKind::kMonleft: s.arrow_specs = {"<-< "}; break;
      case InlineKind::kEpileft: s.arrow_specs = {"<<-"}; break;
      default:
        s.arrow_specs.assign(n_specs, ">");
        if (at_group(GroupKind::kSlash)) {
          const Token& t = take();
          s.arrow_specs = n_specs == 1 ? std::vector<std::string>{t.text} : specs(t, n_specs);
        }
    }
    s.spans = {0};
    if (at_group(GroupKind::kAngle)) s.spans = ints(take(), 1, "length", ErrorKind::kArityError);
    std::string sup, mid, sub;
    if (at_script('^')) sup = take().text;
    if (kind == InlineKind::kThree && at_script('|')) mid = take().text;
    if (at_script('_')) sub = take().text;
    if (kind == InlineKind::kThree) {
      s.labels = {sup, mid, sub};
    } else {
      s.labels = {sup, sub};
    }
  }

  Statement statement() {
    const Token& kw = take();
    keyword_ = "\\" + kw.text;
    Statement s;
    s.pos = kw.pos;
    const std::string& k = kw.text;

    if (k == "morphism") {
      s.constructor = Constructor::kMorphism;
      simple_shape(s, kMorphism);
    } else if (k == "vect") {
      s.constructor = Constructor::kVect;
      s.origin = origin(require_group(GroupKind::kParen, "x,y"));
      s.arrow_specs = {require_group(GroupKind::kSlash, "spec").text};
      s.spans = ints(require_group(GroupKind::kAngle, "dx,dy"), 2, "spans",
                     ErrorKind::kArityError);
    } else if (k == "square") {
      s.constructor = Constructor::kSquare;
      simple_shape(s, kSquare);
    } else if (k == "Square") {
      s.constructor = Constructor::kAutoSquare;
      simple_shape(s, kAutoSquare);
    } else if (k == "Diamond") {
      s.constructor = Constructor::kDiamond;
      simple_shape(s, kDiamond);
    } else if (k.size() == 9 && k.ends_with("triangle")) {
      s.constructor = Constructor::kTriangle;
      s.extras.triangle_kind = k[0];
      simple_shape(s, {triangle_placements(k[0]), 3, {500, 500}, 3, 3});
    } else if (k.ends_with("trianglepair")) {
      s.constructor = Constructor::kTrianglePair;
      s.extras.triangle_kind = k[0];
      simple_shape(s, {pair_placements(k[0]), 5, {500, 500}, 4, 5});
    } else if (k == "pullback") {
      s.constructor = Constructor::kPullback;
      simple_shape(s, kSquare);
      trident(s);
    } else if (k == "hsquares") {
      s.constructor = Constructor::kHSquares;
      simple_shape(s, kHSquares);
    } else if (k == "hSquares") {
      s.constructor = Constructor::kHAutoSquares;
      simple_shape(s, kHAutoSquares);
    } else if (k == "vsquares") {
      s.constructor = Constructor::kVSquares;
      simple_shape(s, kVSquares);
    } else if (k == "vSquares") {
      s.constructor = Constructor::kVAutoSquares;
      simple_shape(s, kVAutoSquares);
    } else if (k == "cube") {
      s.constructor = Constructor::kCube;
      cube(s);
    } else if (k == "iiixiii") {
      s.constructor = Constructor::kGrid3x3;
      grid(s, kGrid3x3, {400, 400});
    } else if (k == "iiixii") {
      s.constructor = Constructor::kGrid3x2;
      grid(s, kGrid3x2, {400});
    } else if (k == "place") {
      s.constructor = Constructor::kPlace;
      if (at_group(GroupKind::kBracket)) {
        const Token& a = take();
        auto anchor = parse_anchor(a.text);
        if (!anchor) fail(ErrorKind::kParseError, "unknown anchor \"" + a.text + "\"", a.pos);
        s.extras.anchor = *anchor;
      }
      s.origin = origin(require_group(GroupKind::kParen, "x,y"));
      s.nodes = {require_group(GroupKind::kBracket, "text").text};
    } else if (k == "node") {
      s.constructor = Constructor::kNode;
      if (peek().kind != TokenKind::kRaw) {
        fail(ErrorKind::kParseError, "expected a node name, found " + describe(peek()),
             peek().pos);
      }
      s.extras.names = {take().text};
      s.origin = origin(require_group(GroupKind::kParen, "x,y"));
      s.nodes = {require_group(GroupKind::kBracket, "text").text};
    } else if (k == "arrow") {
      s.constructor = Constructor::kNamedArrow;
      s.placements = "a";
      if (at_group(GroupKind::kPipe)) s.placements = placements(take(), 1);
      s.arrow_specs = {">"};
      if (at_group(GroupKind::kSlash)) s.arrow_specs = {take().text};
      std::vector<std::string> names;
      fields(require_group(GroupKind::kBracket, "from`to;label"), 2, 1, names, s.labels);
      for (auto& n : names) n = trim(n);
      s.extras.names = std::move(names);
    } else if (k == "Loop") {
      s.constructor = Constructor::kLoop;
      s.origin = origin(require_group(GroupKind::kParen, "x,y"));
      s.nodes = {text_argument("node text")};
      directions(s);
    } else if (k == "iloop") {
      s.constructor = Constructor::kInlineLoop;
      s.nodes = {text_argument("node text")};
      directions(s);
    } else if (k == "to") {
      inline_arrow(s, InlineKind::kTo);
    } else if (k == "two") {
      inline_arrow(s, InlineKind::kTwo);
    } else if (k == "three") {
      inline_arrow(s, InlineKind::kThree);
    } else if (k == "twoar") {
      inline_arrow(s, InlineKind::kTwoar);
    } else if (k == "mon") {
      inline_arrow(s, InlineKind::kMon);
    } else if (k == "epi") {
      inline_arrow(s, InlineKind::kEpi);
    } else if (k == "toleft") {
      inline_arrow(s, InlineKind::kToleft);
    } else if (k == "monleft") {
      inline_arrow(s, InlineKind::kMonleft);
    } else if (k == "epileft") {
      inline_arrow(s, InlineKind::kEpileft);
    } else if (k == "rlimto") {
      inline_arrow(s, InlineKind::kRlimto);
    } else if (k == "llimto") {
      inline_arrow(s, InlineKind::kLlimto);
    } else if (k == "bfig") {
      s.constructor = Constructor::kBeginFig;
    } else if (k == "efig") {
      s.constructor = Constructor::kEndFig;
    } else {
      fail(ErrorKind::kUnknownConstructor, "unknown constructor " + keyword_, kw.pos);
    }
    return s;
  }

  static constexpr std::int64_t kDefaultSpanCoord = 500;

  std::span<const Token> toks_;
  std::size_t i_ = 0;
  std::string keyword_;
};

}  // namespace

std::vector<Statement> parse(std::span<const Token> tokens) {
  if (tokens.empty() || tokens.back().kind != TokenKind::kEnd) {
    std::vector<Token> copy(tokens.begin(), tokens.end());
    Token end;
    end.kind = TokenKind::kEnd;
    if (!copy.empty()) end.pos = copy.back().pos;
    copy.push_back(end);
    return Parser(copy).run();
  }
  return Parser(tokens).run();
}

Statement parse_pullback(std::span<const Token> tokens) {
  auto stmts = parse(tokens);
  if (stmts.size() != 1 || stmts[0].constructor != Constructor::kPullback) {
    throw CompileError(ErrorKind::kParseError, "expected exactly one \\pullback statement",
                       tokens.empty() ? SourcePos{} : tokens.front().pos, "\\pullback");
  }
  return stmts[0];
}

std::vector<Statement> parse_source(std::string_view source) {
  auto toks = tokenize(source);
  return parse(toks);
}

}  // namespace diagxy
