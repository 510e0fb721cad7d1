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

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "diagxy/error.hpp"
#include "diagxy/lower.hpp"
#include "diagxy/parser.hpp"

namespace diagxy {
namespace {

using P = LogicalPoint;

Scene L(const std::string& src, Warnings* w = nullptr) {
  auto stmts = parse_source(src);
  return lower(stmts, MetricsTable::builtin(), RenderConfig{}, w);
}

ErrorKind lower_error(const std::string& src) {
  try {
    L(src);
  } catch (const CompileError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "lowered: " << src;
  return ErrorKind::kParseError;
}

P node_pos(const Scene& s, const std::string& text) {
  auto it = std::find_if(s.nodes.begin(), s.nodes.end(),
                         [&](const NodeInstance& n) { return n.text == text; });
  EXPECT_NE(it, s.nodes.end()) << text;
  return it == s.nodes.end() ? P{-99999, -99999} : it->pos;
}

bool has_edge(const Scene& s, std::pair<P, P> e) {
  return std::any_of(s.arrows.begin(), s.arrows.end(),
                     [&](const ArrowInstance& a) { return a.from == e.first && a.to == e.second; });
}

std::vector<std::pair<P, P>> edges(const Scene& s) {
  std::vector<std::pair<P, P>> out;
  for (const auto& a : s.arrows) out.push_back({a.from, a.to});
  return out;
}

TEST(Lower, Morphism) {
  Scene s = L("\\morphism(10,20)|a|/->>/<700,0>[A`{B_1};f]");
  ASSERT_EQ(s.nodes.size(), 2u);
  EXPECT_EQ(s.nodes[1].text, "B_1");
  ASSERT_EQ(s.arrows.size(), 1u);
  EXPECT_EQ(s.arrows[0].from, (P{10, 20}));
  EXPECT_EQ(s.arrows[0].to, (P{710, 20}));
  EXPECT_EQ(s.arrows[0].label, "f");
  EXPECT_EQ(s.arrows[0].label_rule, LabelRule::kA);
  EXPECT_EQ(s.arrows[0].style.head, Head::kDoubleHead);
  ASSERT_TRUE(s.arrows[0].target_extent);
  EXPECT_EQ(s.arrows[0].target_extent->text, "B_1");
}

TEST(Lower, LabelSideExamples) {
  EXPECT_EQ(label_side(LabelRule::kA, 500, 0), LabelSide::kLeft);
  EXPECT_EQ(label_side(LabelRule::kL, 0, -500), LabelSide::kRight);
  EXPECT_EQ(label_side(LabelRule::kR, 0, -500), LabelSide::kLeft);
  EXPECT_EQ(label_side(LabelRule::kNone, 500, 0), LabelSide::kNone);
  Scene s = L("\\morphism|x|[A`B;f]");
  EXPECT_EQ(s.arrows[0].label_rule, LabelRule::kNone);
}

TEST(Lower, Vect) {
  Scene s = L("\\vect(0,0)/<-/<500,0>");
  EXPECT_TRUE(s.nodes.empty());
  ASSERT_EQ(s.arrows.size(), 1u);
  EXPECT_FALSE(s.arrows[0].source_extent);
  EXPECT_FALSE(s.arrows[0].target_extent);
  EXPECT_TRUE(s.arrows[0].style.reversed);
  EXPECT_EQ(lower_error("\\vect(0,0)/>/<0,0>"), ErrorKind::kDegenerateArrow);
}

TEST(Lower, SquareDrawOrder) {
  Scene s = L("\\square<700,300>[A`B`C`D;f`g`h`k]");
  EXPECT_EQ(node_pos(s, "A"), (P{0, 300}));
  EXPECT_EQ(node_pos(s, "D"), (P{700, 0}));
  // bottom, left, top, right
  std::vector<std::string> labels;
  for (const auto& a : s.arrows) labels.push_back(a.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"k", "g", "f", "h"}));
  Scene e = L("\\square/`>`>`>/[A`B`C`D;f`g`h`k]");
  EXPECT_EQ(e.arrows.size(), 3u);
  EXPECT_EQ(e.nodes.size(), 4u);
}

TEST(Lower, AutoSquare) {
  Scene s = L("\\Square[A`B`C`D;f`g`h`k]");
  EXPECT_EQ(node_pos(s, "B"), (P{500, 500}));
  s = L("\\Square<800>[A`B`C`D;f`g`h`kkkkkkkkk]");
  EXPECT_EQ(node_pos(s, "D"), (P{850, 0}));
  EXPECT_EQ(node_pos(s, "A"), (P{0, 800}));
}

TEST(Lower, Diamond) {
  Scene s = L("\\Diamond[A`B`C`D;a`b`c`d]");
  EXPECT_EQ(node_pos(s, "A"), (P{400, 800}));
  EXPECT_EQ(node_pos(s, "B"), (P{0, 400}));
  EXPECT_EQ(node_pos(s, "C"), (P{800, 400}));
  EXPECT_EQ(node_pos(s, "D"), (P{400, 0}));
  EXPECT_EQ(lower_error("\\Diamond<0,0>[A`B`C`D;a`b`c`d]"), ErrorKind::kDegenerateArrow);
}

TEST(Lower, Triangles) {
  struct Row {
    char kind;
    P a, b, c;
  };
  const std::int64_t x = 100, y = 50, dx = 300, dy = 200;
  const Row rows[] = {
      {'p', {x, y + dy}, {x + dx, y + dy}, {x, y}},
      {'q', {x, y + dy}, {x + dx, y + dy}, {x + dx, y}},
      {'d', {x + dx, y + dy}, {x, y}, {x + dx, y}},
      {'b', {x, y + dy}, {x, y}, {x + dx, y}},
      {'A', {x + dx, y + dy}, {x, y}, {x + 2 * dx, y}},
      {'V', {x, y + dy}, {x + 2 * dx, y + dy}, {x + dx, y}},
      {'C', {x + dx, y + 2 * dy}, {x, y + dy}, {x + dx, y}},
      {'D', {x, y + 2 * dy}, {x + dx, y + dy}, {x, y}},
  };
  for (const auto& r : rows) {
    SCOPED_TRACE(std::string(1, r.kind));
    Scene s = L("\\" + std::string(1, r.kind) + "triangle(100,50)<300,200>[A`B`C;a`b`c]");
    EXPECT_EQ(node_pos(s, "A"), r.a);
    EXPECT_EQ(node_pos(s, "B"), r.b);
    EXPECT_EQ(node_pos(s, "C"), r.c);
    ASSERT_EQ(s.arrows.size(), 3u);
    // The D kind draws slot a down the left side and slot b on the diagonal.
    const bool d = r.kind == 'D';
    for (auto [from, to, label] :
         {std::tuple{r.a, d ? r.c : r.b, "a"}, std::tuple{r.a, d ? r.b : r.c, "b"},
          std::tuple{r.b, r.c, "c"}}) {
      auto it = std::find_if(s.arrows.begin(), s.arrows.end(), [&](const ArrowInstance& a) {
        return a.label == label;
      });
      ASSERT_NE(it, s.arrows.end());
      EXPECT_EQ(it->from, from) << label;
      EXPECT_EQ(it->to, to) << label;
    }
  }
  // Right angle at A for the p kind.
  Scene p = L("\\ptriangle[A`B`C;a`b`c]");
  P ab = node_pos(p, "B") - node_pos(p, "A"), ac = node_pos(p, "C") - node_pos(p, "A");
  EXPECT_EQ(ab.x * ac.x + ab.y * ac.y, 0);
}

TEST(Lower, TrianglePairs) {
  struct Row {
    char kind;
    P a, b, c, d;
    std::vector<std::pair<char, char>> arrows;  // a..e in label order
  };
  const Row rows[] = {
      {'A', {500, 500}, {0, 0}, {500, 0}, {1000, 0},
       {{'A', 'B'}, {'A', 'C'}, {'A', 'D'}, {'B', 'C'}, {'C', 'D'}}},
      {'V', {0, 500}, {500, 500}, {1000, 500}, {500, 0},
       {{'A', 'B'}, {'B', 'C'}, {'A', 'D'}, {'B', 'D'}, {'C', 'D'}}},
      {'C', {0, 1000}, {-500, 500}, {0, 500}, {0, 0},
       {{'A', 'B'}, {'A', 'C'}, {'B', 'C'}, {'B', 'D'}, {'C', 'D'}}},
      {'D', {0, 1000}, {0, 500}, {500, 500}, {0, 0},
       {{'A', 'B'}, {'A', 'C'}, {'B', 'C'}, {'B', 'D'}, {'C', 'D'}}},
  };
  for (const auto& r : rows) {
    SCOPED_TRACE(std::string(1, r.kind));
    Scene s = L("\\" + std::string(1, r.kind) + "trianglepair[A`B`C`D;a`b`c`d`e]");
    const P pos[4] = {r.a, r.b, r.c, r.d};
    EXPECT_EQ(node_pos(s, "A"), r.a);
    EXPECT_EQ(node_pos(s, "B"), r.b);
    EXPECT_EQ(node_pos(s, "C"), r.c);
    EXPECT_EQ(node_pos(s, "D"), r.d);
    ASSERT_EQ(s.arrows.size(), 5u);
    for (int i = 0; i < 5; ++i) {
      const std::string label(1, static_cast<char>('a' + i));
      auto it = std::find_if(s.arrows.begin(), s.arrows.end(),
                             [&](const ArrowInstance& a) { return a.label == label; });
      ASSERT_NE(it, s.arrows.end());
      EXPECT_EQ(it->from, pos[r.arrows[i].first - 'A']) << label;
      EXPECT_EQ(it->to, pos[r.arrows[i].second - 'A']) << label;
    }
  }
}

TEST(Lower, Pullback) {
  Scene s = L("\\pullback[A`B`C`D;a`b`c`d][E;e`f`g]");
  EXPECT_EQ(node_pos(s, "E"), (P{-500, 1000}));
  Scene t = L("\\pullback[A`B`C`D;a`b`c`d]<300,200>[E;e`f`g]");
  EXPECT_EQ(node_pos(t, "E"), (P{-300, 700}));
  auto g = std::find_if(t.arrows.begin(), t.arrows.end(),
                        [](const ArrowInstance& a) { return a.label == "g"; });
  ASSERT_NE(g, t.arrows.end());
  EXPECT_EQ(g->to - g->from, (P{300, -700}));
  auto f = std::find_if(t.arrows.begin(), t.arrows.end(),
                        [](const ArrowInstance& a) { return a.label == "f"; });
  EXPECT_EQ(f->label_rule, LabelRule::kM);
}

TEST(Lower, HSquares) {
  Scene s = L("\\hsquares[A`B`C`D`E`F;a`b`c`d`e`f`g]");
  EXPECT_EQ(node_pos(s, "B"), (P{500, 500}));
  EXPECT_EQ(node_pos(s, "C"), (P{1000, 500}));
  EXPECT_EQ(s.arrows.size(), 7u);
  EXPECT_EQ(s.nodes.size(), 6u);
  Scene a = L("\\hsquares(0,0)|aalmrbb|/>`>`>`>`>`>`>/<500,300,500>[A`B`C`D`E`F;a`b`c`d`e`f`g]");
  EXPECT_EQ(node_pos(a, "C"), (P{800, 500}));
  auto d = std::count_if(a.arrows.begin(), a.arrows.end(),
                         [](const ArrowInstance& x) { return x.label == "d"; });
  EXPECT_EQ(d, 1);
}

TEST(Lower, VSquares) {
  Scene s = L("\\vsquares<500,400,300>[A`B`C`D`E`F;a`b`c`d`e`f`g]");
  EXPECT_EQ(node_pos(s, "A"), (P{0, 700}));
  EXPECT_EQ(node_pos(s, "C"), (P{0, 300}));
  EXPECT_EQ(node_pos(s, "F"), (P{500, 0}));
  auto d = std::count_if(s.arrows.begin(), s.arrows.end(),
                         [](const ArrowInstance& x) { return x.label == "d"; });
  EXPECT_EQ(d, 1);
  EXPECT_EQ(s.arrows.size(), 7u);
}

TEST(Lower, AutoSquarePairs) {
  Scene h = L("\\hSquares[A`B`C`D`E`F;a`b`c`d`e`f`g]");
  EXPECT_EQ(node_pos(h, "B"), (P{500, 500}));
  EXPECT_EQ(node_pos(h, "C"), (P{1000, 500}));
  // A long bottom-right label widens only the right half.
  Scene w = L("\\hSquares[A`B`C`D`E`F;a`b`c`d`e`f`ggggggggg]");
  EXPECT_EQ(node_pos(w, "B"), (P{500, 500}));
  EXPECT_EQ(node_pos(w, "C"), (P{1350, 500}));
  Scene v = L("\\vSquares<700,300>[A`B`C`D`E`F;a`b`c`d`e`f`g]");
  EXPECT_EQ(node_pos(v, "E"), (P{0, 0}));
  EXPECT_EQ(node_pos(v, "C"), (P{0, 300}));
  EXPECT_EQ(node_pos(v, "A"), (P{0, 1000}));
  Scene vw = L("\\vSquares[A`B`C`D`E`F;a`b`c`d`e`f`ggggggggg]");
  EXPECT_EQ(node_pos(vw, "B"), (P{850, 1000}));
}

TEST(Lower, Cube) {
  Scene s = L("\\cube[A`B`C`D;a`b`c`d][E`F`G`H;e`f`g`h][w`x`y`z]");
  EXPECT_EQ(s.arrows.size(), 12u);
  // Connectors TR, TL, BL, BR close the list, outer end first.
  const auto all = edges(s);
  std::vector<std::pair<P, P>> tail(all.end() - 4, all.end());
  const std::vector<std::pair<P, P>> want = {{{1500, 1500}, {1000, 1000}},
                                             {{0, 1500}, {500, 1000}},
                                             {{0, 0}, {500, 500}},
                                             {{1500, 0}, {1000, 500}}};
  EXPECT_EQ(tail, want);
  EXPECT_EQ(s.arrows[8].label, "x");
  EXPECT_EQ(s.arrows[9].label, "w");
  EXPECT_EQ(s.arrows[8].label_rule, LabelRule::kM);
  // Inner ends are phantoms merged into the inked inner nodes.
  EXPECT_EQ(s.nodes.size(), 8u);
  for (const auto& n : s.nodes) EXPECT_FALSE(n.phantom) << n.text;
  Scene raw_phantoms = [] {
    auto st = parse_source("\\cube[A`B`C`D;a`b`c`d][E`F`G`H;e`f`g`h][w`x`y`z]");
    const MetricsTable metrics = MetricsTable::builtin();
    const RenderConfig cfg;
    LoweringContext ctx(metrics, cfg);
    ctx.lower(st[0]);
    return ctx.raw_scene();
  }();
  EXPECT_GT(std::count_if(raw_phantoms.nodes.begin(), raw_phantoms.nodes.end(),
                          [](const NodeInstance& n) { return n.phantom; }),
            0);
  Scene c = L("\\cube[A`B`C`D;a`b`c`d](400,600)[E`F`G`H;e`f`g`h][w`x`y`z]");
  EXPECT_EQ(node_pos(c, "E"), (P{400, 1100}));
}

TEST(Lower, Grid3x3) {
  const std::string body =
      "[A`B`C`D`E`F`G`H`I;a`b`c`d`e`f`g`h`i`j`k`l]";
  Scene s = L("\\iiixiii" + body);
  EXPECT_EQ(s.nodes.size(), 9u);
  EXPECT_EQ(s.arrows.size(), 12u);
  EXPECT_EQ(node_pos(s, "A"), (P{0, 1000}));
  EXPECT_EQ(node_pos(s, "I"), (P{1000, 0}));
  Scene m = L("\\iiixiii<500,500>{4095}" + body);
  EXPECT_EQ(m.arrows.size(), 24u);
  EXPECT_EQ(std::count_if(m.nodes.begin(), m.nodes.end(),
                          [](const NodeInstance& n) { return n.text == "0"; }),
            12);
  Scene one = L("\\iiixiii<500,500>{32}" + body);
  ASSERT_EQ(one.arrows.size(), 13u);
  EXPECT_TRUE(has_edge(one,
                         std::pair<P, P>{{-400, 500}, {0, 500}}));
  EXPECT_EQ(lower_error("\\iiixiii<500,500>{4096}" + body), ErrorKind::kMaskOutOfRange);
  EXPECT_EQ(lower_error("\\iiixiii<500,500>{-1}" + body), ErrorKind::kMaskOutOfRange);
}

TEST(Lower, Grid3x2) {
  const std::string body = "[A`B`C`D`E`F;a`b`c`d`e`f`g]";
  EXPECT_EQ(L("\\iiixii<500,500>{15}" + body).arrows.size(), 11u);
  Scene c = L("\\iiixii<500,500>{2}" + body);
  ASSERT_EQ(c.arrows.size(), 8u);
  EXPECT_TRUE(has_edge(c,
                         std::pair<P, P>{{1000, 500}, {1400, 500}}));
  Scene d = L("\\iiixii<500,500>{8}<300>" + body);
  EXPECT_TRUE(has_edge(d,
                         std::pair<P, P>{{1000, 0}, {1300, 0}}));
  EXPECT_EQ(lower_error("\\iiixii<500,500>{16}" + body), ErrorKind::kMaskOutOfRange);
}

TEST(Lower, BorderArrowsForward) {
  Scene s = L("\\iiixii<500,500>{1}[A`B`C`D`E`F;a`b`c`d`e`f`g]");
  auto it = std::find_if(s.arrows.begin(), s.arrows.end(), [](const ArrowInstance& a) {
    return a.source_extent && a.source_extent->text == "0";
  });
  ASSERT_NE(it, s.arrows.end());
  EXPECT_FALSE(it->style.reversed);
  EXPECT_EQ(it->to, (P{0, 500}));
}

TEST(Lower, NamedNodes) {
  Scene s = L("\\node a(0,0)[A]\\node b(500,0)[B]\\arrow[a`b;f]");
  ASSERT_EQ(s.arrows.size(), 1u);
  EXPECT_EQ(s.arrows[0].from, (P{0, 0}));
  EXPECT_EQ(s.arrows[0].to, (P{500, 0}));
  EXPECT_EQ(label_side(s.arrows[0].label_rule, 500, 0), LabelSide::kLeft);
  EXPECT_EQ(s.arrows[0].target_extent->text, "B");
  EXPECT_EQ(lower_error("\\node a(0,0)[A]\\arrow[a`z;f]"), ErrorKind::kUnknownNode);
  EXPECT_EQ(lower_error("\\node a(0,0)[A]\\node a(5,0)[B]"), ErrorKind::kDuplicateNode);
  EXPECT_EQ(lower_error("\\node a(0,0)[A]\\arrow[a`a;f]"), ErrorKind::kDegenerateArrow);
}

TEST(Lower, ErrorsCarryContext) {
  try {
    L("\\square[A`B`C`D;f`g`h`k]\n  \\node a(0,0)[A]\\arrow[a`z;f]");
    ADD_FAILURE();
  } catch (const CompileError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownNode);
    EXPECT_EQ(e.pos().line, 2);
    EXPECT_EQ(e.constructor(), "\\arrow");
    EXPECT_NE(e.message().find('z'), std::string::npos);
  }
}

TEST(Lower, Loops) {
  Scene s = L("\\Loop(100,0)X(ul,ur)");
  ASSERT_EQ(s.arrows.size(), 1u);
  ASSERT_TRUE(s.arrows[0].loop);
  EXPECT_EQ(s.arrows[0].loop->out, "ul");
  EXPECT_EQ(s.arrows[0].from, s.arrows[0].to);
  EXPECT_EQ(node_pos(s, "X"), (P{100, 0}));
  Scene i = L("\\iloop Y(dl,dr)");
  EXPECT_EQ(node_pos(i, "Y"), (P{0, 0}));
  EXPECT_EQ(lower_error("\\Loop(0,0)X(ul,ul)"), ErrorKind::kDegenerateLoop);
  EXPECT_EQ(lower_error("\\Loop(0,0)X(ul,up)"), ErrorKind::kBadDirection);
}

TEST(Lower, Place) {
  Scene s = L("\\place[ru](5,6)[{x}]");
  ASSERT_EQ(s.nodes.size(), 1u);
  EXPECT_EQ(s.nodes[0].anchor, Anchor::kRU);
  EXPECT_EQ(s.nodes[0].text, "x");
}

TEST(Lower, Inline) {
  Scene s = L("\\to^f");
  ASSERT_EQ(s.inlines.size(), 1u);
  EXPECT_EQ(s.inlines[0].arrows[0].to, (P{200, 0}));  // 50 + 150
  EXPECT_EQ(s.inlines[0].arrows[0].sup, "f");
  Scene two = L("\\two^{ffffffffffffffffffffffffff}");
  EXPECT_EQ(two.inlines[0].arrows.size(), 2u);
  EXPECT_EQ(two.inlines[0].arrows[0].to, (P{1450, 0}));
  EXPECT_DOUBLE_EQ(two.inlines[0].arrows[0].style.parallel_offset_pt, 2.5);
  EXPECT_DOUBLE_EQ(two.inlines[0].arrows[1].style.parallel_offset_pt, -2.5);
  EXPECT_EQ(two.inlines[0].arrows[0].sup, "ffffffffffffffffffffffffff");
  Scene three = L("\\three^a|b_c");
  ASSERT_EQ(three.inlines[0].arrows.size(), 3u);
  EXPECT_EQ(three.inlines[0].arrows[0].mid, "b");
  EXPECT_DOUBLE_EQ(three.inlines[0].arrows[0].style.parallel_offset_pt, 0.0);
  EXPECT_DOUBLE_EQ(three.inlines[0].arrows[1].style.parallel_offset_pt, 4.5);
  EXPECT_DOUBLE_EQ(three.inlines[0].arrows[2].style.parallel_offset_pt, -4.5);
  EXPECT_EQ(three.inlines[0].arrows[1].sup, "a");
  EXPECT_EQ(three.inlines[0].arrows[2].sub, "c");
  Scene r = L("\\rlimto");
  EXPECT_DOUBLE_EQ(r.inlines[0].tip_scale, 0.8);
  EXPECT_DOUBLE_EQ(r.inlines[0].raise_pt, 2.0);
  EXPECT_EQ(r.inlines[0].arrows[0].to, (P{100, 0}));
  Scene mon = L("\\mon");
  EXPECT_EQ(mon.inlines[0].arrows[0].style.tail, Tail::kMono);
  EXPECT_EQ(twoar_endpoint(1, 0), (P{1000, 0}));
}

TEST(Lower, DedupeKeepsFirstAndInking) {
  Scene s;
  s.nodes = {{{0, 0}, "A", Anchor::kCenter, true},
             {{0, 0}, "A", Anchor::kCenter, false},
             {{0, 0}, "B", Anchor::kCenter, false},
             {{0, 0}, "A", Anchor::kL, false}};
  Scene d = dedupe_nodes(s);
  ASSERT_EQ(d.nodes.size(), 3u);
  EXPECT_FALSE(d.nodes[0].phantom);
  EXPECT_EQ(d.nodes[1].text, "B");
}

TEST(Lower, FieldText) {
  EXPECT_EQ(field_text("  {A\\times B} "), "A\\times B");
  EXPECT_EQ(field_text("{{x}}"), "{x}");
  EXPECT_EQ(field_text(""), "");
}

}  // namespace
}  // namespace diagxy
