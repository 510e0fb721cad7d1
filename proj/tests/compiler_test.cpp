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

#include <string>

#include "diagxy/compiler.hpp"

namespace diagxy {
namespace {

CompileResult C(const std::string& src, bool strict = false) {
  CompileOptions o;
  o.strict = strict;
  return compile(src, MetricsTable::builtin(), o);
}

ErrorKind compile_error(const std::string& src, bool strict = false) {
  try {
    C(src, strict);
  } catch (const CompileError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "compiled: " << src;
  return ErrorKind::kParseError;
}

TEST(Compiler, WholeDocumentIsOneFigure) {
  auto r = C("\\square[A`B`C`D;f`g`h`k]\n\\to^f\n");
  ASSERT_EQ(r.outputs.size(), 1u);
  EXPECT_EQ(r.outputs[0].scene.nodes.size(), 4u);
  EXPECT_EQ(r.outputs[0].scene.inlines.size(), 1u);
  EXPECT_FALSE(r.outputs[0].svg.empty());
}

TEST(Compiler, FiguresAndLooseFragments) {
  auto r = C("\\bfig\\square[A`B`C`D;f`g`h`k]\\efig\n\\to\n\\iloop X(ul,ur)\n"
             "\\bfig\\morphism[A`B;f]\\efig");
  ASSERT_EQ(r.outputs.size(), 4u);
  EXPECT_EQ(r.outputs[0].scene.arrows.size(), 4u);
  EXPECT_EQ(r.outputs[1].scene.inlines.size(), 1u);
  EXPECT_EQ(r.outputs[2].scene.arrows.size(), 1u);
  EXPECT_TRUE(r.outputs[2].scene.arrows[0].loop);
  EXPECT_EQ(r.outputs[3].scene.arrows.size(), 1u);
}

TEST(Compiler, NamesAreScopedToFigures) {
  EXPECT_EQ(compile_error("\\bfig\\node a(0,0)[A]\\efig\\bfig\\node b(500,0)[B]"
                          "\\arrow[a`b;f]\\efig"),
            ErrorKind::kUnknownNode);
  auto r = C("\\bfig\\node a(0,0)[A]\\efig\\bfig\\node a(0,0)[A]\\efig");
  EXPECT_EQ(r.outputs.size(), 2u);
}

TEST(Compiler, FigureErrors) {
  EXPECT_EQ(compile_error("\\bfig\\efig\\square[A`B`C`D;f`g`h`k]"), ErrorKind::kOutsideFigure);
  EXPECT_EQ(compile_error("\\bfig\\square[A`B`C`D;f`g`h`k]"), ErrorKind::kUnbalancedGroup);
  EXPECT_EQ(compile_error("\\bfig\\bfig\\efig\\efig"), ErrorKind::kParseError);
  EXPECT_EQ(compile_error("\\square[A`B`C`D;f`g`h`k]\\efig"), ErrorKind::kParseError);
}

TEST(Compiler, WarningsAndStrict) {
  const std::string src = "\\morphism[\xC3\xA9`\xC3\xA9;f]";
  auto r = C(src);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(r.warnings[0].kind, ErrorKind::kUnknownGlyph);
  EXPECT_EQ(compile_error(src, true), ErrorKind::kUnknownGlyph);
  EXPECT_TRUE(C("\\square[A`B`C`D;f`g`h`k]", true).warnings.empty());
}

TEST(Compiler, EmConfigScalesOutput) {
  CompileOptions small, big;
  small.cfg = RenderConfig::for_em(10);
  big.cfg = RenderConfig::for_em(20);
  auto a = compile("\\square[A`B`C`D;f`g`h`k]", MetricsTable::builtin(), small);
  auto b = compile("\\square[A`B`C`D;f`g`h`k]", MetricsTable::builtin(), big);
  EXPECT_EQ(a.outputs[0].scene_text, b.outputs[0].scene_text);
  EXPECT_NE(a.outputs[0].svg, b.outputs[0].svg);
}

TEST(Compiler, EmptyDocument) {
  auto r = C("% nothing\n");
  ASSERT_EQ(r.outputs.size(), 1u);
  EXPECT_TRUE(r.outputs[0].scene.nodes.empty());
}

}  // namespace
}  // namespace diagxy
