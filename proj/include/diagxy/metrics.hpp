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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "diagxy/error.hpp"
#include "diagxy/geometry.hpp"

namespace diagxy {

// Per-character advance widths in milli-em. A string measures as the sum of
// its glyph advances: no kerning, no math spacing. Spaces, braces, '$', '^'
// and '_' are math-mode syntax and measure 0. Control words measure as their
// own table entry, else as their replacement glyph, else as the fallback.
//
// File format, one entry per line ('#' starts a comment line):
//   <char> <advance>           single UTF-8 character
//   U+00E9 <advance>           code point in hex
//   233 <advance>              code point in decimal (two or more digits)
//   \alpha <advance>           control word
//   fallback <advance>
//   ascent <milli-em>          node text height above the baseline
//   descent <milli-em>
class MetricsTable {
 public:
  static constexpr int kUniformAdvance = 500;

  // Every printable ASCII character at 500 milli-em, plus the replacement
  // glyphs of common math control words at the same width.
  static MetricsTable builtin();

  // Starts from the builtin table and applies overrides. Throws
  // CompileError(kMetricsFile) on malformed lines.
  static MetricsTable parse(std::string_view text,
                            std::string_view origin = "<metrics>");
  static MetricsTable load(const std::string& path);

  int fallback() const { return fallback_; }
  int ascent() const { return ascent_; }
  int descent() const { return descent_; }

  void set_glyph(char32_t cp, int advance) { glyphs_[cp] = advance; }
  void set_word(std::string word, int advance) { words_[std::move(word)] = advance; }
  void set_fallback(int advance) { fallback_ = advance; }

  // Width in milli-em. Unknown glyphs use the fallback and, when `warnings`
  // is given, append a kUnknownGlyph diagnostic.
  double measure_milli_em(std::string_view text, Warnings* warnings = nullptr) const;

  // Width in points.
  double measure(std::string_view text, const RenderConfig& cfg,
                 Warnings* warnings = nullptr) const;

 private:
  double glyph(char32_t cp, Warnings* warnings) const;

  std::map<char32_t, int> glyphs_;
  std::map<std::string, int, std::less<>> words_;
  int fallback_ = kUniformAdvance;
  int ascent_ = 700;
  int descent_ = 300;
};

// Auto-width of a horizontal morphism between nodes `a` and `b` carrying
// `label`: the box "a label label b" is halved, converted to logical units,
// widened by 350 and raised to at least 500. Divisions truncate in that
// order. The label is scaled by cfg.label_scale.
std::int64_t morphism_width(const MetricsTable& metrics, std::string_view a,
                            std::string_view b, std::string_view label,
                            const RenderConfig& cfg, Warnings* warnings = nullptr);

// Length of an inline arrow: an explicit non-zero length wins; otherwise the
// widest label in logical units plus the 150-unit default margin, raised to
// at least `floor_units`.
std::int64_t inline_length(const MetricsTable& metrics,
                           std::span<const std::string> labels,
                           std::int64_t floor_units, std::int64_t explicit_len,
                           const RenderConfig& cfg, Warnings* warnings = nullptr);

inline constexpr std::int64_t kDefaultSpan = 500;
inline constexpr std::int64_t kDefaultMargin = 150;

}  // namespace diagxy
