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

#include "diagxy/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace diagxy {
namespace {

struct WordGlyph {
  std::string_view word;
  char32_t glyph;
};

constexpr WordGlyph kReplacementGlyphs[] = {
    {"alpha", U'α'},   {"beta", U'β'},    {"gamma", U'γ'},
    {"delta", U'δ'},   {"epsilon", U'ε'}, {"varepsilon", U'ε'},
    {"zeta", U'ζ'},    {"eta", U'η'},     {"theta", U'θ'},
    {"iota", U'ι'},    {"kappa", U'κ'},   {"lambda", U'λ'},
    {"mu", U'μ'},      {"nu", U'ν'},      {"xi", U'ξ'},
    {"pi", U'π'},      {"rho", U'ρ'},     {"sigma", U'σ'},
    {"tau", U'τ'},     {"upsilon", U'υ'}, {"phi", U'φ'},
    {"varphi", U'φ'},  {"chi", U'χ'},     {"psi", U'ψ'},
    {"omega", U'ω'},   {"Gamma", U'Γ'},   {"Delta", U'Δ'},
    {"Theta", U'Θ'},   {"Lambda", U'Λ'},  {"Xi", U'Ξ'},
    {"Pi", U'Π'},      {"Sigma", U'Σ'},   {"Upsilon", U'Υ'},
    {"Phi", U'Φ'},     {"Psi", U'Ψ'},     {"Omega", U'Ω'},
    {"times", U'×'},   {"otimes", U'⊗'},  {"oplus", U'⊕'},
    {"circ", U'∘'},    {"cdot", U'⋅'},    {"infty", U'∞'},
    {"prime", U'′'},   {"ell", U'ℓ'},     {"partial", U'∂'},
    {"nabla", U'∇'},   {"in", U'∈'},      {"cap", U'∩'},
    {"cup", U'∪'},     {"coprod", U'∐'},  {"prod", U'∏'},
    {"sum", U'∑'},     {"wedge", U'∧'},   {"vee", U'∨'},
    {"emptyset", U'∅'}, {"to", U'→'},     {"rightarrow", U'→'},
    {"leftarrow", U'←'}, {"Rightarrow", U'⇒'}, {"mapsto", U'↦'},
    {"star", U'⋆'},    {"ast", U'∗'},     {"bullet", U'•'},
    {"dagger", U'†'},  {"amalg", U'⨿'},   {"simeq", U'≃'},
    {"cong", U'≅'},    {"sim", U'∼'},     {"le", U'≤'},
    {"ge", U'≥'},      {"subset", U'⊂'},  {"ldots", U'…'},
    {"cdots", U'⋯'},   {"{", U'{'},            {"}", U'}'},
    {"_", U'_'},            {"&", U'&'},            {"%", U'%'},
    {"#", U'#'},            {"$", U'$'},
};

// Style and grouping words that typeset nothing themselves.
constexpr std::string_view kZeroWidthWords[] = {
    "labelstyle", "scriptstyle", "scriptscriptstyle", "textstyle",
    "displaystyle", "mathrm", "mathbf", "mathit", "mathcal", "mathsf",
    "mathtt", "mathfrak", "mathbb", "rm", "bf", "it", "cal", "sf", "tt",
    "left", "right", "big", "Big", "bigg", "Bigg", "phantom", "hbox",
    "mbox", "text", "operatorname", "limits", "nolimits", "relax", "!",
    "bar", "hat", "tilde", "overline", "underline", "widetilde", "widehat",
};

// Operator names typeset as their letters.
constexpr std::string_view kOperatorWords[] = {
    "lim",  "ker", "hom", "coker", "im",  "id",  "sin", "cos", "log",
    "exp",  "max", "min", "sup",   "inf", "colim", "dim", "deg", "det",
    "Hom",  "End", "Aut", "Ext",   "Tor",
};

constexpr std::pair<std::string_view, int> kSpacingWords[] = {
    {"quad", 1000}, {"qquad", 2000}, {",", 167}, {":", 222}, {";", 278}, {" ", 333},
};

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

// Decodes one UTF-8 sequence starting at s[i]; advances i. Malformed input
// decodes to U+FFFD one byte at a time.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
  auto b0 = static_cast<unsigned char>(s[i]);
  int len = b0 < 0x80 ? 1 : (b0 >> 5) == 0x6 ? 2 : (b0 >> 4) == 0xE ? 3
          : (b0 >> 3) == 0x1E ? 4 : 0;
  if (len == 0 || i + len > s.size()) {
    ++i;
    return U'�';
  }
  char32_t cp = len == 1 ? b0 : b0 & (0xFF >> (len + 1));
  for (int k = 1; k < len; ++k) {
    auto b = static_cast<unsigned char>(s[i + k]);
    if ((b >> 6) != 0x2) {
      ++i;
      return U'�';
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += len;
  return cp;
}

bool zero_width_char(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '{' ||
         c == '}' || c == '$' || c == '^' || c == '_';
}

std::string describe(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

MetricsTable MetricsTable::builtin() {
  MetricsTable t;
  for (char32_t c = 0x21; c <= 0x7E; ++c) t.glyphs_[c] = kUniformAdvance;
  for (const auto& wg : kReplacementGlyphs) t.glyphs_.emplace(wg.glyph, kUniformAdvance);
  for (auto w : kZeroWidthWords) t.words_.emplace(std::string("\\") + std::string(w), 0);
  for (auto [w, adv] : kSpacingWords) t.words_.emplace(std::string("\\") + std::string(w), adv);
  return t;
}

MetricsTable MetricsTable::parse(std::string_view text, std::string_view origin) {
  MetricsTable t = builtin();
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw CompileError(ErrorKind::kMetricsFile,
                       std::string(origin) + ":" + std::to_string(lineno) + ": " + msg,
                       SourcePos{lineno, 1});
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key, value, extra;
    if (!(ls >> key)) continue;
    if (key.front() == '#') continue;
    if (!(ls >> value)) fail("missing advance for \"" + key + "\"");
    if (ls >> extra) fail("trailing text after advance");
    auto adv = parse_int(value);
    if (!adv || *adv < 0) fail("advance must be a non-negative integer: \"" + value + "\"");

    if (key == "fallback") {
      t.fallback_ = *adv;
    } else if (key == "ascent") {
      t.ascent_ = *adv;
    } else if (key == "descent") {
      t.descent_ = *adv;
    } else if (key.front() == '\\' && key.size() > 1) {
      t.words_[key] = *adv;
    } else if (key.size() > 2 && (key.starts_with("U+") || key.starts_with("u+"))) {
      unsigned cp = 0;
      auto [p, ec] = std::from_chars(key.data() + 2, key.data() + key.size(), cp, 16);
      if (ec != std::errc{} || p != key.data() + key.size()) fail("bad code point \"" + key + "\"");
      t.glyphs_[static_cast<char32_t>(cp)] = *adv;
    } else {
      std::size_t i = 0;
      char32_t cp = decode_utf8(key, i);
      if (i == key.size()) {
        t.glyphs_[cp] = *adv;
      } else if (auto dec = parse_int(key); dec && *dec >= 0) {
        t.glyphs_[static_cast<char32_t>(*dec)] = *adv;
      } else {
        fail("unrecognised key \"" + key + "\"");
      }
    }
  }
  return t;
}

MetricsTable MetricsTable::load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CompileError(ErrorKind::kMetricsFile, "cannot open metrics file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), path);
}

double MetricsTable::glyph(char32_t cp, Warnings* warnings) const {
  if (auto it = glyphs_.find(cp); it != glyphs_.end()) return it->second;
  if (warnings) {
    warnings->push_back({ErrorKind::kUnknownGlyph, {}, {},
                         "no metrics for " + describe(cp) + "; using fallback " +
                             std::to_string(fallback_)});
  }
  return fallback_;
}

double MetricsTable::measure_milli_em(std::string_view text, Warnings* warnings) const {
  double total = 0.0;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\\' && i + 1 < text.size()) {
      std::size_t j = i + 1;
      if (is_letter(text[j])) {
        while (j < text.size() && is_letter(text[j])) ++j;
      } else {
        ++j;
      }
      std::string_view word = text.substr(i, j - i);
      std::string_view name = word.substr(1);
      i = j;
      if (auto it = words_.find(word); it != words_.end()) {
        total += it->second;
        continue;
      }
      if (std::find(std::begin(kOperatorWords), std::end(kOperatorWords), name) !=
          std::end(kOperatorWords)) {
        total += measure_milli_em(name, warnings);
        continue;
      }
      auto rg = std::find_if(std::begin(kReplacementGlyphs), std::end(kReplacementGlyphs),
                             [&](const WordGlyph& wg) { return wg.word == name; });
      if (rg != std::end(kReplacementGlyphs)) {
        total += glyph(rg->glyph, warnings);
        continue;
      }
      if (warnings) {
        warnings->push_back({ErrorKind::kUnknownGlyph, {}, {},
                             "no metrics for control sequence " + std::string(word) +
                                 "; using fallback " + std::to_string(fallback_)});
      }
      total += fallback_;
      continue;
    }
    if (zero_width_char(c)) {
      ++i;
      continue;
    }
    total += glyph(decode_utf8(text, i), warnings);
  }
  return total;
}

double MetricsTable::measure(std::string_view text, const RenderConfig& cfg,
                             Warnings* warnings) const {
  return measure_milli_em(text, warnings) * cfg.em_pt / 1000.0;
}

std::int64_t morphism_width(const MetricsTable& metrics, std::string_view a,
                            std::string_view b, std::string_view label,
                            const RenderConfig& cfg, Warnings* warnings) {
  // Box "$a{\labelstyle label label}b$", in milli-em. One logical unit is
  // ten milli-em.
  double box = metrics.measure_milli_em(a, warnings) +
               2.0 * cfg.label_scale * metrics.measure_milli_em(label, warnings) +
               metrics.measure_milli_em(b, warnings);
  double halved = box / 2.0;
  auto w = static_cast<std::int64_t>(std::floor(halved / 10.0));
  w += 350;
  return std::max<std::int64_t>(w, kDefaultSpan);
}

std::int64_t inline_length(const MetricsTable& metrics,
                           std::span<const std::string> labels,
                           std::int64_t floor_units, std::int64_t explicit_len,
                           const RenderConfig& cfg, Warnings* warnings) {
  if (explicit_len != 0) return explicit_len;
  double widest = 0.0;
  for (const auto& l : labels) {
    widest = std::max(widest, cfg.label_scale * metrics.measure_milli_em(l, warnings));
  }
  auto len = static_cast<std::int64_t>(std::floor(widest / 10.0)) + kDefaultMargin;
  return std::max(len, floor_units);
}

}  // namespace diagxy
