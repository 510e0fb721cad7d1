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

#include "diagxy/arrow_style.hpp"

#include <array>
#include <charconv>
#include <numbers>
#include <optional>
#include <system_error>

#include "diagxy/error.hpp"

namespace diagxy {

std::string_view to_string(Tail t) {
  switch (t) {
    case Tail::kNone: return "none";
    case Tail::kMono: return "mono";
    case Tail::kHookUp: return "hook_up";
    case Tail::kHookDown: return "hook_down";
    case Tail::kBar: return "bar";
  }
  return "none";
}

std::string_view to_string(Shaft s) {
  switch (s) {
    case Shaft::kSolid: return "solid";
    case Shaft::kDashed: return "dashed";
    case Shaft::kDotted: return "dotted";
    case Shaft::kDouble: return "double";
    case Shaft::kInvisible: return "invisible";
  }
  return "solid";
}

std::string_view to_string(Head h) {
  switch (h) {
    case Head::kNone: return "none";
    case Head::kNormal: return "normal";
    case Head::kDoubleHead: return "double_head";
  }
  return "none";
}

std::string_view to_string(Mid m) {
  switch (m) {
    case Mid::kNone: return "none";
    case Mid::kTick: return "tick";
    case Mid::kCross: return "cross";
  }
  return "none";
}

namespace {

[[noreturn]] void unsupported(std::string_view spec, std::size_t offset,
                              std::string_view why) {
  throw CompileError(ErrorKind::kUnsupportedArrowSpec,
                     "arrow spec \"" + std::string(spec) + "\" at offset " +
                         std::to_string(offset) + ": " + std::string(why));
}

bool is_shaft_char(char c) { return c == '-' || c == '.' || c == '='; }

std::optional<Tail> forward_tail(std::string_view p) {
  if (p.empty()) return Tail::kNone;
  if (p == " >" || p == ">") return Tail::kMono;
  if (p == "|") return Tail::kBar;
  if (p == "^{ (}" || p == " (" || p == "(" || p == "^(" || p == "^{(}" ||
      p == "{into}" || p == "into")
    return Tail::kHookUp;
  if (p == "_{ (}" || p == "_(" || p == "_{(}") return Tail::kHookDown;
  return std::nullopt;
}

std::optional<Head> forward_head(std::string_view s) {
  if (s.empty()) return Head::kNone;
  if (s == ">") return Head::kNormal;
  if (s == ">>" || s == " >>") return Head::kDoubleHead;
  return std::nullopt;
}

std::optional<Head> reversed_head(std::string_view p) {
  if (p == "<") return Head::kNormal;
  if (p == "<<") return Head::kDoubleHead;
  return std::nullopt;
}

std::optional<Tail> reversed_tail(std::string_view s) {
  if (s.empty()) return Tail::kNone;
  if (s == "< " || s == "<") return Tail::kMono;
  if (s == "|") return Tail::kBar;
  if (s == ") " || s == ")") return Tail::kHookUp;
  return std::nullopt;
}

std::optional<Shaft> shaft_of(std::string_view run) {
  if (run == "-") return Shaft::kSolid;
  if (run == "--") return Shaft::kDashed;
  if (run == "." || run == "..") return Shaft::kDotted;
  if (run == "=" || run == "==") return Shaft::kDouble;
  return std::nullopt;
}

// `base` is the offset of `dir` inside the user's full spec, for messages.
ArrowStyle parse_directional(std::string_view full, std::string_view dir,
                             std::size_t base) {
  ArrowStyle st;
  if (dir.empty()) {
    st.shaft = Shaft::kInvisible;
    st.head = Head::kNone;
    return st;
  }
  if (dir == "d") {
    st.shaft = Shaft::kDotted;
    st.head = Head::kNone;
    return st;
  }

  std::size_t i = 0;
  int depth = 0;
  for (; i < dir.size(); ++i) {
    char c = dir[i];
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (depth == 0 && is_shaft_char(c)) break;
  }
  if (i == dir.size()) {
    if (auto h = forward_head(dir)) {
      st.head = *h;
      return st;
    }
    if (auto h = reversed_head(dir)) {
      st.head = *h;
      st.reversed = true;
      return st;
    }
    unsupported(full, base, "no shaft and not a bare tip");
  }
  std::size_t j = i;
  while (j < dir.size() && is_shaft_char(dir[j])) ++j;

  std::string_view prefix = dir.substr(0, i);
  std::string_view run = dir.substr(i, j - i);
  std::string_view suffix = dir.substr(j);

  auto shaft = shaft_of(run);
  if (!shaft) unsupported(full, base + i, "unknown shaft \"" + std::string(run) + "\"");
  st.shaft = *shaft;

  if (auto h = reversed_head(prefix)) {
    auto t = reversed_tail(suffix);
    if (!t) unsupported(full, base + j, "unknown tail \"" + std::string(suffix) + "\"");
    st.head = *h;
    st.tail = *t;
    st.reversed = true;
    return st;
  }
  auto t = forward_tail(prefix);
  if (!t) unsupported(full, base, "unknown tail \"" + std::string(prefix) + "\"");
  auto h = forward_head(suffix);
  if (!h) unsupported(full, base + j, "unknown head \"" + std::string(suffix) + "\"");
  st.tail = *t;
  st.head = *h;
  return st;
}

// Index just past the brace group opening at `open`, or npos.
std::size_t match_brace(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t k = open; k < s.size(); ++k) {
    if (s[k] == '{') ++depth;
    if (s[k] == '}' && --depth == 0) return k + 1;
  }
  return std::string_view::npos;
}

ArrowStyle parse_raw(std::string_view spec) {
  ArrowStyle st;
  bool have_dir = false;
  std::optional<double> offset;
  Mid mid = Mid::kNone;

  std::size_t k = 0;
  while (k < spec.size()) {
    std::string_view rest = spec.substr(k);
    if (rest.front() == ' ') {
      ++k;
      continue;
    }
    if (rest.starts_with("@{")) {
      if (have_dir) unsupported(spec, k, "second directional");
      std::size_t end = match_brace(spec, k + 1);
      if (end == std::string_view::npos) unsupported(spec, k, "unbalanced brace");
      st = parse_directional(spec, spec.substr(k + 2, end - k - 3), k + 2);
      have_dir = true;
      k = end;
      continue;
    }
    if (rest.starts_with("@<")) {
      std::size_t close = spec.find('>', k);
      if (close == std::string_view::npos) unsupported(spec, k, "unterminated @<...>");
      std::string_view dim = spec.substr(k + 2, close - k - 2);
      if (!dim.ends_with("pt")) unsupported(spec, k + 2, "offset must be in pt");
      dim.remove_suffix(2);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(dim.data(), dim.data() + dim.size(), v);
      if (ec != std::errc{} || ptr != dim.data() + dim.size())
        unsupported(spec, k + 2, "bad offset dimension");
      offset = v;
      k = close + 1;
      continue;
    }
    if (rest.starts_with("|-*@{|}") || rest.starts_with("|*@{|}")) {
      mid = Mid::kTick;
      k += rest.starts_with("|-") ? 7 : 6;
      continue;
    }
    if (rest.starts_with("|-*@{+}") || rest.starts_with("|*@{+}")) {
      mid = Mid::kCross;
      k += rest.starts_with("|-") ? 7 : 6;
      continue;
    }
    unsupported(spec, k, "unsupported modifier");
  }
  st.mid = mid;
  if (offset) st.parallel_offset_pt = *offset;
  return st;
}

}  // namespace

ArrowStyle parse_arrow_spec(std::string_view spec) {
  if (spec.size() >= 2 && spec.front() == '{' &&
      match_brace(spec, 0) == spec.size()) {
    spec = spec.substr(1, spec.size() - 2);
  }
  if (!spec.empty() && spec.front() == '@') return parse_raw(spec);
  return parse_directional(spec, spec, 0);
}

ArrowStyle reversed(ArrowStyle style) {
  style.reversed = !style.reversed;
  return style;
}

Vec2 resolve_compass(std::string_view d) {
  constexpr double s = std::numbers::sqrt2 / 2.0;
  if (d == "l") return {-1.0, 0.0};
  if (d == "r") return {1.0, 0.0};
  if (d == "u") return {0.0, 1.0};
  if (d == "d") return {0.0, -1.0};
  if (d == "ul" || d == "lu") return {-s, s};
  if (d == "ur" || d == "ru") return {s, s};
  if (d == "dl" || d == "ld") return {-s, -s};
  if (d == "dr" || d == "rd") return {s, -s};
  throw CompileError(ErrorKind::kBadDirection,
                     "unknown compass direction \"" + std::string(d) + "\"");
}

}  // namespace diagxy
