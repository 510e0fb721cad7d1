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

#include "diagxy/svg.hpp"

#include <cstdio>
#include <string_view>

namespace diagxy {
namespace {

using T = TipGeometry;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Writer {
 public:
  explicit Writer(std::string& out) : out_(out) {}

  // Screen coordinates flip y.
  std::string pt(Vec2 p) const { return num(p.x) + " " + num(-p.y); }

  void path(std::string_view cls, const std::string& d, std::string_view extra = {}) {
    out_ += "    <path class=\"";
    out_ += cls;
    out_ += "\" d=\"" + d + "\"";
    if (!extra.empty()) {
      out_ += ' ';
      out_ += extra;
    }
    out_ += "/>\n";
  }

  void line(std::string_view cls, Vec2 a, Vec2 b) { path(cls, "M " + pt(a) + " L " + pt(b)); }

 private:
  std::string& out_;
};

std::string dash(Shaft s) {
  switch (s) {
    case Shaft::kDashed: return "stroke-dasharray=\"3 2\"";
    case Shaft::kDotted: return "stroke-dasharray=\"0.4 1.6\" stroke-linecap=\"round\"";
    default: return {};
  }
}

std::string segment(Writer& w, Vec2 a, Vec2 b) { return "M " + w.pt(a) + " L " + w.pt(b); }

std::string curve(Writer& w, Vec2 a, Vec2 c1, Vec2 c2, Vec2 b) {
  return "M " + w.pt(a) + " C " + w.pt(c1) + " " + w.pt(c2) + " " + w.pt(b);
}

void shaft(Writer& w, const ResolvedArrow& r) {
  if (r.style.shaft == Shaft::kInvisible) return;
  const std::string extra = dash(r.style.shaft);
  auto one = [&](double offset) {
    Vec2 n = (r.to - r.from).normalized().left_normal() * offset;
    if (r.loop) {
      // Loops offset each point along its own normal.
      Vec2 n0 = (r.c1 - r.from).normalized().left_normal() * offset;
      Vec2 n1 = (r.to - r.c2).normalized().left_normal() * offset;
      w.path("shaft", curve(w, r.from + n0, r.c1 + n0, r.c2 + n1, r.to + n1), extra);
    } else {
      w.path("shaft", segment(w, r.from + n, r.to + n), extra);
    }
  };
  if (r.style.shaft == Shaft::kDouble) {
    one(T::kDoubleShaftOffset);
    one(-T::kDoubleShaftOffset);
  } else {
    one(0.0);
  }
}

// A chevron whose tip sits at `tip`, pointing along `dir`.
void chevron(Writer& w, std::string_view cls, Vec2 tip, Vec2 dir, double scale, bool filled) {
  const Vec2 u = dir.normalized(), n = u.left_normal();
  const Vec2 back = tip - u * (T::kHeadLength * scale);
  const Vec2 half = n * (T::kHeadWidth * scale / 2);
  std::string d = "M " + w.pt(back + half) + " L " + w.pt(tip) + " L " + w.pt(back - half);
  if (filled) {
    w.path(cls, d + " Z");
  } else {
    w.path(cls, d, "fill=\"none\"");
  }
}

void head(Writer& w, const ResolvedArrow& r, Vec2 at, Vec2 dir) {
  const double s = r.tip_scale;
  switch (r.style.head) {
    case Head::kNone: return;
    case Head::kNormal: chevron(w, "head", at, dir, s, true); return;
    case Head::kDoubleHead:
      chevron(w, "head", at, dir, s, true);
      chevron(w, "head", at - dir.normalized() * (T::kDoubleHeadGap * s), dir, s, true);
      return;
  }
}

void tail(Writer& w, const ResolvedArrow& r, Vec2 at, Vec2 dir) {
  const double s = r.tip_scale;
  const Vec2 u = dir.normalized(), n = u.left_normal();
  switch (r.style.tail) {
    case Tail::kNone: return;
    case Tail::kMono: chevron(w, "tail", at + u * (T::kHeadLength * s), dir, s, false); return;
    case Tail::kBar: {
      const Vec2 h = n * (T::kBarLength * s / 2);
      w.line("tail", at + h, at - h);
      return;
    }
    case Tail::kHookUp:
    case Tail::kHookDown: {
      // Half circle on one side of the shaft, opening forward.
      const double rad = T::kHookRadius * s;
      const Vec2 side = r.style.tail == Tail::kHookUp ? n : -n;
      const Vec2 end = at + side * (2 * rad);
      // Screen coordinates flip y, which mirrors the sweep direction.
      const bool ccw = r.style.tail == Tail::kHookUp;
      w.path("tail", "M " + w.pt(at) + " A " + num(rad) + " " + num(rad) + " 0 0 " +
                         (ccw ? "0" : "1") + " " + w.pt(end),
             "fill=\"none\"");
      return;
    }
  }
}

void mid(Writer& w, const ResolvedArrow& r) {
  if (r.style.mid == Mid::kNone) return;
  const Vec2 m = (r.from + r.to) * 0.5;
  const Vec2 u = (r.to - r.from).normalized(), n = u.left_normal();
  const Vec2 h = n * (T::kTickLength / 2);
  w.line("mid", m + h, m - h);
  if (r.style.mid == Mid::kCross) {
    const Vec2 g = u * (T::kTickLength / 2);
    w.line("mid", m + g, m - g);
  }
}

void decorations(Writer& w, const ResolvedArrow& r) {
  Vec2 end_dir = r.loop ? r.to - r.c2 : r.to - r.from;
  Vec2 start_dir = r.loop ? r.c1 - r.from : r.to - r.from;
  if (r.style.reversed) {
    // Head at the start pointing backwards, tail at the end.
    head(w, r, r.from, -start_dir);
    tail(w, r, r.to, -end_dir);
  } else {
    head(w, r, r.to, end_dir);
    tail(w, r, r.from, start_dir);
  }
  mid(w, r);
}

void text(std::string& out, const std::string& cls, Vec2 baseline, std::string_view anchor,
          std::string_view body, const RenderConfig& cfg) {
  out += "    <text class=\"" + cls + "\" x=\"" + num(baseline.x) + "\" y=\"" +
         num(-baseline.y) + "\" font-size=\"" + num(cfg.em_pt) + "\" stroke=\"none\" text-anchor=\"";
  out += anchor;
  out += "\">" + escape(body) + "</text>\n";
}

}  // namespace

std::string emit_svg(const Layout& layout, const RenderConfig& cfg) {
  const Box b = layout.bounds.inflated(T::kPadding, T::kPadding);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" font-family=\"serif\" viewBox=\"" + num(b.x0) +
         " " + num(-b.y1) + " " + num(b.width()) + " " + num(b.height()) + "\" width=\"" +
         num(b.width()) + "pt\" height=\"" + num(b.height()) + "pt\">\n";
  out += "  <g class=\"arrows\" stroke=\"black\" stroke-width=\"" + num(T::kStrokeWidth) +
         "\" fill=\"black\">\n";
  Writer w(out);
  for (const auto& r : layout.arrows) {
    shaft(w, r);
    decorations(w, r);
    for (const auto& l : r.labels) {
      if (l.backing) {
        const Box& m = *l.backing;
        out += "    <rect class=\"mask\" x=\"" + num(m.x0) + "\" y=\"" + num(-m.y1) +
               "\" width=\"" + num(m.width()) + "\" height=\"" + num(m.height()) +
               "\" fill=\"white\" stroke=\"none\"/>\n";
      }
      const double desc = l.height * 0.3;
      Vec2 base{l.center.x, l.center.y - l.height / 2 + desc};
      text(out, "label", base, "middle", l.text, cfg);
    }
  }
  out += "  </g>\n";
  out += "  <g class=\"nodes\" fill=\"black\">\n";
  for (const auto& n : layout.nodes) {
    if (n.node.phantom || n.node.text.empty()) continue;
    text(out, "node", n.box.baseline, "start", n.node.text, cfg);
  }
  out += "  </g>\n</svg>\n";
  return out;
}

}  // namespace diagxy
