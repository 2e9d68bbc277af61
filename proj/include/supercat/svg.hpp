#pragma once

// Static SVG rendering of a bijection trace: panel 1 shows F = F1 F2 with the
// F1/F2 boundary and the replaced step u->v; panel 2 shows the output path
// with the flipped step x->y' and the raised tail of F it replaces.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "supercat/bijection.hpp"

namespace supercat::svg {

inline constexpr int kUnit = 24;    // pixels per lattice step
inline constexpr int kMargin = 32;  // around each panel
inline constexpr int kTitle = 20;   // title band above each panel
inline constexpr const char* kGridColor = "#dddddd";
inline constexpr const char* kF1Color = "#1f77b4";
inline constexpr const char* kF2Color = "#d62728";
inline constexpr const char* kPathColor = "#2ca02c";
inline constexpr const char* kGhostColor = "#7f7f7f";
inline constexpr const char* kMarkColor = "#000000";

namespace detail {

struct Panel {
  int width_steps;
  int height_levels;
  int top;  // pixel offset of the panel

  int px(std::size_t i) const { return kMargin + static_cast<int>(i) * kUnit; }
  int py(int level) const { return top + kTitle + kMargin + (height_levels - level) * kUnit; }
  int pixel_height() const { return kTitle + 2 * kMargin + height_levels * kUnit; }
};

inline void grid(std::ostringstream& out, const Panel& p) {
  out << "  <g stroke=\"" << kGridColor << "\" stroke-width=\"1\">\n";
  for (int i = 0; i <= p.width_steps; ++i) {
    out << "    <line x1=\"" << p.px(static_cast<std::size_t>(i)) << "\" y1=\"" << p.py(p.height_levels) << "\" x2=\""
        << p.px(static_cast<std::size_t>(i)) << "\" y2=\"" << p.py(0) << "\"/>\n";
  }
  for (int l = 0; l <= p.height_levels; ++l) {
    out << "    <line x1=\"" << p.px(0) << "\" y1=\"" << p.py(l) << "\" x2=\""
        << p.px(static_cast<std::size_t>(p.width_steps)) << "\" y2=\"" << p.py(l) << "\"/>\n";
  }
  out << "  </g>\n";
}

inline std::string points_attr(const Panel& p, const std::vector<int>& levels, std::size_t first, std::size_t last,
                               int lift = 0) {
  std::ostringstream s;
  for (std::size_t i = first; i <= last; ++i) {
    if (i != first) s << ' ';
    s << p.px(i) << ',' << p.py(levels[i] + lift);
  }
  return s.str();
}

inline void mark(std::ostringstream& out, const Panel& p, const char* name, std::size_t index, int level) {
  out << "  <circle cx=\"" << p.px(index) << "\" cy=\"" << p.py(level) << "\" r=\"4\" fill=\"" << kMarkColor
      << "\"/>\n";
  out << "  <text x=\"" << p.px(index) + 5 << "\" y=\"" << p.py(level) - 6 << "\" font-size=\"12\">" << name
      << "</text>\n";
}

inline void title(std::ostringstream& out, const Panel& p, const std::string& text) {
  out << "  <text x=\"" << kMargin << "\" y=\"" << p.top + kTitle << "\" font-size=\"14\">" << text << "</text>\n";
}

}  // namespace detail

inline std::string render(const BijectionTrace& t) {
  const Path& f = t.intermediate.f;
  const std::size_t boundary = t.intermediate.boundary;
  const auto f_levels = f.levels();
  const auto d_levels = t.output.levels();
  const int steps = static_cast<int>(f.length());
  const int top_level = std::max(f.height(), 1);

  detail::Panel first{steps, top_level, 0};
  detail::Panel second{steps, top_level, first.pixel_height()};
  const int width = 2 * kMargin + steps * kUnit;
  const int height = first.pixel_height() + second.pixel_height();

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";

  // Panel 1: F = F1 F2.
  detail::title(out, first, "F = F1 F2 from P = " + (t.p.empty() ? std::string("(empty)") : t.p.str()) +
                                ", Q = " + (t.q.empty() ? std::string("(empty)") : t.q.str()));
  detail::grid(out, first);
  out << "  <polyline class=\"path\" fill=\"none\" stroke=\"" << kF1Color << "\" stroke-width=\"3\" points=\""
      << detail::points_attr(first, f_levels, 0, f.length()) << "\"/>\n";
  out << "  <path class=\"f2\" fill=\"none\" stroke=\"" << kF2Color << "\" stroke-width=\"3\" d=\"M "
      << detail::points_attr(first, f_levels, boundary, f.length()) << "\"/>\n";
  out << "  <line class=\"replaced\" stroke=\"" << kGhostColor << "\" stroke-dasharray=\"4 3\" x1=\""
      << first.px(t.u.index) << "\" y1=\"" << first.py(t.u.level) << "\" x2=\"" << first.px(t.v.index) << "\" y2=\""
      << first.py(t.v.level) << "\"/>\n";
  out << "  <line class=\"boundary\" stroke=\"" << kMarkColor << "\" stroke-dasharray=\"2 2\" x1=\""
      << first.px(boundary) << "\" y1=\"" << first.py(top_level) << "\" x2=\"" << first.px(boundary) << "\" y2=\""
      << first.py(0) << "\"/>\n";
  detail::mark(out, first, "u", t.u.index, t.u.level);
  detail::mark(out, first, "v", t.v.index, t.v.level);
  detail::mark(out, first, "v'", t.v_prime.index, t.v_prime.level);

  // Panel 2: the output path, with the part of F it replaces.
  detail::title(out, second, "D = " + t.output.str());
  detail::grid(out, second);
  out << "  <polyline class=\"path\" fill=\"none\" stroke=\"" << kPathColor << "\" stroke-width=\"3\" points=\""
      << detail::points_attr(second, d_levels, 0, t.output.length()) << "\"/>\n";
  out << "  <path class=\"replaced\" fill=\"none\" stroke=\"" << kGhostColor << "\" stroke-dasharray=\"4 3\" d=\"M "
      << detail::points_attr(second, f_levels, t.x.index, f.length()) << "\"/>\n";
  detail::mark(out, second, "x", t.x.index, t.x.level);
  detail::mark(out, second, "y", t.y.index, t.y.level);
  detail::mark(out, second, "y'", t.y_prime.index, t.y_prime.level);

  out << "</svg>\n";
  return out.str();
}

}  // namespace supercat::svg
