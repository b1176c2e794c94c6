#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfpat/core_poly.hpp"

namespace gfpat {

enum class Origin { top_left, bottom_left };

/// Per-axis geometric shrink: column k is base_cell * rx^k wide, displayed
/// row l is base_cell * ry^l tall.
struct Perspective {
  double rx = 1.0;
  double ry = 1.0;
};

struct RenderConfig {
  char glyph_on = '#';
  char glyph_off = '.';
  Origin origin = Origin::top_left;
  double base_cell = 10.0;
  std::optional<Perspective> perspective;

  void validate() const {
    if (glyph_on == glyph_off) throw std::invalid_argument("on and off glyphs must differ");
    if (!(base_cell > 0)) throw std::invalid_argument("cell size must be positive");
    if (perspective) {
      for (double r : {perspective->rx, perspective->ry}) {
        if (!(r > 0.0 && r <= 1.0)) {
          throw std::invalid_argument("perspective ratios must lie in (0, 1]");
        }
      }
    }
  }
};

namespace detail {

/// Display line for y exponent j.
inline int display_row(int j, const Window& w, Origin origin) {
  return origin == Origin::top_left ? j : w.n - j;
}

inline std::vector<std::vector<bool>> raster(const Poly& p, const Window& w, Origin origin) {
  std::vector<std::vector<bool>> rows(w.height(), std::vector<bool>(w.width(), false));
  for (const auto& t : p.terms()) {
    if (w.contains(t)) rows[display_row(t.j, w, origin)][t.i] = true;
  }
  return rows;
}

inline std::string svg_number(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace detail

/// (n+1) lines of (m+1) glyphs joined by '\n', no trailing newline. Column
/// index is the x exponent; with origin top_left the first line is y = 0.
inline std::string render_ascii(const Poly& p, const Window& w, const RenderConfig& cfg = {}) {
  cfg.validate();
  std::string out;
  const auto rows = detail::raster(p, w, cfg.origin);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) out += '\n';
    for (bool on : rows[r]) out += on ? cfg.glyph_on : cfg.glyph_off;
  }
  return out;
}

/// Plain PBM (P1): header "P1\n<width> <height>\n", then one line per row of
/// space-separated 0/1, first row y = 0.
inline std::string render_pbm(const Poly& p, const Window& w) {
  std::string out = "P1\n" + std::to_string(w.width()) + " " + std::to_string(w.height()) + "\n";
  for (const auto& row : detail::raster(p, w, Origin::top_left)) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ' ';
      out += row[c] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

/// SVG with one black rect per pattern point. Cell sizes are uniform
/// (base_cell) unless a perspective is configured.
inline std::string render_svg(const Poly& p, const Window& w, const RenderConfig& cfg = {}) {
  cfg.validate();
  const double rx = cfg.perspective ? cfg.perspective->rx : 1.0;
  const double ry = cfg.perspective ? cfg.perspective->ry : 1.0;

  // Cumulative offsets: xs[k] is the left edge of column k, xs[width] the
  // total width.
  auto edges = [&](int count, double ratio) {
    std::vector<double> e(count + 1, 0.0);
    double size = cfg.base_cell;
    for (int k = 0; k < count; ++k) {
      e[k + 1] = e[k] + size;
      size *= ratio;
    }
    return e;
  };
  const auto xs = edges(w.width(), rx);
  const auto ys = edges(w.height(), ry);

  using detail::svg_number;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         svg_number(xs.back()) + "\" height=\"" + svg_number(ys.back()) + "\" viewBox=\"0 0 " +
         svg_number(xs.back()) + " " + svg_number(ys.back()) + "\">\n";
  const auto rows = detail::raster(p, w, cfg.origin);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (!rows[r][c]) continue;
      out += "  <rect x=\"" + svg_number(xs[c]) + "\" y=\"" + svg_number(ys[r]) +
             "\" width=\"" + svg_number(xs[c + 1] - xs[c]) + "\" height=\"" +
             svg_number(ys[r + 1] - ys[r]) + "\" fill=\"black\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace gfpat
