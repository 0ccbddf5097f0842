#include "compactum/svg.hpp"

#include "compactum/error.hpp"

namespace compactum {

namespace {

std::string caption(const SliceResult& r) {
  std::string text = to_string(r.axes[0]) + "," + to_string(r.axes[1]);
  if (r.fixed.empty()) return "projection onto " + text;
  text = "section in " + text + " at";
  for (const auto& f : r.fixed) text += " " + to_string(f.axis) + "=" + to_text(f.value);
  return text;
}

}  // namespace

std::string render_svg(const SliceResult& r, const RenderStyle& style) {
  const int span = style.canvas - 2 * style.margin;
  auto coord = [&](const Point2& p) {
    if (p.u < 0 || p.u > 1 || p.v < 0 || p.v > 1) {
      throw Error(ErrorCode::OutOfRange,
                  "point (" + to_text(p.u) + ", " + to_text(p.v) + ") outside the unit square");
    }
    const Rational x = style.margin + span * p.u;
    const Rational y = style.margin + span - span * p.v;
    return std::pair{to_decimal(x, style.digits), to_decimal(y, style.digits)};
  };
  auto dot = [&](const Point2& p, int radius) {
    const std::string y = coord(p).second;
    const std::string rad = std::to_string(radius);
    // two half-circle arcs starting and ending at the leftmost point
    const Rational cx = style.margin + span * p.u;
    return "M" + to_decimal(cx - radius, style.digits) + " " + y + " a" + rad + " " + rad + " 0 1 0 " +
           std::to_string(2 * radius) + " 0 a" + rad + " " + rad + " 0 1 0 " +
           std::to_string(-2 * radius) + " 0 Z";
  };

  const std::string size = std::to_string(style.canvas);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size +
                    "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  out += "<title>" + caption(r) + "</title>\n";
  const std::string stroke =
      "stroke=\"" + style.line_color + "\" stroke-width=\"" + std::to_string(style.stroke_width) + "\"";
  for (const auto& item : r.items) {
    std::string d;
    std::string fill = "none";
    switch (item.kind) {
      case Kind2::Point:
        d = dot(item.points[0], item.marker ? style.marker_radius : style.point_radius);
        fill = style.line_color;
        break;
      case Kind2::Segment:
      case Kind2::Polygon:
        for (std::size_t i = 0; i < item.points.size(); ++i) {
          const auto [x, y] = coord(item.points[i]);
          d += (i == 0 ? "M" : " L") + x + " " + y;
        }
        if (item.kind == Kind2::Polygon) {
          d += " Z";
          fill = style.fill_color;
        }
        break;
    }
    out += "<path data-label=\"" + to_string(item.label) + "\" d=\"" + d + "\" fill=\"" + fill + "\" " +
           stroke + "/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace compactum
