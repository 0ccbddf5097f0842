#pragma once

#include <array>
#include <optional>
#include <vector>

#include "compactum/geometry.hpp"

namespace compactum {

struct Point2 {
  Rational u;
  Rational v;

  bool operator==(const Point2&) const = default;
  bool operator<(const Point2& o) const { return u != o.u ? u < o.u : v < o.v; }
};

enum class Kind2 : std::uint8_t { Point, Segment, Polygon };

/// 2D piece of a section or projection. Polygons are filled, convex, and
/// listed counter-clockwise from their smallest vertex; segments run from
/// the smaller endpoint. Markers are the dots of the (x3, x4) projections.
struct Primitive2 {
  Kind2 kind = Kind2::Point;
  std::vector<Point2> points;
  Label label;
  bool marker = false;

  bool operator==(const Primitive2&) const = default;
};

struct FixedCoord {
  Axis axis;
  Rational value;

  bool operator==(const FixedCoord&) const = default;
};

struct SliceResult {
  std::array<Axis, 2> axes{Axis::X1, Axis::X2};  // horizontal, vertical
  std::vector<FixedCoord> fixed;                 // empty for projections
  std::vector<Primitive2> items;

  std::size_t count(Kind2 kind) const;
  bool operator==(const SliceResult&) const = default;
};

/// Exact intersection of every primitive with the plane fixing two axes.
/// Patches and triangles must be planar and convex. Points lying on a
/// segment or polygon, and segments lying in a polygon or on another
/// segment, are absorbed. The wall faces are sliced as the solid they bound.
/// `free_axes` defaults to the two remaining axes in increasing order.
/// Throws OutOfRange for values outside [0, 1], InvalidSlice for bad axes.
SliceResult slice_scene(const Scene4& s, const FixedCoord& first, const FixedCoord& second,
                        std::optional<std::array<Axis, 2>> free_axes = std::nullopt);

/// Forgets the other two coordinates. Collinear overlapping segments are
/// merged and contained pieces absorbed. Onto (x3, x4) the square and the
/// spine end at x3 = 1 also produce marker dots.
SliceResult project_scene(const Scene4& s, Axis horizontal, Axis vertical);

/// Exact containment predicates used by the slicer.
bool on_segment(const Point2& p, const Point2& a, const Point2& b);
bool in_convex_polygon(const Point2& p, const std::vector<Point2>& ccw);

/// Counter-clockwise hull without collinear vertices.
std::vector<Point2> convex_hull(std::vector<Point2> pts);

}  // namespace compactum
