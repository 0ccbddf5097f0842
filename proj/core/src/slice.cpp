#include "compactum/slice.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "compactum/error.hpp"

namespace compactum {

std::size_t SliceResult::count(Kind2 kind) const {
  return static_cast<std::size_t>(std::count_if(
      items.begin(), items.end(), [&](const Primitive2& p) { return p.kind == kind && !p.marker; }));
}

namespace {

using Vec4 = std::array<Rational, 4>;

Vec4 diff(const Point4& a, const Point4& b) {
  Vec4 d;
  for (std::size_t k = 0; k < 4; ++k) d[k] = a.x[k] - b.x[k];
  return d;
}

bool is_zero(const Vec4& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

bool parallel(const Vec4& a, const Vec4& b) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
}

// A planar convex piece in its own affine frame: points are
// origin + s * basis[0] + t * basis[1], with (s, t) in `hull`.
struct Cell {
  Point4 origin;
  std::vector<Vec4> basis;
  std::vector<Point2> hull;  // CCW polygon (dim 2), [min, max] on u (dim 1), {0} (dim 0)

  std::size_t dim() const { return basis.size(); }

  Point4 at(const Point2& st) const {
    Point4 p = origin;
    for (std::size_t k = 0; k < 4; ++k) {
      if (dim() > 0) p.x[k] += st.u * basis[0][k];
      if (dim() > 1) p.x[k] += st.v * basis[1][k];
    }
    return p;
  }
};

std::vector<Point4> boundary_corners(const Primitive4& p) {
  switch (p.kind) {
    case PrimitiveKind::Segment: return {p.points[0], p.points[1]};
    case PrimitiveKind::Triangle: return {p.points[0], p.points[1], p.points[2]};
    case PrimitiveKind::Patch: return {p.points[0], p.points[2], p.points[3], p.points[1]};
  }
  return {};
}

Cell make_cell(const Primitive4& prim) {
  const auto corners = boundary_corners(prim);
  Cell cell;
  cell.origin = corners.front();
  for (const auto& c : corners) {
    const Vec4 d = diff(c, cell.origin);
    if (is_zero(d) || cell.dim() == 2) continue;
    if (cell.dim() == 0 || !parallel(cell.basis[0], d)) cell.basis.push_back(d);
  }

  std::vector<Point2> params;
  if (cell.dim() == 1) {
    const Vec4& e = cell.basis[0];
    const auto k = static_cast<std::size_t>(
        std::find_if(e.begin(), e.end(), [](const Rational& r) { return r != 0; }) - e.begin());
    for (const auto& c : corners) params.push_back({diff(c, cell.origin)[k] / e[k], 0});
  } else if (cell.dim() == 2) {
    const Vec4& e1 = cell.basis[0];
    const Vec4& e2 = cell.basis[1];
    std::size_t p = 0, q = 1;
    bool found = false;
    for (std::size_t i = 0; i < 4 && !found; ++i) {
      for (std::size_t j = i + 1; j < 4 && !found; ++j) {
        if (e1[i] * e2[j] != e1[j] * e2[i]) {
          p = i;
          q = j;
          found = true;
        }
      }
    }
    const Rational det = e1[p] * e2[q] - e1[q] * e2[p];
    for (const auto& c : corners) {
      const Vec4 d = diff(c, cell.origin);
      const Point2 st{(d[p] * e2[q] - d[q] * e2[p]) / det, (e1[p] * d[q] - e1[q] * d[p]) / det};
      if (!(cell.at(st) == c)) {
        throw Error(ErrorCode::InvalidPrimitive, to_string(prim.label) + " is not planar");
      }
      params.push_back(st);
    }
    if (prim.kind == PrimitiveKind::Patch) {
      std::vector<Point2> ring;
      for (const auto& st : params) {
        if (ring.empty() || !(ring.back() == st)) ring.push_back(st);
      }
      while (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
      int sign = 0;
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const Rational c = cross(ring[i], ring[(i + 1) % ring.size()], ring[(i + 2) % ring.size()]);
        const int sg = sgn(c);
        if (sg != 0 && sign != 0 && sg != sign) {
          throw Error(ErrorCode::InvalidPrimitive, to_string(prim.label) + " is not convex");
        }
        if (sg != 0) sign = sg;
      }
    }
  }

  if (cell.dim() == 2) {
    cell.hull = convex_hull(params);
  } else if (cell.dim() == 1) {
    const auto [lo, hi] = std::minmax_element(params.begin(), params.end());
    cell.hull = {*lo, *hi};
  } else {
    cell.hull = {{0, 0}};
  }
  return cell;
}

struct Box {
  Vec4 lo;
  Vec4 hi;
};

std::optional<Box> wall_box(const Scene4& s) {
  std::optional<Box> box;
  for (const auto& prim : s.primitives()) {
    if (prim.label.tag != Tag::Wall) continue;
    for (const auto& p : prim.points) {
      if (!box) box = Box{p.x, p.x};
      for (std::size_t k = 0; k < 4; ++k) {
        if (p.x[k] < box->lo[k]) box->lo[k] = p.x[k];
        if (p.x[k] > box->hi[k]) box->hi[k] = p.x[k];
      }
    }
  }
  return box;
}

Label first_label(const Scene4& s, Tag tag) {
  for (const auto& prim : s.primitives()) {
    if (prim.label.tag == tag) return prim.label;
  }
  return {tag};
}

std::optional<Primitive2> from_points(std::vector<Point2> pts, const Label& label) {
  if (pts.empty()) return std::nullopt;
  auto hull = convex_hull(std::move(pts));
  Primitive2 out;
  out.label = label;
  out.kind = hull.size() == 1 ? Kind2::Point : hull.size() == 2 ? Kind2::Segment : Kind2::Polygon;
  out.points = std::move(hull);
  return out;
}

Point2 project(const Point4& p, const std::array<Axis, 2>& axes) {
  return {p[axes[0]], p[axes[1]]};
}

// Solutions (s, t) in the cell's parameter hull of the two coordinate equations.
std::vector<Point2> solve_cell(const Cell& cell, const FixedCoord& c1, const FixedCoord& c2) {
  const auto a = static_cast<std::size_t>(c1.axis);
  const auto b = static_cast<std::size_t>(c2.axis);
  const Rational ra = c1.value - cell.origin.x[a];
  const Rational rb = c2.value - cell.origin.x[b];

  if (cell.dim() == 0) {
    if (ra == 0 && rb == 0) return {{0, 0}};
    return {};
  }
  if (cell.dim() == 1) {
    std::optional<Rational> s;
    for (const auto& [coef, rhs] : {std::pair{cell.basis[0][a], ra}, std::pair{cell.basis[0][b], rb}}) {
      if (coef == 0) {
        if (rhs != 0) return {};
        continue;
      }
      const Rational v = rhs / coef;
      if (s && *s != v) return {};
      s = v;
    }
    const Rational lo = cell.hull[0].u;
    const Rational hi = cell.hull[1].u;
    if (!s) return cell.hull;
    if (*s < lo || *s > hi) return {};
    return {{*s, 0}};
  }

  // two equations in (s, t): row = (coef_s, coef_t, rhs)
  const std::array<Rational, 3> r1{cell.basis[0][a], cell.basis[1][a], ra};
  const std::array<Rational, 3> r2{cell.basis[0][b], cell.basis[1][b], rb};
  const Rational det = r1[0] * r2[1] - r1[1] * r2[0];
  if (det != 0) {
    const Point2 st{(r1[2] * r2[1] - r1[1] * r2[2]) / det, (r1[0] * r2[2] - r1[2] * r2[0]) / det};
    if (in_convex_polygon(st, cell.hull)) return {st};
    return {};
  }
  const bool zero1 = r1[0] == 0 && r1[1] == 0;
  const bool zero2 = r2[0] == 0 && r2[1] == 0;
  if (zero1 && zero2) {
    if (r1[2] == 0 && r2[2] == 0) return cell.hull;
    return {};
  }
  const auto& row = zero1 ? r2 : r1;
  const auto& other = zero1 ? r1 : r2;
  if (zero1 || zero2) {
    if (other[2] != 0) return {};
  } else {
    const Rational lambda = row[0] != 0 ? other[0] / row[0] : other[1] / row[1];
    if (other[2] != lambda * row[2]) return {};
  }

  // line row[0] s + row[1] t = row[2], clipped to the CCW hull
  const Point2 p0 = row[0] != 0 ? Point2{row[2] / row[0], 0} : Point2{0, row[2] / row[1]};
  const Point2 dir{-row[1], row[0]};
  std::optional<Rational> lo, hi;
  const auto& h = cell.hull;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Point2& p = h[i];
    const Point2& q = h[(i + 1) % h.size()];
    const Rational ex = q.u - p.u;
    const Rational ey = q.v - p.v;
    const Rational base = ex * (p0.v - p.v) - ey * (p0.u - p.u);
    const Rational slope = ex * dir.v - ey * dir.u;
    if (slope == 0) {
      if (base < 0) return {};
      continue;
    }
    const Rational bound = -base / slope;
    if (slope > 0) {
      if (!lo || bound > *lo) lo = bound;
    } else {
      if (!hi || bound < *hi) hi = bound;
    }
  }
  if (!lo || !hi || *lo > *hi) return {};
  return {{p0.u + *lo * dir.u, p0.v + *lo * dir.v}, {p0.u + *hi * dir.u, p0.v + *hi * dir.v}};
}

// ---------------------------------------------------------------------------

using LineKey = std::tuple<Rational, Rational, Rational>;

// a u + b v = c, scaled so the first nonzero of (a, b) is 1
LineKey line_of(const Point2& p, const Point2& q) {
  Rational a = q.v - p.v;
  Rational b = p.u - q.u;
  const Rational lead = a != 0 ? a : b;
  a /= lead;
  b /= lead;
  return {a, b, a * p.u + b * p.v};
}

// position along a line, monotone for points on it
const Rational& along(const Point2& p, const LineKey& key) {
  return std::get<1>(key) != 0 ? p.u : p.v;
}

bool contains(const Primitive2& outer, const Primitive2& inner) {
  switch (outer.kind) {
    case Kind2::Point: return inner.kind == Kind2::Point && inner.points[0] == outer.points[0];
    case Kind2::Segment:
      if (inner.kind == Kind2::Polygon) return false;
      return std::all_of(inner.points.begin(), inner.points.end(), [&](const Point2& p) {
        return on_segment(p, outer.points[0], outer.points[1]);
      });
    case Kind2::Polygon:
      return std::all_of(inner.points.begin(), inner.points.end(),
                         [&](const Point2& p) { return in_convex_polygon(p, outer.points); });
  }
  return false;
}

std::vector<Primitive2> merge_collinear(std::vector<Primitive2> segments) {
  std::map<LineKey, std::vector<Primitive2>> lines;
  for (auto& s : segments) lines[line_of(s.points[0], s.points[1])].push_back(std::move(s));
  std::vector<Primitive2> out;
  for (auto& [key, group] : lines) {
    std::sort(group.begin(), group.end(), [&](const Primitive2& x, const Primitive2& y) {
      return along(x.points[0], key) < along(y.points[0], key);
    });
    Primitive2 cur = group.front();
    for (std::size_t i = 1; i < group.size(); ++i) {
      const Primitive2& next = group[i];
      if (along(next.points[0], key) <= along(cur.points[1], key)) {
        if (along(next.points[1], key) > along(cur.points[1], key)) cur.points[1] = next.points[1];
        cur.label = std::min(cur.label, next.label);
      } else {
        out.push_back(std::move(cur));
        cur = next;
      }
    }
    out.push_back(std::move(cur));
  }
  return out;
}

bool item_less(const Primitive2& x, const Primitive2& y) {
  return std::tie(x.marker, x.label, x.kind, x.points) < std::tie(y.marker, y.label, y.kind, y.points);
}

// Drops every item contained in another one; of two equal items the
// earlier (in item order) survives.
std::vector<Primitive2> absorb(std::vector<Primitive2> items) {
  std::sort(items.begin(), items.end(), item_less);
  std::vector<bool> dropped(items.size(), false);
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < items.size() && !dropped[i]; ++j) {
      if (i == j || dropped[j]) continue;
      if (!contains(items[j], items[i])) continue;
      if (!contains(items[i], items[j]) || j < i) dropped[i] = true;
    }
  }
  std::vector<Primitive2> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!dropped[i]) out.push_back(std::move(items[i]));
  }
  return out;
}

std::vector<Primitive2> finish(std::vector<Primitive2> items, bool merge) {
  std::vector<Primitive2> markers, segments, rest;
  for (auto& it : items) {
    if (it.marker) markers.push_back(std::move(it));
    else if (it.kind == Kind2::Segment) segments.push_back(std::move(it));
    else rest.push_back(std::move(it));
  }
  if (merge && !segments.empty()) segments = merge_collinear(std::move(segments));
  rest.insert(rest.end(), std::make_move_iterator(segments.begin()),
              std::make_move_iterator(segments.end()));
  auto out = absorb(std::move(rest));
  auto dots = absorb(std::move(markers));
  out.insert(out.end(), std::make_move_iterator(dots.begin()), std::make_move_iterator(dots.end()));
  std::sort(out.begin(), out.end(), item_less);
  return out;
}

void check_unit(const Rational& v) {
  if (v < 0 || v > 1) throw Error(ErrorCode::OutOfRange, "slice value " + to_text(v) + " outside [0, 1]");
}

}  // namespace

// ---------------------------------------------------------------------------

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
  if (cross(a, b, p) != 0) return false;
  return (p.u - a.u) * (p.u - b.u) <= 0 && (p.v - a.v) * (p.v - b.v) <= 0;
}

bool in_convex_polygon(const Point2& p, const std::vector<Point2>& ccw) {
  if (ccw.size() == 1) return p == ccw[0];
  if (ccw.size() == 2) return on_segment(p, ccw[0], ccw[1]);
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    if (cross(ccw[i], ccw[(i + 1) % ccw.size()], p) < 0) return false;
  }
  return true;
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

SliceResult slice_scene(const Scene4& s, const FixedCoord& first, const FixedCoord& second,
                        std::optional<std::array<Axis, 2>> free_axes) {
  if (first.axis == second.axis) throw Error(ErrorCode::InvalidSlice, "fixed axes must differ");
  check_unit(first.value);
  check_unit(second.value);
  std::array<Axis, 2> axes{};
  std::size_t n = 0;
  for (const Axis a : {Axis::X1, Axis::X2, Axis::X3, Axis::X4}) {
    if (a != first.axis && a != second.axis) axes[n++] = a;
  }
  if (free_axes) {
    const auto& f = *free_axes;
    if (!((f[0] == axes[0] && f[1] == axes[1]) || (f[0] == axes[1] && f[1] == axes[0]))) {
      throw Error(ErrorCode::InvalidSlice, "free axes must be the two axes not fixed");
    }
    axes = f;
  }

  SliceResult out;
  out.axes = axes;
  out.fixed = {first, second};
  std::vector<Primitive2> items;
  for (const auto& prim : s.primitives()) {
    if (prim.label.tag == Tag::Wall) continue;
    const Cell cell = make_cell(prim);
    std::vector<Point2> hits;
    for (const auto& st : solve_cell(cell, first, second)) hits.push_back(project(cell.at(st), axes));
    if (auto p = from_points(std::move(hits), prim.label)) items.push_back(std::move(*p));
  }
  if (const auto box = wall_box(s)) {
    const auto a = static_cast<std::size_t>(first.axis);
    const auto b = static_cast<std::size_t>(second.axis);
    if (box->lo[a] <= first.value && first.value <= box->hi[a] && box->lo[b] <= second.value &&
        second.value <= box->hi[b]) {
      const auto u = static_cast<std::size_t>(axes[0]);
      const auto v = static_cast<std::size_t>(axes[1]);
      std::vector<Point2> corners{{box->lo[u], box->lo[v]}, {box->hi[u], box->lo[v]},
                                  {box->hi[u], box->hi[v]}, {box->lo[u], box->hi[v]}};
      if (auto p = from_points(std::move(corners), first_label(s, Tag::Wall))) items.push_back(std::move(*p));
    }
  }
  out.items = finish(std::move(items), false);
  return out;
}

SliceResult project_scene(const Scene4& s, Axis horizontal, Axis vertical) {
  if (horizontal == vertical) throw Error(ErrorCode::InvalidSlice, "projection axes must differ");
  const std::array<Axis, 2> axes{horizontal, vertical};
  SliceResult out;
  out.axes = axes;
  std::vector<Primitive2> items;
  for (const auto& prim : s.primitives()) {
    if (prim.label.tag == Tag::Wall) continue;
    make_cell(prim);  // rejects non-planar and non-convex pieces
    std::vector<Point2> pts;
    for (const auto& p : prim.points) pts.push_back(project(p, axes));
    if (auto p = from_points(std::move(pts), prim.label)) items.push_back(std::move(*p));
  }
  if (const auto box = wall_box(s)) {
    const auto u = static_cast<std::size_t>(horizontal);
    const auto v = static_cast<std::size_t>(vertical);
    std::vector<Point2> corners{{box->lo[u], box->lo[v]}, {box->hi[u], box->lo[v]},
                                {box->hi[u], box->hi[v]}, {box->lo[u], box->hi[v]}};
    if (auto p = from_points(std::move(corners), first_label(s, Tag::Wall))) items.push_back(std::move(*p));
  }

  if (horizontal == Axis::X3 && vertical == Axis::X4) {
    for (const auto& prim : s.primitives()) {
      std::vector<Point2> pts;
      if (prim.label.tag == Tag::Square) {
        for (const auto& p : prim.points) pts.push_back(project(p, axes));
      } else if (prim.label.tag == Tag::Spine) {
        // the x3 = 1 end of the spine carries the copy of V
        pts = {project(prim.at(0, 1), axes), project(prim.at(1, 1), axes)};
      } else {
        continue;
      }
      if (auto p = from_points(std::move(pts), prim.label)) {
        p->marker = true;
        items.push_back(std::move(*p));
      }
    }
  }
  out.items = finish(std::move(items), true);
  return out;
}

}  // namespace compactum
