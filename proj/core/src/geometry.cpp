#include "compactum/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>

#include "compactum/error.hpp"

namespace compactum {

std::string to_string(Axis a) { return "x" + std::to_string(static_cast<int>(a) + 1); }

Axis parse_axis(std::string_view text) {
  if (text.size() == 2 && text[0] == 'x' && text[1] >= '1' && text[1] <= '4') {
    return static_cast<Axis>(text[1] - '1');
  }
  throw Error(ErrorCode::ParseError, "unknown axis '" + std::string(text) + "'");
}

Point4 point(const Rational& x1, const Rational& x2, const Rational& x3, const Rational& x4) {
  return Point4{{x1, x2, x3, x4}};
}

// ---------------------------------------------------------------------------

namespace {

struct TagName {
  Tag tag;
  const char* name;
  int fields;  // numeric fields after the name
};

constexpr TagName kTagNames[] = {
    {Tag::Axis, "axis", 0},     {Tag::Loop, "loop", 2},   {Tag::Spine, "spine", 0},
    {Tag::Square, "square", 1}, {Tag::Slab, "slab", 2},   {Tag::Wall, "wall", 2},
    {Tag::Track, "track", 3},   {Tag::Connector, "conn", 2}, {Tag::Cap, "cap", 1},
};

const TagName& tag_info(Tag t) {
  for (const auto& info : kTagNames) {
    if (info.tag == t) return info;
  }
  throw Error(ErrorCode::InvalidPrimitive, "unknown tag");
}

// Which label fields each tag carries, in text order.
std::vector<std::uint64_t> label_fields(const Label& l) {
  switch (l.tag) {
    case Tag::Axis:
    case Tag::Spine: return {};
    case Tag::Square: return {l.a};
    case Tag::Cap: return {l.n};
    case Tag::Loop:
    case Tag::Slab:
    case Tag::Connector: return {l.n, l.a};
    case Tag::Wall: return {l.a, l.b};
    case Tag::Track: return {l.n, l.a, l.b};
  }
  return {};
}

}  // namespace

std::string to_string(const Label& l) {
  std::string out = tag_info(l.tag).name;
  for (const auto f : label_fields(l)) out += "/" + std::to_string(f);
  return out;
}

Label parse_label(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto slash = text.find('/', start);
    parts.push_back(text.substr(start, slash - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  for (const auto& info : kTagNames) {
    if (parts[0] != info.name) continue;
    if (static_cast<int>(parts.size()) != info.fields + 1) break;
    std::vector<std::uint64_t> f;
    for (std::size_t k = 1; k < parts.size(); ++k) {
      std::uint64_t v = 0;
      const auto* end = parts[k].data() + parts[k].size();
      const auto [ptr, ec] = std::from_chars(parts[k].data(), end, v);
      if (ec != std::errc() || ptr != end || parts[k].empty()) {
        throw Error(ErrorCode::ParseError, "bad label '" + std::string(text) + "'");
      }
      f.push_back(v);
    }
    Label l;
    l.tag = info.tag;
    switch (info.tag) {
      case Tag::Axis:
      case Tag::Spine: break;
      case Tag::Square: l.a = static_cast<std::uint32_t>(f[0]); break;
      case Tag::Cap: l.n = f[0]; break;
      case Tag::Loop:
      case Tag::Slab:
      case Tag::Connector: l.n = f[0]; l.a = static_cast<std::uint32_t>(f[1]); break;
      case Tag::Wall: l.a = static_cast<std::uint32_t>(f[0]); l.b = static_cast<std::uint32_t>(f[1]); break;
      case Tag::Track:
        l.n = f[0];
        l.a = static_cast<std::uint32_t>(f[1]);
        l.b = static_cast<std::uint32_t>(f[2]);
        break;
    }
    return l;
  }
  throw Error(ErrorCode::ParseError, "bad label '" + std::string(text) + "'");
}

std::string to_string(PrimitiveKind k) {
  switch (k) {
    case PrimitiveKind::Segment: return "segment";
    case PrimitiveKind::Patch: return "patch";
    case PrimitiveKind::Triangle: return "tri";
  }
  return "?";
}

// ---------------------------------------------------------------------------

Primitive4 Primitive4::segment(Label l, Point4 p, Point4 q, bool oriented) {
  return {PrimitiveKind::Segment, l, {std::move(p), std::move(q)}, oriented};
}

Primitive4 Primitive4::patch(Label l, Point4 a0, Point4 a1, Point4 b0, Point4 b1) {
  if (a0 == a1 && b0 == b1) {
    throw Error(ErrorCode::InvalidPrimitive, to_string(l) + ": patch with both rails fixed is a segment");
  }
  return {PrimitiveKind::Patch, l, {std::move(a0), std::move(a1), std::move(b0), std::move(b1)}, false};
}

Primitive4 Primitive4::triangle(Label l, Point4 v0, Point4 v1, Point4 v2) {
  return {PrimitiveKind::Triangle, l, {std::move(v0), std::move(v1), std::move(v2)}, false};
}

Point4 Primitive4::at(const Rational& u, const Rational& t) const {
  auto lerp = [](const Point4& p, const Point4& q, const Rational& s) {
    Point4 r;
    for (std::size_t k = 0; k < 4; ++k) r.x[k] = p.x[k] + s * (q.x[k] - p.x[k]);
    return r;
  };
  switch (kind) {
    case PrimitiveKind::Segment: return lerp(points[0], points[1], u);
    case PrimitiveKind::Patch:
      return lerp(lerp(points[0], points[1], t), lerp(points[2], points[3], t), u);
    case PrimitiveKind::Triangle: break;
  }
  throw Error(ErrorCode::InvalidPrimitive, "triangles have no (u, t) parametrization");
}

// ---------------------------------------------------------------------------

void Scene4::add(Primitive4 p) { primitives_.push_back(std::move(p)); }

void Scene4::merge(const Scene4& other) {
  primitives_.insert(primitives_.end(), other.primitives_.begin(), other.primitives_.end());
}

void Scene4::finalize() {
  std::stable_sort(primitives_.begin(), primitives_.end(),
                   [](const Primitive4& a, const Primitive4& b) { return a.label < b.label; });
  for (std::size_t i = 1; i < primitives_.size(); ++i) {
    if (primitives_[i].label == primitives_[i - 1].label) {
      throw Error(ErrorCode::InvalidPrimitive, "duplicate label " + to_string(primitives_[i].label));
    }
  }
}

Scene4 Scene4::filter(Tag tag) const {
  Scene4 out;
  out.meta = meta;
  for (const auto& p : primitives_) {
    if (p.label.tag == tag) out.add(p);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// 1/(n + 1/2)
Rational lower_slope(std::uint64_t n) {
  return q(2, static_cast<std::int64_t>(2 * n + 1));
}

Rational upper_slope(std::uint64_t n) { return q(1, static_cast<std::int64_t>(n)); }

Point4 lifted(const Point4& p, const Rational& x3, const Rational& x4) {
  return point(p[Axis::X1], p[Axis::X2], x3, x4);
}

}  // namespace

std::array<Point4, 2> loop_edge(std::uint64_t n, std::uint32_t e) {
  if (n == 0) throw Error(ErrorCode::InvalidIndex, "loops are numbered from 1");
  const Point4 origin = point(0, 0);
  const Point4 upper = point(1, upper_slope(n));
  const Point4 lower = point(1, lower_slope(n));
  switch (e) {
    case kUpperEdge: return {origin, upper};
    case kRightEdge: return {upper, lower};
    case kLowerEdge: return {lower, origin};
    default: break;
  }
  throw Error(ErrorCode::InvalidIndex, "loop edges are 0, 1, 2");
}

std::array<Primitive4, 3> loop_gn(std::uint64_t n) {
  std::array<Primitive4, 3> out;
  for (std::uint32_t e = 0; e < 3; ++e) {
    const auto [p, q] = loop_edge(n, e);
    out[e] = Primitive4::segment({Tag::Loop, n, e, 0}, p, q, true);
  }
  return out;
}

Scene4 build_V(std::uint64_t loops) {
  Scene4 s;
  s.add(Primitive4::segment({Tag::Axis}, point(0, 0), point(1, 0)));
  for (std::uint64_t n = 1; n <= loops; ++n) {
    for (auto& p : loop_gn(n)) s.add(std::move(p));
  }
  s.meta.generators = loops;
  s.meta.version = kToolVersion;
  s.finalize();
  return s;
}

Scene4 build_W(const MFunction& m, std::uint64_t loops) {
  if (m.count() < loops) {
    throw Error(ErrorCode::UncertifiedM, "m certified only up to " + std::to_string(m.count()) +
                                             ", need " + std::to_string(loops));
  }
  Scene4 s;
  s.add(Primitive4::patch({Tag::Spine}, point(0, 0, 0, 0), point(0, 0, 1, 0), point(1, 0, 0, 0),
                          point(1, 0, 1, 0)));
  s.add(Primitive4::triangle({Tag::Square, 0, 0}, point(0, 0), point(1, 0), point(1, 1)));
  s.add(Primitive4::triangle({Tag::Square, 0, 1}, point(0, 0), point(1, 1), point(0, 1)));
  for (std::uint64_t n = 1; n <= loops; ++n) {
    const Rational lo = q(1, static_cast<std::int64_t>(m(n)));
    for (std::uint32_t e = 0; e < 3; ++e) {
      const auto [p, qq] = loop_edge(n, e);
      const Label l{Tag::Slab, n, e, 0};
      if (lo == 1) {
        s.add(Primitive4::segment(l, lifted(p, 1, 0), lifted(qq, 1, 0), true));
      } else {
        s.add(Primitive4::patch(l, lifted(p, lo, 0), lifted(p, 1, 0), lifted(qq, lo, 0),
                                lifted(qq, 1, 0)));
      }
    }
  }
  s.meta.generators = loops;
  s.meta.version = kToolVersion;
  s.finalize();
  return s;
}

Scene4 build_M(const MFunction& m, std::uint64_t loops) {
  Scene4 s = build_W(m, loops);
  // The 3-cell {(x1, x2, 0, x4)} as its six faces; face f fixes free
  // coordinate f/2 of (x1, x2, x4) at value f%2.
  constexpr Axis kFree[3] = {Axis::X1, Axis::X2, Axis::X4};
  for (std::uint32_t f = 0; f < 6; ++f) {
    const Axis fixed = kFree[f / 2];
    const Rational value = f % 2;
    Axis u = Axis::X1, v = Axis::X1;
    bool first = true;
    for (const Axis a : kFree) {
      if (a == fixed) continue;
      (first ? u : v) = a;
      first = false;
    }
    auto corner = [&](int cu, int cv) {
      Point4 p = point(0, 0, 0, 0);
      p[fixed] = value;
      p[u] = cu;
      p[v] = cv;
      return p;
    };
    s.add(Primitive4::triangle({Tag::Wall, 0, f, 0}, corner(0, 0), corner(1, 0), corner(1, 1)));
    s.add(Primitive4::triangle({Tag::Wall, 0, f, 1}, corner(0, 0), corner(1, 1), corner(0, 1)));
  }
  s.finalize();
  return s;
}

Scene4 build_relation_track(const TrianglePresentation& p, std::uint64_t label) {
  const Relation& r = p.relation(label);
  const auto members = r.indices();
  const std::uint32_t last = static_cast<std::uint32_t>(members.size() - 1);
  const Rational level = q(1, static_cast<std::int64_t>(label));
  const Point4 origin = point(0, 0);

  Scene4 s;
  auto at = [&](const Point4& pt, int x4) { return lifted(pt, level, x4); };
  auto sweep = [&](std::uint32_t slot, std::uint32_t e) {
    const auto [a, b] = loop_edge(members[slot], e);
    s.add(Primitive4::patch({Tag::Track, label, slot, e}, at(a, 0), at(a, 1), at(b, 0), at(b, 1)));
  };
  // the origin end of an edge slides along it to the far vertex: apex (t, t * slope)
  auto slide = [&](std::uint32_t slot, std::uint32_t e) {
    const auto ends = loop_edge(members[slot], e);
    const Point4& far = e == kUpperEdge ? ends[1] : ends[0];
    s.add(Primitive4::patch({Tag::Track, label, slot, e}, at(origin, 0), at(far, 1), at(far, 0),
                            at(far, 1)));
  };

  sweep(0, kUpperEdge);
  sweep(last, kLowerEdge);
  for (std::uint32_t slot = 0; slot <= last; ++slot) sweep(slot, kRightEdge);
  for (std::uint32_t slot = 0; slot < last; ++slot) {
    slide(slot, kLowerEdge);
    slide(slot + 1, kUpperEdge);
    const Point4 from = point(1, lower_slope(members[slot]));
    const Point4 to = point(1, upper_slope(members[slot + 1]));
    s.add(Primitive4::patch({Tag::Connector, label, slot, 0}, at(origin, 0), at(from, 1),
                            at(origin, 0), at(to, 1)));
  }
  s.add(Primitive4::triangle({Tag::Cap, label, 0, 0}, at(origin, 1),
                             at(point(1, upper_slope(members[0])), 1),
                             at(point(1, lower_slope(members[last])), 1)));
  s.finalize();
  return s;
}

Scene4 build_K(const GroupPtr& group, std::uint64_t relations, const KOptions& options) {
  RelationStream stream(group);
  TrianglePresentation p;
  if (relations > 0) p = stream.first_relations(relations);
  const std::uint64_t used = p.max_generator();
  if (options.generators != 0 && options.generators < used) {
    throw Error(ErrorCode::InvalidIndex, "r_1..r_" + std::to_string(relations) + " use g" +
                                             std::to_string(used) + " beyond N = " +
                                             std::to_string(options.generators));
  }
  const std::uint64_t loops = std::max(used, options.generators);
  const MFunction m = compute_m(group, loops, options.m_horizon);

  Scene4 s = build_M(m, loops);
  for (std::uint64_t n = 1; n <= relations; ++n) s.merge(build_relation_track(p, n));
  s.meta.relations = relations;
  s.meta.generators = loops;
  s.meta.version = kToolVersion;
  s.finalize();
  return s;
}

// ---------------------------------------------------------------------------

ContainmentReport containment_check(const Scene4& s) {
  ContainmentReport report;
  for (const auto& prim : s.primitives()) {
    for (std::size_t k = 0; k < prim.points.size(); ++k) {
      for (std::size_t c = 0; c < 4; ++c) {
        const Rational& v = prim.points[k].x[c];
        if (v > report.max_coordinate) report.max_coordinate = v;
        if (v < 0 || v > 1) {
          report.passed = false;
          report.failures.push_back(to_string(prim.label) + " point " + std::to_string(k) +
                                    " x" + std::to_string(c + 1) + " = " + to_text(v));
        }
      }
    }
  }
  return report;
}

OneComplex one_complex_of(const Scene4& s) {
  std::map<Point4, std::size_t> ids;
  OneComplex g;
  auto id = [&](const Point4& p) {
    const auto [it, inserted] = ids.try_emplace(p, ids.size());
    return it->second;
  };
  for (const auto& prim : s.primitives()) {
    if (prim.kind != PrimitiveKind::Segment) continue;
    const auto a = id(prim.points[0]);
    const auto b = id(prim.points[1]);
    g.edges.emplace_back(a, b);
  }
  g.vertex_count = ids.size();
  return g;
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace compactum
