#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "compactum/presentation.hpp"
#include "compactum/rational.hpp"
#include "compactum/verify.hpp"

namespace compactum {

enum class Axis : std::uint8_t { X1 = 0, X2 = 1, X3 = 2, X4 = 3 };

std::string to_string(Axis a);
Axis parse_axis(std::string_view text);

/// A point of the unit 4-cube I^4, coordinates (x1, x2, x3, x4).
struct Point4 {
  std::array<Rational, 4> x;

  const Rational& operator[](Axis a) const { return x[static_cast<std::size_t>(a)]; }
  Rational& operator[](Axis a) { return x[static_cast<std::size_t>(a)]; }

  bool operator==(const Point4& o) const { return x == o.x; }
  bool operator<(const Point4& o) const { return x < o.x; }
};

Point4 point(const Rational& x1, const Rational& x2, const Rational& x3 = 0,
             const Rational& x4 = 0);

/// Component tags, in scene order.
enum class Tag : std::uint8_t {
  Axis,       // I x {0}^3
  Loop,       // edge e of g_n
  Spine,      // I x {0} x I x {0}
  Square,     // I^2 x {0}^2, two triangles
  Slab,       // edge e of g_n swept over [1/m(n), 1] in x3
  Wall,       // the 3-cell I^2 x {0} x I, face f triangle k
  Track,      // R_n: edge e of member slot s
  Connector,  // R_n: connector c between consecutive members
  Cap,        // R_n: filled disk at x4 = 1
};

/// Edge numbering of a loop g_n, following its orientation:
/// 0 origin -> (1, 1/n), 1 (1, 1/n) -> (1, 1/(n+1/2)), 2 (1, 1/(n+1/2)) -> origin.
enum LoopEdge : std::uint32_t { kUpperEdge = 0, kRightEdge = 1, kLowerEdge = 2 };

struct Label {
  Tag tag = Tag::Axis;
  std::uint64_t n = 0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  auto operator<=>(const Label&) const = default;
  bool operator==(const Label&) const = default;
};

/// "axis", "loop/n/e", "spine", "square/k", "slab/n/e", "wall/f/k",
/// "track/n/s/e", "conn/n/c", "cap/n".
std::string to_string(const Label& l);
Label parse_label(std::string_view text);

enum class PrimitiveKind : std::uint8_t { Segment, Patch, Triangle };

std::string to_string(PrimitiveKind k);

/// Segment {p, q}; ruled patch {a0, a1, b0, b1} with
/// point(u, t) = lerp(lerp(a0, a1, t), lerp(b0, b1, t), u); filled triangle.
struct Primitive4 {
  PrimitiveKind kind = PrimitiveKind::Segment;
  Label label;
  std::vector<Point4> points;
  bool oriented = false;  // loop edges follow the loop's arrow

  static Primitive4 segment(Label l, Point4 p, Point4 q, bool oriented = false);
  static Primitive4 patch(Label l, Point4 a0, Point4 a1, Point4 b0, Point4 b1);
  static Primitive4 triangle(Label l, Point4 v0, Point4 v1, Point4 v2);

  /// Point of a patch at (u, t); of a segment at u (t ignored).
  Point4 at(const Rational& u, const Rational& t) const;

  bool operator==(const Primitive4&) const = default;
};

struct SceneMeta {
  std::string group;       // canonical group spec JSON, empty when not applicable
  std::string group_hash;  // FNV-1a 64 of `group`, hex
  std::uint64_t relations = 0;
  std::uint64_t generators = 0;
  std::string version;

  bool operator==(const SceneMeta&) const = default;
};

/// A labeled set of primitives kept sorted by label.
class Scene4 {
 public:
  Scene4() = default;

  void add(Primitive4 p);
  void merge(const Scene4& other);
  /// Sorts by label; throws InvalidPrimitive on a duplicate label.
  void finalize();

  const std::vector<Primitive4>& primitives() const { return primitives_; }
  std::vector<Primitive4>& primitives() { return primitives_; }
  std::size_t size() const { return primitives_.size(); }
  Scene4 filter(Tag tag) const;

  SceneMeta meta;

  bool operator==(const Scene4&) const = default;

 private:
  std::vector<Primitive4> primitives_;
};

/// Triangle boundary (0,0,0,0) -> (1, 1/n, 0, 0) -> (1, 1/(n+1/2), 0, 0) -> origin.
/// Throws InvalidIndex for n == 0.
std::array<Primitive4, 3> loop_gn(std::uint64_t n);

/// Endpoints of edge e of g_n in the (x1, x2) plane, in orientation order.
std::array<Point4, 2> loop_edge(std::uint64_t n, std::uint32_t e);

Scene4 build_V(std::uint64_t loops);

/// W = W'' u I^2 x {0}^2. Throws UncertifiedM unless m covers 1..loops.
Scene4 build_W(const MFunction& m, std::uint64_t loops);
/// M = I^2 x {0} x I u W.
Scene4 build_M(const MFunction& m, std::uint64_t loops);

/// R_n for relation r_n, lying in x3 = 1/n with x4 = t in [0, 1].
Scene4 build_relation_track(const TrianglePresentation& p, std::uint64_t label);

struct KOptions {
  std::uint64_t generators = 0;  // 0: the largest index used by r_1..r_R
  std::uint64_t m_horizon = kDefaultMHorizon;
};

/// K = M u R_1 u ... u R_R for the first R relations of the stream.
Scene4 build_K(const GroupPtr& group, std::uint64_t relations, const KOptions& options = {});

struct ContainmentReport {
  bool passed = true;
  std::vector<std::string> failures;
  Rational max_coordinate = 0;
};

/// Every defining point lies in [0, 1]^4, exactly.
ContainmentReport containment_check(const Scene4& s);

/// Graph of the scene's segments; vertices are distinct endpoints.
OneComplex one_complex_of(const Scene4& s);

/// Hex FNV-1a 64 hash, used for scene metadata.
std::string fnv1a_hex(std::string_view text);

inline constexpr const char* kToolVersion = "compactum 1.0.0";

}  // namespace compactum
