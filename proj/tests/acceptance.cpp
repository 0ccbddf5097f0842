// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "compactum/geometry.hpp"
#include "compactum/io.hpp"
#include "compactum/slice.hpp"
#include "compactum/verify.hpp"
#include "oracle.hpp"

namespace fs = std::filesystem;
using namespace compactum;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

int failures = 0;

void criterion(const std::string& name, const std::function<Outcome()>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (o.passed ? "PASS" : "FAIL") << "  " << name << "  (" << secs << " s)";
  if (!o.detail.empty()) line << "  " << o.detail;
  std::cout << line.str() << std::endl;
  if (!o.passed) ++failures;
}

std::vector<test::CatalogEntry> catalog_with_integers() {
  auto out = test::catalog();
  out.push_back({"Z", test::integers_spec(), 0});
  return out;
}

std::string mark(std::uint64_t n) { return std::to_string(n); }

// ---------------------------------------------------------------------------

Outcome isomorphism_certification() {
  Outcome o;
  std::uint64_t max_cosets = 0;
  double max_secs = 0;
  for (const auto& entry : test::catalog()) {
    const GroupPtr g = make_group(entry.spec);
    const auto start = std::chrono::steady_clock::now();
    const IsoCertificate c = verify_finite_iso(g);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    max_secs = std::max(max_secs, secs);
    max_cosets = std::max(max_cosets, c.cosets_defined);
    if (c.verdict != Verdict::Pass) o.fail(entry.name + ": verdict " + to_string(c.verdict) + " " + c.note);
    if (c.order_presented != entry.order) o.fail(entry.name + ": presented order differs");
    if (c.cosets_defined > kDefaultMaxCosets) o.fail(entry.name + ": " + mark(c.cosets_defined) + " cosets");
    if (secs > 60) o.fail(entry.name + ": over 60 s");
    // independent enumeration of the same slice
    const auto p = build_presentation(g, c.rounds);
    const auto ref = test::reference_order(c.generators, test::relators_within(p, c.generators));
    if (ref != entry.order) o.fail(entry.name + ": reference enumeration disagrees");
  }
  if (o.passed) {
    std::ostringstream d;
    d.setf(std::ios::fixed);
    d.precision(3);
    d << "9 groups, order_presented = |G|, max " << max_cosets << " cosets defined, slowest " << max_secs << " s";
    o.detail = d.str();
  }
  return o;
}

Outcome presentation_properties() {
  Outcome o;
  constexpr std::uint64_t kRounds = 10'000;
  std::uint64_t relations = 0;
  for (const auto& entry : catalog_with_integers()) {
    const GroupPtr g = make_group(entry.spec);
    RelationStream stream(g);
    stream.run_until(kRounds);
    const auto& rels = stream.relations();
    const GeneratorSequence seq(*g);
    relations += rels.size();
    const std::string who = entry.name + ": ";

    std::map<std::uint64_t, std::uint64_t> occurrences, triples;
    std::uint64_t max_index = 0;
    for (const auto& r : rels) {
      const auto idx = r.indices();
      if (idx.empty() || idx.size() > 3) o.fail(who + "r_" + mark(r.label) + " has bad length");
      for (std::size_t k = 1; k < idx.size(); ++k) {
        if (idx[k - 1] >= idx[k]) o.fail(who + "r_" + mark(r.label) + " not strictly increasing");
      }
      ElementId image = kIdentity;
      for (const auto i : idx) {
        image = g->multiply(image, seq.value(i));
        ++occurrences[i];
        if (idx.size() == 3) ++triples[i];
        max_index = std::max(max_index, i);
      }
      if (image != kIdentity) o.fail(who + "relator r_" + mark(r.label) + " is not the identity");
    }
    for (const auto& [i, c] : occurrences) {
      if (c > 4) o.fail(who + "g" + mark(i) + " occurs " + mark(c) + " times");
    }
    for (const auto& [i, c] : triples) {
      if (c > 1) o.fail(who + "g" + mark(i) + " in " + mark(c) + " triples");
    }

    // block counts, by walking the sequence block by block
    const std::uint64_t blocks = seq.block_of(max_index);
    std::map<ElementId, std::uint64_t> counts;
    std::uint64_t n = 1;
    for (std::uint64_t k = 1; k <= blocks; ++k) {
      const std::uint64_t end = seq.block_start(k + 1);
      for (; n <= end; ++n) ++counts[seq.value(n)];
      const std::uint64_t width = g->order() ? *g->order() : k + 1;
      for (ElementId e = 0; e < width; ++e) {
        const std::uint64_t want = GeneratorSequence::count_in_blocks(e, k);
        if (counts[e] != want) o.fail(who + "block count of element " + mark(e) + " after block " + mark(k));
      }
    }

    // incidence: m(i) >= n whenever g_i is in r_n
    const MFunction m = compute_m(g, max_index);
    for (const auto& r : rels) {
      for (const auto i : r.indices()) {
        if (m(i) < r.label) o.fail(who + "m(" + mark(i) + ") < " + mark(r.label));
      }
    }
  }
  if (o.passed) o.detail = "10 groups x 10^4 rounds, " + mark(relations) + " relations, zero failures";
  return o;
}

Outcome m_well_defined() {
  Outcome o;
  for (const auto& spec : {GroupSpec{GroupKind::Cyclic, 6, {}, {}}, test::integers_spec()}) {
    const GroupPtr g = make_group(spec);
    std::vector<std::uint64_t> certified;
    std::uint64_t horizon = 0;
    for (std::uint64_t n = 1; n <= 200; ++n) {
      certified.push_back(m_of(g, n));  // throws HorizonExceeded past the default horizon
    }
    const MFunction batch = compute_m(g, 200);
    horizon = batch.horizon;
    // run well past the certification point and recount
    RelationStream stream(g);
    stream.run_until(2 * horizon + 1000);
    for (std::uint64_t n = 1; n <= 200; ++n) {
      std::uint64_t later = 1;
      for (const auto label : stream.occurrences(n)) later = std::max(later, label);
      if (later != certified[n - 1]) o.fail("m(" + mark(n) + ") changed after extending rounds");
      if (batch(n) != certified[n - 1]) o.fail("m(" + mark(n) + ") differs between m_of and compute_m");
    }
  }
  if (o.passed) o.detail = "n <= 200 on Z/6 and Z, stable under extension";
  return o;
}

Outcome geometry_invariants() {
  Outcome o;
  // containment
  std::vector<Scene4> scenes{build_V(256)};
  for (const auto& entry : catalog_with_integers()) {
    const GroupPtr g = make_group(entry.spec);
    const Scene4 k = build_K(g, 100);
    const MFunction m = compute_m(g, k.meta.generators);
    scenes.push_back(build_W(m, k.meta.generators));
    scenes.push_back(build_M(m, k.meta.generators));
    scenes.push_back(k);
  }
  for (const auto& s : scenes) {
    const auto r = containment_check(s);
    if (!r.passed) o.fail("containment: " + r.failures.front());
  }
  // b1(V_N)
  for (const std::uint64_t n : {0u, 1u, 3u, 16u, 256u}) {
    if (graph_betti(one_complex_of(build_V(n))) != static_cast<std::int64_t>(n)) o.fail("b1(V_" + mark(n) + ")");
  }
  // sup x2 over g_n
  for (std::uint64_t n = 1; n <= 64; ++n) {
    Rational sup = -1;
    for (const auto& e : loop_gn(n)) {
      for (const auto& p : e.points) sup = std::max(sup, p[Axis::X2]);
    }
    if (sup != q(1, static_cast<std::int64_t>(n))) o.fail("sup x2 over g_" + mark(n));
  }
  // tracks: each lies in its own level x3 = 1/n, and t = 0 sections equal slab sections
  for (const auto& spec : {GroupSpec{GroupKind::Cyclic, 6, {}, {}}, GroupSpec{GroupKind::Quaternion8, 1, {}, {}},
                           test::integers_spec()}) {
    const GroupPtr g = make_group(spec);
    const std::uint64_t count = 60;
    const auto p = RelationStream(g).first_relations(count);
    const Scene4 k = build_K(g, count);
    const Scene4 slabs = k.filter(Tag::Slab);
    std::set<Rational> levels;
    for (const auto& r : p.relations) {
      const Scene4 track = build_relation_track(p, r.label);
      std::set<Rational> x3;
      for (const auto& prim : track.primitives()) {
        for (const auto& pt : prim.points) x3.insert(pt[Axis::X3]);
      }
      if (x3.size() != 1 || !levels.insert(*x3.begin()).second) o.fail("track r_" + mark(r.label) + " not disjoint");

      const Rational level = q(1, static_cast<std::int64_t>(r.label));
      Scene4 members;
      const auto idx = r.indices();
      for (const auto& prim : slabs.primitives()) {
        if (std::find(idx.begin(), idx.end(), prim.label.n) != idx.end()) members.add(prim);
      }
      members.finalize();
      auto shapes = [](const SliceResult& s) {
        std::vector<std::pair<Kind2, std::vector<Point2>>> out;
        for (const auto& it : s.items) out.emplace_back(it.kind, it.points);
        std::sort(out.begin(), out.end());
        return out;
      };
      const auto a = shapes(slice_scene(track, {Axis::X3, level}, {Axis::X4, 0}));
      const auto b = shapes(slice_scene(members, {Axis::X3, level}, {Axis::X4, 0}));
      if (a != b || a.empty()) o.fail("t=0 section of r_" + mark(r.label) + " differs from its slabs");
    }
  }
  if (o.passed) o.detail = "containment of " + mark(scenes.size()) + " scenes, b1, sup x2, disjointness, t=0 sections";
  return o;
}

Outcome figure_reproduction() {
  Outcome o;
  const GroupPtr z2 = make_group({GroupKind::Cyclic, 2, {}, {}});
  const auto p = build_presentation(z2, 2);
  const Relation& r2 = p.relation(2);
  if (r2.kind != RelationKind::Pair || r2.idx[0] != 1 || r2.idx[1] != 2) o.fail("r_2 is not (g1, g2)");
  const Scene4 track = build_relation_track(p, 2);
  const std::vector<std::size_t> want{6, 7, 7, 7};
  for (int k = 0; k < 4; ++k) {
    const auto s = slice_scene(track, {Axis::X3, q(1, 2)}, {Axis::X4, q(k, 4)});
    if (s.count(Kind2::Segment) != want[k] || s.items.size() != want[k]) {
      o.fail("t=" + std::to_string(k) + "/4: " + mark(s.items.size()) + " pieces");
    }
  }
  const auto top = slice_scene(track, {Axis::X3, q(1, 2)}, {Axis::X4, 1});
  const std::vector<Point2> tri{{0, 0}, {1, q(2, 5)}, {1, 1}};  // (0,0), (1, 1/(j+1/2)), (1, 1/i)
  if (top.items.size() != 1 || top.items[0].kind != Kind2::Polygon || top.items[0].points != tri) {
    o.fail("t=1 is not the filled triangle");
  }

  // projections onto (x3, x4)
  const std::uint64_t R = 7;
  const Scene4 k = build_K(z2, R);
  const MFunction m = compute_m(z2, k.meta.generators);
  auto lines = [](const SliceResult& s) {
    std::vector<std::vector<Point2>> out;
    for (const auto& it : s.items) {
      if (!it.marker) out.push_back(it.points);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto dots = [](const SliceResult& s) {
    std::vector<Point2> out;
    for (const auto& it : s.items) {
      if (it.marker) out.push_back(it.points[0]);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const std::vector<Point2> endpoints{{0, 0}, {1, 0}};
  const std::vector<Point2> base{{0, 0}, {1, 0}};
  const std::vector<Point2> wall{{0, 0}, {0, 1}};
  auto w = project_scene(build_W(m, k.meta.generators), Axis::X3, Axis::X4);
  if (lines(w) != std::vector<std::vector<Point2>>{base} || dots(w) != endpoints) o.fail("W projection");
  auto mm = project_scene(build_M(m, k.meta.generators), Axis::X3, Axis::X4);
  if (lines(mm) != std::vector<std::vector<Point2>>{wall, base} || dots(mm) != endpoints) o.fail("M projection");
  std::vector<std::vector<Point2>> expect_k{base, wall};
  for (std::uint64_t n = 1; n <= R; ++n) expect_k.push_back({{q(1, static_cast<std::int64_t>(n)), 0}, {q(1, static_cast<std::int64_t>(n)), 1}});
  std::sort(expect_k.begin(), expect_k.end());
  auto kk = project_scene(k, Axis::X3, Axis::X4);
  if (lines(kk) != expect_k || dots(kk) != endpoints) o.fail("K projection");

  // golden SVGs: two consecutive runs, and the checked-in files
  const auto first = cli::figure_set();
  const auto second = cli::figure_set();
  if (first != second) o.fail("figure SVGs differ between runs");
  for (const auto& [name, svg] : first) {
    const fs::path golden = fs::path(COMPACTUM_GOLDEN_DIR) / name;
    if (!fs::exists(golden) || read_file(golden) != svg) o.fail(name + " differs from golden");
  }
  if (o.passed) o.detail = "census 6/7/7/7/triangle, W/M/K projections, " + mark(first.size()) + " golden SVGs";
  return o;
}

Outcome determinism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "compactum_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path group = dir / "z6.json";
  write_file(group, R"({"kind":"cyclic","n":6})");
  std::set<std::string> presents, scenes;
  for (int i = 0; i < 3; ++i) {
    const fs::path pres = dir / ("p" + std::to_string(i) + ".txt");
    const fs::path scene = dir / ("k" + std::to_string(i) + ".json");
    const std::string g = group.string(), ps = pres.string(), ks = scene.string();
    const char* present[] = {"compactum", "present", "--group", g.c_str(), "--rounds", "100", "-o", ps.c_str()};
    const char* build[] = {"compactum", "build", "--group", g.c_str(), "--relations", "100", "-o", ks.c_str()};
    std::ostringstream out, err;
    if (cli::run(8, present, out, err) != 0 || cli::run(8, build, out, err) != 0) o.fail("command failed: " + err.str());
    presents.insert(read_file(pres));
    scenes.insert(read_file(scene));
  }
  fs::remove_all(dir);
  if (presents.size() != 1) o.fail("present output varies");
  if (scenes.size() != 1) o.fail("build output varies");
  if (o.passed) o.detail = "present and build for (Z/6, R=100), 3 runs byte-identical";
  return o;
}

}  // namespace

int main() {
  criterion("isomorphism certification", isomorphism_certification);
  criterion("triangle presentation properties", presentation_properties);
  criterion("well-definedness of m", m_well_defined);
  criterion("geometry invariants", geometry_invariants);
  criterion("figure reproduction", figure_reproduction);
  criterion("determinism", determinism);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
