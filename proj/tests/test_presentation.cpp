#include <gtest/gtest.h>

#include <set>

#include "compactum/io.hpp"
#include "compactum/presentation.hpp"
#include "test_support.hpp"

using namespace compactum;

namespace {

using Rel = std::vector<std::uint64_t>;

GroupPtr cyclic(std::uint64_t n) { return make_group({GroupKind::Cyclic, n, {}, {}}); }

std::vector<Rel> words(const TrianglePresentation& p) {
  std::vector<Rel> out;
  for (const auto& r : p.relations) out.emplace_back(r.indices().begin(), r.indices().end());
  return out;
}

// Straight transcription of the stream rules over an explicit prefix of the
// generator sequence, with linear scans instead of pools.
std::vector<Rel> naive_stream(const GroupOracle& g, std::uint64_t rounds, std::uint64_t prefix) {
  std::vector<ElementId> seq{0};  // 1-based
  for (std::uint64_t k = 1; seq.size() <= prefix; ++k) {
    const std::uint64_t len = g.order() ? std::min<std::uint64_t>(k, *g.order()) : k;
    for (ElementId e = 0; e < len; ++e) seq.push_back(e);
  }
  std::set<std::uint64_t> pair_used, triple_used;
  auto least = [&](ElementId v, std::uint64_t after, const std::set<std::uint64_t>& used) {
    for (std::uint64_t j = after + 1; j < seq.size(); ++j) {
      if (seq[j] == v && !used.contains(j)) return j;
    }
    throw std::runtime_error("prefix too short");
  };
  std::vector<Rel> out;
  for (std::uint64_t i = 1; i <= rounds; ++i) {
    if (seq[i] == kIdentity) out.push_back({i});
    const std::uint64_t j = least(g.invert(seq[i]), i, pair_used);
    pair_used.insert(j);
    out.push_back({i, j});
    if (const auto ab = identity_pair(g, i)) {
      const ElementId c = g.multiply(ab->first, ab->second);
      const std::uint64_t a = least(ab->first, 0, triple_used);
      const std::uint64_t b = least(ab->second, a, triple_used);
      const std::uint64_t d = least(g.invert(c), b, triple_used);
      triple_used.insert({a, b, d});
      out.push_back({a, b, d});
    }
  }
  return out;
}

}  // namespace

TEST(Presentation, TrivialGroupFirstRound) {
  const auto p = build_presentation(cyclic(1), 1);
  EXPECT_EQ(words(p), (std::vector<Rel>{{1}, {1, 2}, {1, 2, 3}}));
  EXPECT_EQ(p.rounds_completed, 1u);
}

TEST(Presentation, Z2FirstTwoRounds) {
  const auto p = build_presentation(cyclic(2), 2);
  EXPECT_EQ(words(p), (std::vector<Rel>{{1}, {1, 2}, {1, 2, 4}, {2}, {2, 4}, {6, 7, 9}}));
  EXPECT_EQ(p.type3_used, (std::set<std::uint64_t>{1, 2, 4, 6, 7, 9}));
  EXPECT_EQ(p.generator_values.at(7), 1u);
  EXPECT_FALSE(p.generator_values.contains(3));
  EXPECT_EQ(p.relation(6).kind, RelationKind::Triple);
  test::expect_error(ErrorCode::UnknownRelation, [&] { p.relation(7); });
}

TEST(Presentation, MatchesNaiveTranscription) {
  auto entries = test::catalog();
  entries.push_back({"Z", test::integers_spec(), 0});
  for (const auto& entry : entries) {
    const GroupPtr g = make_group(entry.spec);
    const std::uint64_t rounds = 150;
    EXPECT_EQ(words(build_presentation(g, rounds)), naive_stream(*g, rounds, 40'000)) << entry.name;
  }
}

TEST(Presentation, StreamIsAppendOnly) {
  const GroupPtr g = make_group({GroupKind::Symmetric, 3, {}, {}});
  const auto shorter = build_presentation(g, 40);
  const auto longer = build_presentation(g, 90);
  ASSERT_LT(shorter.relations.size(), longer.relations.size());
  for (std::size_t k = 0; k < shorter.relations.size(); ++k) {
    EXPECT_EQ(shorter.relations[k], longer.relations[k]);
  }
}

TEST(Presentation, ByteDeterministicText) {
  const GroupPtr g = cyclic(6);
  EXPECT_EQ(presentation_text(build_presentation(g, 100), *g), presentation_text(build_presentation(g, 100), *g));
}

TEST(Presentation, ZeroRoundsRejected) {
  test::expect_error(ErrorCode::InvalidRounds, [] { build_presentation(cyclic(2), 0); });
}

TEST(Presentation, FirstRelationsStopsAtCount) {
  RelationStream stream(cyclic(2));
  const auto p = stream.first_relations(7);
  ASSERT_EQ(p.relations.size(), 7u);
  EXPECT_EQ(words(p).back(), (Rel{3, 5}));
}

TEST(Presentation, ValidationPassesAndCatchesCorruption) {
  for (const auto& entry : test::catalog()) {
    const GroupPtr g = make_group(entry.spec);
    auto p = build_presentation(g, 300);
    const MFunction m = compute_m(g, p.max_generator());
    const auto report = validate_presentation(p, *g, &m);
    EXPECT_TRUE(report.passed()) << entry.name;
    EXPECT_TRUE(report.check("incidence").passed);
  }
  const GroupPtr z3 = cyclic(3);
  auto p = build_presentation(z3, 10);
  p.relations[1].idx = {5, 2, 0};  // not increasing
  const auto report = validate_presentation(p, *z3);
  EXPECT_FALSE(report.check("form").passed);
  EXPECT_FALSE(report.check("form").counterexample.empty());
}

TEST(MFunction, Z2Values) {
  const GroupPtr z2 = cyclic(2);
  EXPECT_EQ(m_of(z2, 1), 3u);
  EXPECT_EQ(m_of(z2, 2), 5u);
  const MFunction m = compute_m(z2, 30);
  for (std::uint64_t n = 1; n <= 30; ++n) EXPECT_EQ(m(n), m_of(z2, n)) << n;
  test::expect_error(ErrorCode::UncertifiedM, [&] { m(31); });
}

TEST(MFunction, MaxLabelContainingIndex) {
  const GroupPtr g = make_group({GroupKind::Dihedral, 4, {}, {}});
  const MFunction m = compute_m(g, 60);
  RelationStream stream(g);
  stream.run_until(m.horizon + 500);
  for (std::uint64_t n = 1; n <= 60; ++n) {
    std::uint64_t expected = 1;
    for (const auto& r : stream.relations()) {
      for (const auto i : r.indices()) {
        if (i == n) expected = std::max(expected, r.label);
      }
    }
    EXPECT_EQ(m(n), expected) << n;
  }
}

TEST(MFunction, HorizonAndIndexErrors) {
  const GroupPtr z = make_group(test::integers_spec());
  test::expect_error(ErrorCode::HorizonExceeded, [&] { m_of(z, 50, 10); });
  test::expect_error(ErrorCode::InvalidIndex, [&] { m_of(z, 0); });
}
