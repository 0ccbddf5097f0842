#include <gtest/gtest.h>

#include "compactum/verify.hpp"
#include "test_support.hpp"

using namespace compactum;

TEST(ReferenceOracle, KnownPresentations) {
  // <a | a^3>, <a, b | a^2, b^2, (ab)^3> via a third generator c = ab
  EXPECT_EQ(test::reference_order(1, {{1, 1, 1}}), 3u);
  EXPECT_EQ(test::reference_order(3, {{1, 1}, {2, 2}, {1, 2, 3}, {3, 3, 3}}), 6u);
  EXPECT_EQ(test::reference_order(2, {{1}, {2}}), 1u);
  EXPECT_FALSE(test::reference_order(1, {}, 500).has_value());
}

TEST(CosetEnumeration, AgreesWithReferenceOnSlices) {
  for (const auto& entry : test::catalog()) {
    const GroupPtr g = make_group(entry.spec);
    // the slice the verifier settled on, and for small groups one twice as long
    const std::uint64_t rounds = verify_finite_iso(g).rounds;
    const auto p = build_presentation(g, 2 * rounds);
    std::vector<std::uint64_t> sizes{rounds};
    if (entry.order < 8) sizes.push_back(2 * rounds);
    for (const std::uint64_t n : sizes) {
      const PresentationSlice s = make_slice(p, n);
      const CosetTable t = coset_enumerate(s);
      const auto expected = test::reference_order(n, test::relators_within(p, n));
      ASSERT_TRUE(expected.has_value()) << entry.name;
      ASSERT_TRUE(t.closed()) << entry.name;
      EXPECT_EQ(t.coset_count, *expected) << entry.name << " N=" << n;
      EXPECT_EQ(check_coset_table(t, s), "") << entry.name;
    }
  }
}

TEST(CosetEnumeration, OverflowAndBadSlices) {
  PresentationSlice free_rank_one{1, {}};
  EXPECT_EQ(coset_enumerate(free_rank_one, 50).status, CosetStatus::Overflowed);
  test::expect_error(ErrorCode::InvalidSlice, [] { coset_enumerate({0, {}}); });
  test::expect_error(ErrorCode::InvalidSlice, [] { coset_enumerate({2, {Relation::pair(1, 1, 3)}}); });
}

TEST(CosetEnumeration, TableActionsAreInverse) {
  const GroupPtr q8 = make_group({GroupKind::Quaternion8, 1, {}, {}});
  const auto p = build_presentation(q8, 256);
  const auto s = make_slice(p, 256);
  const CosetTable t = coset_enumerate(s);
  ASSERT_TRUE(t.closed());
  EXPECT_EQ(t.coset_count, 8u);
  for (std::uint64_t c = 0; c < t.coset_count; ++c) {
    for (std::uint64_t x = 0; x < t.columns(); x += 2) {
      const auto d = t.act(c, x);
      ASSERT_GE(d, 0);
      EXPECT_EQ(t.act(static_cast<std::uint64_t>(d), x + 1), static_cast<std::int32_t>(c));
    }
  }
}

TEST(VerifyIso, CatalogPasses) {
  for (const auto& entry : test::catalog()) {
    const IsoCertificate c = verify_finite_iso(make_group(entry.spec));
    EXPECT_EQ(c.verdict, Verdict::Pass) << entry.name << ": " << c.note;
    ASSERT_TRUE(c.order_presented.has_value());
    EXPECT_EQ(*c.order_presented, entry.order);
    EXPECT_TRUE(c.surjective);
    EXPECT_TRUE(c.relators_trivial);
    EXPECT_LE(c.cosets_defined, kDefaultMaxCosets);
  }
}

TEST(VerifyIso, SymmetricGroupSliceIsSurjective) {
  const GroupPtr s3 = make_group({GroupKind::Symmetric, 3, {}, {}});
  const auto c = verify_finite_iso(s3);
  const auto p = build_presentation(s3, c.rounds);
  std::set<ElementId> hit;
  for (std::uint64_t n = 1; n <= c.generators; ++n) hit.insert(GeneratorSequence(*s3).value(n));
  EXPECT_EQ(hit.size(), 6u);
  for (const auto& r : p.relations) EXPECT_EQ(relator_image(*s3, p, r.label), kIdentity);
}

TEST(VerifyIso, InfiniteGroupRejected) {
  const GroupPtr z = make_group(test::integers_spec());
  const auto code = test::error_of([&] { verify_finite_iso(z); });
  ASSERT_TRUE(code.has_value());
  EXPECT_EQ(*code, ErrorCode::InfiniteGroup);
  try {
    verify_finite_iso(z);
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "finite verification requires finite group");
  }
}

TEST(VerifyIso, TinyBudgetIsInconclusive) {
  const GroupPtr d4 = make_group({GroupKind::Dihedral, 4, {}, {}});
  EXPECT_EQ(verify_finite_iso(d4, {100'000, 10}).verdict, Verdict::Inconclusive);
  EXPECT_EQ(verify_finite_iso(d4, {20, 1u << 14}).verdict, Verdict::Inconclusive);
}

TEST(GraphBetti, CycleRank) {
  EXPECT_EQ(graph_betti({1, {}}), 0);
  EXPECT_EQ(graph_betti({1, {{0, 0}, {0, 0}}}), 2);
  EXPECT_EQ(graph_betti({3, {{0, 1}, {1, 2}, {2, 0}}}), 1);
  test::expect_error(ErrorCode::Disconnected, [] { graph_betti({2, {}}); });
}
