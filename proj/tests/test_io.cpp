#include <gtest/gtest.h>

#include "compactum/io.hpp"
#include "compactum/svg.hpp"
#include "test_support.hpp"

using namespace compactum;

TEST(GroupFile, ParsesCatalogKinds) {
  const GroupSpec c6 = parse_group_spec(R"({"kind":"cyclic","n":6})");
  EXPECT_EQ(c6.kind, GroupKind::Cyclic);
  EXPECT_EQ(*make_group(c6)->order(), 6u);

  const GroupSpec t2 = parse_group_spec(R"({"kind":"table","order":2,"table":[[0,1],[1,0]]})");
  EXPECT_EQ(*make_group(t2)->order(), 2u);

  const GroupSpec prod =
      parse_group_spec(R"({"kind":"product","factors":[{"kind":"quaternion8"},{"kind":"integers"}]})");
  EXPECT_FALSE(make_group(prod)->is_finite());
  EXPECT_EQ(parse_group_spec(group_spec_json(prod)), prod);
  for (const auto& entry : test::catalog()) {
    EXPECT_EQ(parse_group_spec(group_spec_json(entry.spec)), entry.spec) << entry.name;
  }
}

TEST(GroupFile, Errors) {
  test::expect_error(ErrorCode::NoIdentity,
                     [] { parse_group_spec(R"({"kind":"table","order":2,"table":[[1,0],[0,1]]})"); });
  test::expect_error(ErrorCode::ValidationError, [] { parse_group_spec(R"({"kind":"cyclic"})"); });
  test::expect_error(ErrorCode::ValidationError, [] { parse_group_spec(R"({"kind":"cyclic","n":0})"); });
  test::expect_error(ErrorCode::ValidationError,
                     [] { parse_group_spec(R"({"kind":"table","order":3,"table":[[0,1],[1,0]]})"); });
  test::expect_error(ErrorCode::UnknownGroupKind, [] { parse_group_spec(R"({"kind":"lattice"})"); });
  try {
    parse_group_spec("{\"kind\":\n  \"cyclic\",, \"n\": 2}");
    FAIL() << "accepted malformed JSON";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 2, column 12"), std::string::npos) << e.what();
  }
}

TEST(PresentationText, FormatAndRoundTrip) {
  const GroupPtr z2 = make_group({GroupKind::Cyclic, 2, {}, {}});
  const auto p = build_presentation(z2, 2);
  const std::string text = presentation_text(p, *z2);
  EXPECT_EQ(text,
            "gen 1 = e\ngen 2 = e\ngen 4 = e\ngen 6 = e\ngen 7 = a\ngen 9 = a\n"
            "rel 1: g1\nrel 2: g1 g2\nrel 3: g1 g2 g4\nrel 4: g2\nrel 5: g2 g4\nrel 6: g6 g7 g9\n");
  for (const auto& spec : {GroupSpec{GroupKind::Symmetric, 3, {}, {}}, test::integers_spec()}) {
    const GroupPtr g = make_group(spec);
    const auto q = build_presentation(g, 120);
    const auto back = parse_presentation(presentation_text(q, *g), *g);
    EXPECT_EQ(back.relations, q.relations);
    EXPECT_EQ(back.generator_values, q.generator_values);
    EXPECT_EQ(back.type3_used, q.type3_used);
  }
}

TEST(PresentationText, Errors) {
  const GroupPtr z2 = make_group({GroupKind::Cyclic, 2, {}, {}});
  test::expect_error(ErrorCode::ValidationError, [&] { parse_presentation("gen 3 = e\n", *z2); });
  test::expect_error(ErrorCode::ParseError, [&] { parse_presentation("gen 1 = e\nrel 1: g2\n", *z2); });
  test::expect_error(ErrorCode::ParseError, [&] { parse_presentation("gen 1 = e", *z2); });
  test::expect_error(ErrorCode::ParseError, [&] { parse_presentation("gen 1 = e\nrel 2: g1\n", *z2); });
  test::expect_error(ErrorCode::ParseError, [&] { parse_presentation("gen 1 = e\nrel 1: g1 \n", *z2); });
}

TEST(SceneFile, RoundTripAndDeterminism) {
  const GroupSpec spec{GroupKind::Cyclic, 6, {}, {}};
  Scene4 k = build_K(make_group(spec), 25);
  k.meta.group = group_spec_json(spec);
  k.meta.group_hash = fnv1a_hex(k.meta.group);
  const std::string text = scene_json(k);
  EXPECT_EQ(parse_scene(text), k);
  EXPECT_EQ(scene_json(parse_scene(text)), text);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(text.find(" \n"), std::string::npos);
  EXPECT_NE(text.find("\"label\":\"cap/25\""), std::string::npos);

  const Scene4 empty;
  EXPECT_EQ(parse_scene(scene_json(empty)), empty);
}

TEST(SceneFile, Errors) {
  test::expect_error(ErrorCode::ParseError, [] { parse_scene("{"); });
  test::expect_error(ErrorCode::ValidationError, [] { parse_scene(R"({"primitives":[]})"); });
  const std::string bad_kind =
      R"({"meta":{"group":null,"group_hash":"","relations":0,"generators":0,"version":""},)"
      R"("primitives":[{"kind":"disk","label":"axis","points":[]}]})";
  test::expect_error(ErrorCode::ValidationError, [&] { parse_scene(bad_kind); });
  const std::string bad_points =
      R"({"meta":{"group":null,"group_hash":"","relations":0,"generators":0,"version":""},)"
      R"("primitives":[{"kind":"segment","label":"axis","points":[["0/1","0/1","0/1","0/1"]]}]})";
  test::expect_error(ErrorCode::ValidationError, [&] { parse_scene(bad_points); });
}

TEST(Svg, EmptyResultHasCanvasOnly) {
  const std::string svg = render_svg(SliceResult{});
  EXPECT_EQ(svg.find("<path"), std::string::npos);
  EXPECT_NE(svg.find("viewBox=\"0 0 1000 1000\""), std::string::npos);
}

TEST(Svg, CoordinateMapAndFill) {
  SliceResult r;
  r.items.push_back({Kind2::Polygon, {{0, 0}, {1, q(2, 5)}, {1, 1}}, {Tag::Cap, 2}, false});
  r.items.push_back({Kind2::Segment, {{0, 0}, {q(1, 2), 0}}, {Tag::Axis}, false});
  const std::string svg = render_svg(r);
  EXPECT_NE(svg.find("d=\"M40 960 L960 592 L960 40 Z\" fill=\"#999999\""), std::string::npos) << svg;
  EXPECT_NE(svg.find("d=\"M40 960 L500 960\" fill=\"none\""), std::string::npos) << svg;
  EXPECT_EQ(render_svg(r), svg);
}

TEST(Svg, OutOfRange) {
  SliceResult r;
  r.items.push_back({Kind2::Point, {{q(3, 2), 0}}, {Tag::Axis}, false});
  test::expect_error(ErrorCode::OutOfRange, [&] { render_svg(r); });
}

TEST(Rational, TextForms) {
  EXPECT_EQ(to_text(q(2, 4)), "1/2");
  EXPECT_EQ(to_text(q(3)), "3/1");
  EXPECT_EQ(parse_rational("6/8"), q(3, 4));
  EXPECT_EQ(parse_rational("-2"), q(-2));
  test::expect_error(ErrorCode::ParseError, [] { parse_rational("1/0"); });
  test::expect_error(ErrorCode::ParseError, [] { parse_rational("0.5"); });
  EXPECT_EQ(to_decimal(q(2000, 3), 3), "666.667");
  EXPECT_EQ(to_decimal(q(-1, 8), 2), "-0.13");
  EXPECT_EQ(to_decimal(q(5), 3), "5");
}
