#include <doctest.h>

#include "pinj/bijections.hpp"
#include "pinj/chart.hpp"
#include "pinj/counting.hpp"
#include "pinj/errors.hpp"
#include "pinj/json_io.hpp"

using namespace pinj;

TEST_CASE("lah defect map on the smallest example") {
  // 1 -> 2 in IS_2, marked point 1: the forward orbit {2} is re-sorted,
  // leaving the fixed point (2) and the marked singleton chain [1]
  const auto a = parse_chart("[1,2]", 2);
  const auto out = lah_defect_forward({a, PointMark{1}});
  CHECK(render_chart(out.element) == "(2)[1]");
  const auto chart = chart_decomposition(out.element);
  const auto* mark = std::get_if<ChainMark>(&out.mark);
  REQUIRE(mark != nullptr);
  CHECK(chart.chains[mark->chain] == std::vector<int>{1});

  const auto back = lah_defect_backward(out);
  CHECK(back.element == a);
  CHECK(std::get<PointMark>(back.mark).x == 1);
}

TEST_CASE("lah defect map preserves the defect") {
  const auto a = parse_chart("[2,4,1][3][5]", 5);
  REQUIRE(profile(a).nilpotent);
  for (int x = 1; x <= 5; ++x) {
    const auto out = lah_defect_forward({a, PointMark{x}});
    CHECK(out.element.defect() == a.defect());
    CHECK(lah_defect_backward(out) == MarkedElement{a, PointMark{x}});
  }

  // and exhaustively over every nilpotent at n = 4
  for (const auto& b : all_elements(4, EnumFilter::nilpotent()))
    for (int x = 1; x <= 4; ++x)
      CHECK(lah_defect_forward({b, PointMark{x}}).element.defect() ==
            b.defect());
}

TEST_CASE("lah defect map rejects non-nilpotent input") {
  CHECK_THROWS_AS(
      lah_defect_forward({PartialInjection::identity(2), PointMark{1}}),
      NotNilpotent);
  CHECK_THROWS_AS(
      lah_defect_forward({PartialInjection::zero(2), ChainMark{0}}),
      InvalidMark);
}

TEST_CASE("cycle-chain map on the running example") {
  const auto a = parse_chart("(1,7,2,4)[3,5,10][9,6][8]", 10);
  const auto chart = chart_decomposition(a);
  REQUIRE(chart.cycles.size() == 1);
  const auto out = cycle_chain_forward({a, CyclePointMark{0, 7}});
  // the cycle rotated to base 7 becomes the chain [7,2,4,1]
  const auto out_chart = chart_decomposition(out.element);
  const auto* mark = std::get_if<ChainMark>(&out.mark);
  REQUIRE(mark != nullptr);
  CHECK(out_chart.chains[mark->chain] == std::vector<int>{7, 2, 4, 1});
  CHECK(profile(out.element).nilpotent);

  const auto back = cycle_chain_backward(out);
  CHECK(back.element == a);
  CHECK(std::get<CyclePointMark>(back.mark).base == 7);
}

TEST_CASE("cycle-chain map on the singleton") {
  const auto out =
      cycle_chain_forward({PartialInjection::identity(1), CyclePointMark{0, 1}});
  CHECK(out.element == PartialInjection::zero(1));
  CHECK(std::get<ChainMark>(out.mark).chain == 0);
}

TEST_CASE("fixed point map cases") {
  // source of a chain of length two: [1,2] -> (1)(2) with pair (1,2)
  const auto a = parse_chart("[1,2]", 2);
  const auto out = fixed_point_forward({a, PointMark{1}});
  CHECK(render_chart(out.element) == "(1)(2)");
  CHECK(std::get<PointPairMark>(out.mark) == PointPairMark{1, 2});
  CHECK(fixed_point_backward(out) == MarkedElement{a, PointMark{1}});

  // singleton chain: [1] -> (1) with pair (1,1)
  const auto z = PartialInjection::zero(1);
  const auto out1 = fixed_point_forward({z, PointMark{1}});
  CHECK(render_chart(out1.element) == "(1)");
  CHECK(std::get<PointPairMark>(out1.mark) == PointPairMark{1, 1});
  CHECK(fixed_point_backward(out1) == MarkedElement{z, PointMark{1}});

  // interior point of a chain
  const auto b = parse_chart("[1,2,3]", 3);
  const auto out2 = fixed_point_forward({b, PointMark{2}});
  CHECK(render_chart(out2.element) == "(2)[1,3]");
  CHECK(std::get<PointPairMark>(out2.mark) == PointPairMark{2, 1});
  CHECK(fixed_point_backward(out2) == MarkedElement{b, PointMark{2}});

  // last point of a chain
  const auto out3 = fixed_point_forward({b, PointMark{3}});
  CHECK(render_chart(out3.element) == "(3)[1,2]");
  CHECK(fixed_point_backward(out3) == MarkedElement{b, PointMark{3}});

  // a cycle point routes through the cycle-chain map
  const auto c = parse_chart("(1,2)", 2);
  const auto out4 = fixed_point_forward({c, PointMark{2}});
  CHECK(std::holds_alternative<ChainMark>(out4.mark));
  CHECK(fixed_point_backward(out4) == MarkedElement{c, PointMark{2}});
}

TEST_CASE("fixed point map rejects a non-fixed mark") {
  CHECK_THROWS_AS(
      fixed_point_backward({parse_chart("[1,2]", 2), PointPairMark{1, 2}}),
      InvalidMark);
}

TEST_CASE("orbit-chain map cases") {
  // 1 on a singleton cycle
  const auto out =
      orbit_chain_forward({PartialInjection::identity(1), PointMark{1}});
  CHECK(out.element == PartialInjection::zero(1));
  CHECK(orbit_chain_backward(out) ==
        MarkedElement{PartialInjection::identity(1), PointMark{1}});

  // x = 2 on the cycle (1,2): the cycle opens at the base point
  const auto c = parse_chart("(1,2)", 2);
  const auto out1 = orbit_chain_forward({c, PointMark{2}});
  const auto chart1 = chart_decomposition(out1.element);
  CHECK(chart1.chains[std::get<ChainMark>(out1.mark).chain] ==
        std::vector<int>{2, 1});
  CHECK(orbit_chain_backward(out1) == MarkedElement{c, PointMark{2}});

  // x = 1 inside a chain: the prefix closes into a cycle
  const auto b = parse_chart("[3,1,2]", 3);
  const auto out2 = orbit_chain_forward({b, PointMark{1}});
  CHECK(render_chart(out2.element) == "(1,3)[2]");
  CHECK(chart_decomposition(out2.element)
            .chains[std::get<ChainMark>(out2.mark).chain] ==
        std::vector<int>{2});
  CHECK(orbit_chain_backward(out2) == MarkedElement{b, PointMark{1}});

  // x beyond 1 on the same chain: split before x
  const auto out3 = orbit_chain_forward({b, PointMark{2}});
  CHECK(render_chart(out3.element) == "[3,1][2]");
  CHECK(orbit_chain_backward(out3) == MarkedElement{b, PointMark{2}});

  CHECK_THROWS_AS(orbit_chain_forward({b, PointMark{3}}), InvalidMark);
  CHECK_THROWS_AS(
      orbit_chain_forward({PartialInjection::zero(2), PointMark{1}}),
      InvalidMark);
}

TEST_CASE("permutational-part map") {
  // x = 2 with the fixed point (1) on the rest: chain [1,2]
  const auto a = parse_chart("(1)[2]", 2);
  const auto out = permpart_chain_forward({a, PointMark{2}});
  CHECK(render_chart(out.element) == "[1,2]");
  CHECK(profile(out.element).nilpotent);
  CHECK(permpart_chain_backward(out) == MarkedElement{a, PointMark{2}});

  // empty permutational part: the marked chain is the singleton [x]
  const auto z = PartialInjection::zero(4);
  const auto out1 = permpart_chain_forward({z, PointMark{1}});
  CHECK(out1.element == z);
  CHECK(chart_decomposition(out1.element)
            .chains[std::get<ChainMark>(out1.mark).chain] ==
        std::vector<int>{1});

  // a two-cycle flattens in sorted-domain order
  const auto b = parse_chart("(1,3)[2][4]", 4);
  const auto out2 = permpart_chain_forward({b, PointMark{2}});
  // domain {1,3} sorted maps to images (3,1); the chain is [3,1,2]
  CHECK(chart_decomposition(out2.element)
            .chains[std::get<ChainMark>(out2.mark).chain] ==
        std::vector<int>{3, 1, 2});
  CHECK(permpart_chain_backward(out2) == MarkedElement{b, PointMark{2}});

  CHECK_THROWS_AS(permpart_chain_forward({a, PointMark{1}}), InvalidMark);
  CHECK_THROWS_AS(
      permpart_chain_backward({PartialInjection::identity(2), ChainMark{0}}),
      NotNilpotent);
}

TEST_CASE("cardinality contracts at small sizes") {
  CountContext ctx(6);
  // marked nilpotents vs marked chains per defect
  CHECK(BigInt(5) * ctx.signless_lah(5, 2) ==
        BigInt(2) * rank_class_size(5, 3));
  // chains over the nilpotents of IS_3 count the smaller semigroup
  CHECK(BigInt(3) * ctx.semigroup_size(2) == ctx.nilpotent_chain_total(3));

  for (const auto& s : bijection_sweeps(3, "", Budget{})) {
    INFO(s.name);
    CHECK(s.pass());
  }
}

TEST_CASE("exhaustive sweeps up to n = 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : bijection_sweeps(n, "", Budget{})) {
      INFO(s.name, " at n=", n, ": domain ", s.domain_size.str(),
           " distinct ", s.image_size.str(), " expected ", s.expected.str());
      CHECK(s.pass());
    }
}

TEST_CASE("marked elements round-trip through JSON") {
  const MarkedElement samples[] = {
      {parse_chart("(1,7,2,4)[3,5,10][9,6][8]", 10), PointMark{3}},
      {parse_chart("(1,2)[3]", 3), PointPairMark{1, 2}},
      {parse_chart("[1,2][3]", 3), ChainMark{1}},
      {parse_chart("(1,2)(3)", 3), CyclePointMark{0, 2}},
  };
  for (const auto& m : samples) {
    const auto j = to_json(m);
    CHECK(marked_from_json(j) == m);
  }
}
