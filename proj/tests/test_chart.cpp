#include <doctest.h>

#include <random>

#include "pinj/chart.hpp"
#include "pinj/counting.hpp"
#include "pinj/element.hpp"
#include "pinj/errors.hpp"
#include "test_util.hpp"

using namespace pinj;
using pinj::testing::random_element;

namespace {

PartialInjection example10() {
  return parse_chart("(1,7,2,4)[3,5,10][9,6][8]", 10);
}

}  // namespace

TEST_CASE("chart decomposition of the basic elements") {
  const auto chart = chart_decomposition(example10());
  REQUIRE(chart.cycles.size() == 1);
  CHECK(chart.cycles[0] == std::vector<int>{1, 7, 2, 4});
  REQUIRE(chart.chains.size() == 3);
  CHECK(chart.chains[0] == std::vector<int>{3, 5, 10});
  CHECK(chart.chains[1] == std::vector<int>{9, 6});
  CHECK(chart.chains[2] == std::vector<int>{8});

  const auto zero3 = chart_decomposition(PartialInjection::zero(3));
  CHECK(zero3.cycles.empty());
  CHECK(zero3.chains ==
        std::vector<std::vector<int>>{{1}, {2}, {3}});

  const auto id3 = chart_decomposition(PartialInjection::identity(3));
  CHECK(id3.chains.empty());
  CHECK(id3.cycles == std::vector<std::vector<int>>{{1}, {2}, {3}});
}

TEST_CASE("canonical form is unique") {
  // same element written with rotated cycle and permuted terms
  const auto a = parse_chart("(7,2,4,1) [9,6][3,5,10]  [8]", 10);
  CHECK(a == example10());
  CHECK(render_chart(a) == "(1,7,2,4)[3,5,10][9,6][8]");
}

TEST_CASE("chart parser rejects malformed text") {
  CHECK_THROWS_AS(parse_chart("(1,2](3)", 3), SyntaxError);
  CHECK_THROWS_AS(parse_chart("(1,2", 2), SyntaxError);
  CHECK_THROWS_AS(parse_chart("1,2", 2), SyntaxError);
  CHECK_THROWS_AS(parse_chart("()", 1), SyntaxError);
  CHECK_THROWS_AS(parse_chart("(1,,2)", 2), SyntaxError);
  // whitespace is allowed between terms only
  CHECK_THROWS_AS(parse_chart("(1 ,2)", 2), SyntaxError);
  CHECK_THROWS_AS(parse_chart("( 1,2)", 2), SyntaxError);
  CHECK_THROWS_AS(parse_chart("[1]", 2), MissingPoint);
  CHECK_THROWS_AS(parse_chart("[1][1]", 2), RepeatedPoint);
  CHECK_THROWS_AS(parse_chart("[1][2][3]", 2), PointOutOfRange);
  CHECK_THROWS_AS(parse_chart("[0][1]", 1), PointOutOfRange);
}

TEST_CASE("zero and empty charts") {
  CHECK(parse_chart("[1][2][3]", 3) == PartialInjection::zero(3));
  CHECK(parse_chart("", 0) == PartialInjection::zero(0));
  CHECK(parse_chart("   ", 0) == PartialInjection::zero(0));
  CHECK(render_chart(PartialInjection::zero(0)).empty());
}

TEST_CASE("parse inverts render on every element") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& a : all_elements(n, EnumFilter::all())) {
      CHECK(parse_chart(render_chart(a), n) == a);
      CHECK(from_chart(chart_decomposition(a)) == a);
    }
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_element(rng, 5 + trial % 8);
    CHECK(parse_chart(render_chart(a), a.n()) == a);
  }
}

TEST_CASE("profile of the running example") {
  const auto p = profile(example10());
  CHECK(p.rank == 7);
  CHECK(p.defect == 3);
  CHECK(p.stable_rank == 4);
  CHECK(!p.nilpotent);
  CHECK(p.nilpotency_index == 0);
  CHECK(p.fixed_point_count == 0);
  CHECK(p.chain_type.cycle_counts[4 - 1] == 1);
  CHECK(p.chain_type.chain_counts[3 - 1] == 1);
  CHECK(p.chain_type.chain_counts[2 - 1] == 1);
  CHECK(p.chain_type.chain_counts[1 - 1] == 1);
}

TEST_CASE("profile of zero and identity") {
  for (int n : {1, 4}) {
    const auto z = profile(PartialInjection::zero(n));
    CHECK(z.rank == 0);
    CHECK(z.defect == n);
    CHECK(z.stable_rank == 0);
    CHECK(z.nilpotent);
    CHECK(z.nilpotency_index == 1);
    CHECK(z.fixed_point_count == 0);

    const auto e = profile(PartialInjection::identity(n));
    CHECK(e.rank == n);
    CHECK(e.defect == 0);
    CHECK(e.stable_rank == n);
    CHECK(!e.nilpotent);
    CHECK(e.fixed_point_count == n);
  }
  CHECK(profile(PartialInjection::zero(0)).nilpotency_index == 1);
}

TEST_CASE("nilpotency index is the longest chain") {
  const auto a = parse_chart("[1,2,3][4,5]", 5);
  const auto p = profile(a);
  CHECK(p.nilpotent);
  CHECK(p.nilpotency_index == 3);
  CHECK(a.power(2) != PartialInjection::zero(5));
  CHECK(a.power(3) == PartialInjection::zero(5));
}

TEST_CASE("nilpotent iff no cycles iff n-th power vanishes") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& a : all_elements(n, EnumFilter::all())) {
      const auto p = profile(a);
      CHECK(p.nilpotent == chart_decomposition(a).cycles.empty());
      CHECK(p.nilpotent == (a.power(std::max(n, 1)) ==
                            PartialInjection::zero(n)));
    }
}

TEST_CASE("orbits of the running example") {
  const auto e = example10();
  const auto o1 = orbit(e, 1);
  CHECK(o1.points == std::vector<int>{1, 7, 2, 4});
  CHECK(o1.length() == 4);
  CHECK(o1.returns_to_start);

  const auto o3 = orbit(e, 3);
  CHECK(o3.points == std::vector<int>{3, 5, 10});
  CHECK(o3.length() == 3);
  CHECK(!o3.returns_to_start);

  CHECK(orbit(PartialInjection::zero(3), 1).length() == 0);
  CHECK(orbit(e, 8).length() == 0);
  CHECK_THROWS_AS(orbit(e, 11), PointOutOfRange);
}

TEST_CASE("chain type totals") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + trial % 8;
    const auto a = random_element(rng, n);
    const auto type = chain_type(a);
    int weighted = 0, chains = 0;
    for (int i = 1; i <= n; ++i) {
      weighted += i * (type.cycle_counts[i - 1] + type.chain_counts[i - 1]);
      chains += type.chain_counts[i - 1];
    }
    CHECK(weighted == n);
    CHECK(chains == a.defect());
    CHECK(static_cast<int>(chart_decomposition(a).chains.size()) ==
          a.defect());
  }
}
