#include <catch2/catch_amalgamated.hpp>

#include "gtutte/group.hpp"

using namespace gtutte;

TEST_CASE("group construction enforces invariant-factor form") {
  CHECK_NOTHROW(FgAbelianGroup(2, {Int(2), Int(4)}));
  CHECK_NOTHROW(FgAbelianGroup(0, {}));
  CHECK_THROWS_AS(FgAbelianGroup(1, {Int(1)}), std::invalid_argument);
  CHECK_THROWS_AS(FgAbelianGroup(1, {Int(0)}), std::invalid_argument);
  CHECK_THROWS_AS(FgAbelianGroup(0, {Int(2), Int(3)}), std::invalid_argument);
  CHECK_THROWS_AS(FgAbelianGroup(0, {Int(4), Int(2)}), std::invalid_argument);
}

TEST_CASE("group descriptor parsing") {
  SECTION("accepted forms") {
    CHECK(FgAbelianGroup::parse("Z") == FgAbelianGroup::free(1));
    CHECK(FgAbelianGroup::parse("Z^3") == FgAbelianGroup::free(3));
    CHECK(FgAbelianGroup::parse("Z^0") == FgAbelianGroup::free(0));
    CHECK(FgAbelianGroup::parse("Z/4") == FgAbelianGroup(0, {Int(4)}));
    CHECK(FgAbelianGroup::parse("Z/4Z") == FgAbelianGroup(0, {Int(4)}));
    CHECK(FgAbelianGroup::parse("Z^2 + Z/4") == FgAbelianGroup(2, {Int(4)}));
    CHECK(FgAbelianGroup::parse("  Z ^ 2+Z/2 + Z / 6 ") ==
          FgAbelianGroup(2, {Int(2), Int(6)}));
    CHECK(FgAbelianGroup::parse("Z + Z") == FgAbelianGroup::free(2));
  }
  SECTION("rejected forms") {
    CHECK_THROWS_AS(FgAbelianGroup::parse(""), parse_error);
    CHECK_THROWS_AS(FgAbelianGroup::parse("Q"), parse_error);
    CHECK_THROWS_AS(FgAbelianGroup::parse("Z^-1"), parse_error);
    CHECK_THROWS_AS(FgAbelianGroup::parse("Z/1"), parse_error);
    CHECK_THROWS_AS(FgAbelianGroup::parse("Z/0"), parse_error);
    CHECK_THROWS_AS(FgAbelianGroup::parse("Z/"), parse_error);
    CHECK_THROWS_AS(FgAbelianGroup::parse("Z/2 + Z/3"), parse_error);
    CHECK_THROWS_AS(FgAbelianGroup::parse("Z/4 + Z/2"), parse_error);
    CHECK_THROWS_AS(FgAbelianGroup::parse("Z++Z"), parse_error);
  }
  SECTION("error message names the field") {
    try {
      FgAbelianGroup::parse("Z/2 + Z/3");
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      CHECK(e.field() == "group");
      CHECK(std::string(e.what()).find("divisibility chain") != std::string::npos);
    }
  }
  SECTION("descriptor round trip") {
    for (const char* text : {"Z^2 + Z/4", "Z^0", "Z^1", "Z/2 + Z/2", "Z^3"}) {
      const FgAbelianGroup g = FgAbelianGroup::parse(text);
      CHECK(FgAbelianGroup::parse(g.descriptor()) == g);
    }
    CHECK(FgAbelianGroup(2, {Int(4)}).descriptor() == "Z^2 + Z/4");
    CHECK(FgAbelianGroup::free(0).descriptor() == "Z^0");
    CHECK(FgAbelianGroup(0, {Int(2), Int(2)}).descriptor() == "Z/2 + Z/2");
  }
}

TEST_CASE("element lists normalize torsion coordinates") {
  const FgAbelianGroup g = FgAbelianGroup::parse("Z + Z/4");
  const ElementList a(g, {{-2, -1}, {3, 7}, {0, 4}});
  CHECK(a[0].coords == std::vector<Int>{-2, 3});  // free coordinate untouched
  CHECK(a[1].coords == std::vector<Int>{3, 3});
  CHECK(a[2].coords == std::vector<Int>{0, 0});
  CHECK(a[2].is_zero());
  CHECK_FALSE(a[0].is_zero());

  CHECK_THROWS_AS(ElementList(g, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(ElementList(g, {{1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("sublist masks") {
  const FgAbelianGroup g = FgAbelianGroup::free(1);
  const ElementList a(g, {{1}, {2}, {3}});
  CHECK(a.full_mask() == 0b111);
  CHECK(a.sublist(0b101).size() == 2);
  CHECK(a.sublist(0b101)[0].coords == std::vector<Int>{1});
  CHECK(a.sublist(0b101)[1].coords == std::vector<Int>{3});
  CHECK(a.sublist(0).empty());
  CHECK(ElementList(g).full_mask() == 0);
}

TEST_CASE("coefficient group hom counts") {
  // #Hom(Z/d, Z/k) = gcd(d, k)
  CHECK(GSpec::cyclic(4).hom_count_from_cyclic(6) == 2);
  CHECK(GSpec::cyclic(1).hom_count_from_cyclic(6) == 1);
  CHECK(GSpec::cyclic(12).hom_count_from_cyclic(8) == 4);
  // #Hom(Z/d, Z) = 1
  CHECK(GSpec::integers().hom_count_from_cyclic(6) == 1);
  // #Hom(Z/d, Q/Z) = d
  CHECK(GSpec::circle().hom_count_from_cyclic(6) == 6);
  // direct sums multiply
  CHECK(GSpec::cyclic(4).direct_sum(GSpec::circle()).hom_count_from_cyclic(6) == 12);
  CHECK(GSpec::cyclic(2).direct_sum(GSpec::cyclic(2)).hom_count_from_cyclic(2) == 4);

  CHECK_THROWS_AS(GSpec::cyclic(0), std::invalid_argument);
}

TEST_CASE("coefficient group text forms") {
  CHECK(GSpec::parse("k:4").str() == "Z/4");
  CHECK(GSpec::parse("Z").str() == "Z");
  CHECK(GSpec::parse("QZ").str() == "Q/Z");
  CHECK(GSpec::parse("Q/Z").str() == "Q/Z");
  CHECK(GSpec::parse(" k : 12 ").hom_count_from_cyclic(8) == 4);
  CHECK_THROWS_AS(GSpec::parse("k:0"), parse_error);
  CHECK_THROWS_AS(GSpec::parse("R"), parse_error);
  CHECK_THROWS_AS(GSpec::parse(""), parse_error);
}
