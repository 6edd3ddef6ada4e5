#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "gtutte/oracle.hpp"
#include "gtutte/transforms.hpp"
#include "gtutte/tutte.hpp"

using namespace gtutte;

namespace {

ElementList running_list() {
  const FgAbelianGroup gamma = FgAbelianGroup::parse("Z^2 + Z/4");
  return ElementList(gamma, {{2, 2, 1}, {0, 2, 3}, {0, 0, 3}});
}

}  // namespace

TEST_CASE("deletion keeps the complement in order") {
  const ElementList a = running_list();
  const ElementList d = deletion(a, 0b010);
  CHECK(d.size() == 2);
  CHECK(d[0] == a[0]);
  CHECK(d[1] == a[2]);
  CHECK(d.group() == a.group());
  CHECK(deletion(a, 0b111).empty());
  CHECK(deletion(a, 0) == a);
  CHECK_THROWS_AS(deletion(a, 0b1000), std::out_of_range);
}

TEST_CASE("contraction passes to the quotient pair") {
  const FgAbelianGroup z = FgAbelianGroup::free(1);
  const ElementList a(z, {{2}, {4}});
  const auto [q, rest] = contraction(z, a, 0b01);
  CHECK(q.descriptor() == "Z/2");
  REQUIRE(rest.size() == 1);
  CHECK(rest[0].is_zero());  // 4 lands in <2>; the loop is kept

  const ElementList b = running_list();
  const auto [q2, rest2] = contraction(b.group(), b, 0b100);
  CHECK(q2.descriptor() == "Z^2");
  CHECK(rest2.size() == 2);
  CHECK(chromatic_quasi(q2, rest2).constituent(1) == IntPolynomial{1, -2, 1});

  const auto [q3, rest3] = contraction(b.group(), b, 0b011);
  CHECK(q3.descriptor() == "Z/2 + Z/8");
  CHECK(rest3.size() == 1);

  CHECK_THROWS_AS(contraction(z, a, 0b100), std::out_of_range);
}

TEST_CASE("contraction satisfies the counting recursion") {
  const ElementList a = running_list();
  const ElementList del = deletion(a, 0b100);
  const auto [q, con] = contraction(a.group(), a, 0b100);
  for (long m = 1; m <= 8; ++m)
    CHECK(bm_count(a.group(), a, m) ==
          bm_count(a.group(), del, m) - bm_count(q, con, m));
}

TEST_CASE("congruence system to quotient pair") {
  CwInstance cw;
  cw.ell = 1;
  cw.a = IntMatrix{{2}};
  cw.b = IntMatrix{{4}};
  const auto [gamma, a] = cw_to_bm(cw);
  CHECK(gamma.descriptor() == "Z/4");
  REQUIRE(a.size() == 1);
  for (long q = 1; q <= 10; ++q) CHECK(bm_count(gamma, a, q) == cw_count(cw, q));

  CwInstance empty;
  empty.ell = 2;
  empty.a = IntMatrix(2, 0);
  empty.b = IntMatrix(2, 0);
  const auto [free2, none] = cw_to_bm(empty);
  CHECK(free2 == FgAbelianGroup::free(2));
  CHECK(none.empty());

  CwInstance bad;
  bad.ell = 2;
  bad.a = IntMatrix{{1}};  // one row, but ell = 2
  bad.b = IntMatrix(2, 0);
  CHECK_THROWS_AS(cw_to_bm(bad), std::invalid_argument);
}

TEST_CASE("quotient pair to congruence system") {
  const ElementList a = running_list();
  const auto [cw, lifting] = bm_to_cw(a.group(), a);
  CHECK(cw.ell == 3);
  CHECK(cw.a.cols() == 3);
  CHECK(cw.b.cols() == 1);
  CHECK(cw.b.column(0) == std::vector<Int>{0, 0, 4});
  REQUIRE(lifting.a_tilde.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(lifting.a_tilde[i].coords == a[i].coords);
  CHECK(lifting.q_list.size() == 1);

  for (long q = 1; q <= 10; ++q) CHECK(cw_count(cw, q) == bm_count(a.group(), a, q));

  // Round trip recovers a pair presenting the same counting function.
  const auto [gamma2, a2] = cw_to_bm(cw);
  CHECK(gamma2.descriptor() == "Z^2 + Z/4");
  CHECK(a2.size() == 3);
  for (long q = 1; q <= 10; ++q)
    CHECK(bm_count(gamma2, a2, q) == bm_count(a.group(), a, q));
}

TEST_CASE("graph edges become difference vectors") {
  const Graph p3{3, {{1, 2}, {2, 3}}};
  const auto [zv, list] = graph_to_list(p3);
  CHECK(zv == FgAbelianGroup::free(3));
  REQUIRE(list.size() == 2);
  CHECK(list[0].coords == std::vector<Int>{-1, 1, 0});
  CHECK(list[1].coords == std::vector<Int>{0, -1, 1});

  const Graph loopy{2, {{1, 1}, {1, 2}}};
  const auto [zv2, list2] = graph_to_list(loopy);
  CHECK(list2[0].is_zero());
  CHECK_FALSE(list2[1].is_zero());

  CHECK_THROWS_AS(graph_to_list(Graph{2, {{1, 3}}}), std::out_of_range);
  CHECK_THROWS_AS(graph_to_list(Graph{2, {{0, 1}}}), std::out_of_range);
}

TEST_CASE("torsion split") {
  const ElementList a = running_list();
  const auto [free_part, tor_part] = torsion_split(a.group(), a);
  REQUIRE(free_part.size() == 2);
  CHECK(free_part[0] == a[0]);
  CHECK(free_part[1] == a[1]);
  REQUIRE(tor_part.size() == 1);
  CHECK(tor_part[0] == a[2]);

  const FgAbelianGroup z2 = FgAbelianGroup::free(2);
  const ElementList all_free(z2, {{1, 0}, {0, 1}});
  CHECK(torsion_split(z2, all_free).second.empty());

  const FgAbelianGroup c4 = FgAbelianGroup::parse("Z/4");
  const ElementList all_tor(c4, {{1}, {2}});
  CHECK(torsion_split(c4, all_tor).first.empty());
}

TEST_CASE("localization selects the sublist spanning the same flat") {
  const FgAbelianGroup z3 = FgAbelianGroup::free(3);
  const ElementList l(z3, {{2, 2, 1}, {0, 2, 3}, {0, 0, 4}});
  CHECK(localization_mask(l, 0b100) == 0b100);
  CHECK(localization_mask(l, 0b001) == 0b001);
  CHECK(localization_mask(l, 0b011) == 0b011);
  CHECK(localization_mask(l, 0b111) == 0b111);
  CHECK(localization(l, 0b100).size() == 1);
  CHECK(localization(l, 0b100)[0] == l[2]);

  // Scalar multiples land in the same span.
  const FgAbelianGroup z2 = FgAbelianGroup::free(2);
  const ElementList m(z2, {{1, 1}, {2, 2}, {1, 0}});
  CHECK(localization_mask(m, 0b001) == 0b011);
  CHECK(localization_mask(m, 0b010) == 0b011);
  // A basis of the plane drags everything in.
  CHECK(localization_mask(m, 0b101) == 0b111);
  // The span of the empty sublist contains only the zero vector.
  CHECK(localization_mask(m, 0) == 0);

  // Idempotence on the produced masks.
  for (SubsetMask s : {SubsetMask{0b001}, SubsetMask{0b010}, SubsetMask{0b101}}) {
    const SubsetMask loc = localization_mask(m, s);
    CHECK(localization_mask(m, loc) == loc);
  }

  const FgAbelianGroup c4 = FgAbelianGroup::parse("Z/4");
  CHECK_THROWS_AS(localization_mask(ElementList(c4, {{1}}), 0b1),
                  std::invalid_argument);
  const ElementList with_zero(z2, {{0, 0}, {1, 0}});
  CHECK_THROWS_AS(localization_mask(with_zero, 0b01), std::invalid_argument);
  CHECK_THROWS_AS(localization_mask(m, 0b1000), std::out_of_range);
}
