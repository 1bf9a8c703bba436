#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibforge/fivetuple.hpp"
#include "fibforge/invariants.hpp"

using namespace fibforge;

TEST_CASE("exponent triples") {
  auto t2 = exponent_triples(2);
  CHECK(t2.size() == 6);
  auto t4 = exponent_triples(4);
  CHECK(t4.size() == 15);
  CHECK(triple_key({1, 0, 1}) == "101");
}

TEST_CASE("example families carry the advertised degrees") {
  FiveTuple m0 = make_m0(1);
  CHECK(m0.d == std::array<int, 3>{1, 3, 3});
  CHECK(m0.e0 == 2);
  CHECK(validate(m0).empty());

  FiveTuple s36 = make_slope36(1);
  CHECK(s36.d == std::array<int, 3>{1, 4, 5});
  CHECK(s36.e0 == 2);

  FiveTuple s48 = make_slope4813(1);
  CHECK(s48.d == std::array<int, 3>{1, 5, 7});
  CHECK(s48.e0 == 2);
  // Tilde family: no beta with j0 = 0 and j2 = 0
  for (const auto& [k, v] : s48.beta) {
    (void)v;
    bool allowed = (k == ExpTriple{1, 0, 3}) || (k[0] == 0 && k[2] >= 1);
    CHECK(allowed);
  }

  FiveTuple low = make_lowslope(1, 1, 0);
  CHECK(low.d == std::array<int, 3>{1, 1, 1});
  CHECK(low.e0 == 2);
  // Tilde conic: no alpha 200 or 110
  CHECK(low.alpha.find(ExpTriple{2, 0, 0}) == low.alpha.end());
  CHECK(low.alpha.find(ExpTriple{1, 1, 0}) == low.alpha.end());

  FiveTuple fam = make_slope_family(1, Rat(8, 3), 1);
  CHECK(fam.d == std::array<int, 3>{1, 1, 1});
  CHECK(fam.e0 == 2);  // (4 - 8/3) * 3/2 = 2
  CHECK_THROWS(make_slope_family(1, Rat(3), 1));  // e0 = 3/2 not integral
  CHECK_THROWS(make_slope_family(1, Rat(7, 2), 1));
  CHECK_THROWS(make_lowslope(1, 1, 1));  // 2m > d
}

TEST_CASE("generation is deterministic and validates") {
  for (std::uint64_t seed : {1ull, 2ull, 17ull, 1234567ull}) {
    FiveTuple a = make_m0(seed), b = make_m0(seed);
    CHECK(to_json(a) == to_json(b));
    CHECK(validate(a).empty());
    CHECK(validate(make_slope36(seed)).empty());
    CHECK(validate(make_slope4813(seed)).empty());
    CHECK(validate(make_lowslope(seed, 1, 0)).empty());
  }
  CHECK(to_json(make_m0(1)) != to_json(make_m0(2)));
}

TEST_CASE("validate flags the documented failure modes") {
  // necessary inequality: d=(1,1,1), e0=3 has min(d0+d2, 2d1) = 2 < 3
  FiveTuple bad;
  bad.d = {1, 1, 1};
  bad.e0 = 3;
  bad.alpha[{0, 0, 2}] = Section(-1, UniPoly());
  auto v = validate(bad);
  bool found = false;
  for (const auto& viol : v)
    if (viol.code == "necessary_bound") found = true;
  CHECK(found);

  // all alpha divisible by u
  FiveTuple common;
  common.d = {1, 1, 1};
  common.e0 = 1;
  common.alpha[{1, 0, 1}] = Section(1, UniPoly{0, 1});
  common.alpha[{0, 2, 0}] = Section(1, UniPoly{0, 2});
  found = false;
  for (const auto& viol : validate(common))
    if (viol.code == "common_zero") found = true;
  CHECK(found);

  // common zero over infinity only: sections u and 2u in O(2) vanish at v=0
  FiveTuple inf;
  inf.d = {1, 1, 1};
  inf.e0 = 0;
  inf.alpha[{1, 0, 1}] = Section(2, UniPoly{0, 1});
  inf.alpha[{0, 2, 0}] = Section(2, UniPoly{1, 1});
  found = false;
  for (const auto& viol : validate(inf))
    if (viol.code == "common_zero") found = true;
  CHECK(found);
}

TEST_CASE("json round trip") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    FiveTuple t = seed % 2 ? make_m0(seed) : make_slope4813(seed);
    FiveTuple back = from_json(to_json(t));
    CHECK(t.d == back.d);
    CHECK(t.e0 == back.e0);
    CHECK(t.alpha == back.alpha);
    CHECK(t.beta == back.beta);
  }
}

TEST_CASE("json errors carry field paths") {
  CHECK_THROWS_AS(from_json("{"), TupleParseError);
  // missing beta
  try {
    from_json(R"({"base_genus":0,"d":[1,3,3],"e0":2,"alpha":{}})");
    CHECK(false);
  } catch (const TupleParseError& e) {
    CHECK(e.path == "beta");
  }
  // coefficient "1/3" parses exactly
  FiveTuple t = from_json(
      R"({"base_genus":0,"d":[1,3,3],"e0":2,"alpha":{"002":["1/3"]},"beta":{}})");
  CHECK(t.alpha_at({0, 0, 2}).chart0().coeff(0) == Rat(1, 3));
  // degree mismatch: alpha.200 on (1,3,3), e0=2 must be constant
  try {
    from_json(R"({"base_genus":0,"d":[1,3,3],"e0":2,"alpha":{"200":["1","2"]},"beta":{}})");
    CHECK(false);
  } catch (const TupleParseError& e) {
    CHECK(e.path == "alpha.200");
  }
}

TEST_CASE("conic perturbation leaves degrees valid") {
  // family with a nonzero perturbation space: d=(2,2,2), e0=3
  FiveTuple t = draw_tuple({2, 2, 2}, 3, PhiFamily::Tilde, PsiFamily::General, 4);
  REQUIRE(validate(t).empty());
  FiveTuple pert = perturb_beta_by_conic(t, 99);
  CHECK(validate(pert).empty());
  CHECK(to_json(pert) != to_json(t));  // perturbation space is nontrivial here
  // m0 has empty perturbation space: tuple unchanged
  FiveTuple m0 = make_m0(3);
  CHECK(to_json(perturb_beta_by_conic(m0, 5)) == to_json(m0));
}
