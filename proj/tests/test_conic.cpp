#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibforge/conic.hpp"

using namespace fibforge;

namespace {

// assemble a tilde-form tuple (alpha 101, 020, 011, 002 only) on degrees
// where those sections admit the given chart-0 polynomials
FiveTuple tilde_tuple(const std::array<int, 3>& d, int e0, UniPoly a101, UniPoly a020,
                      UniPoly a011, UniPoly a002) {
  FiveTuple t;
  t.d = d;
  t.e0 = e0;
  auto put = [&](ExpTriple k, UniPoly p) {
    int deg = t.alpha_degree(k);
    if (!p.is_zero()) t.alpha[k] = Section(deg, std::move(p));
  };
  put({1, 0, 1}, std::move(a101));
  put({0, 2, 0}, std::move(a020));
  put({0, 1, 1}, std::move(a011));
  put({0, 0, 2}, std::move(a002));
  return t;
}

// brute-force cofactor determinant, kept independent of det3 in conic.cpp
UniPoly cofactor_det(const Mat3& m) {
  UniPoly acc;
  int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
  for (int s = 0; s < 6; ++s) {
    UniPoly term = UniPoly::constant(s < 3 ? 1 : -1);
    for (int i = 0; i < 3; ++i)
      term *= m[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[s][i])];
    acc += term;
  }
  return acc;
}

bool node_equals(const std::array<NFElem, 3>& node, std::array<Rat, 3> want) {
  // compare projectively over the rationals
  for (int i = 0; i < 3; ++i) {
    const NFElem& c = node[static_cast<std::size_t>(i)];
    if (!c.is_rational()) return false;
  }
  // find scale
  for (int i = 0; i < 3; ++i) {
    Rat a = node[static_cast<std::size_t>(i)].rational_value();
    if (a != 0 && want[static_cast<std::size_t>(i)] != 0) {
      Rat s = want[static_cast<std::size_t>(i)] / a;
      for (int j = 0; j < 3; ++j)
        if (node[static_cast<std::size_t>(j)].rational_value() * s !=
            want[static_cast<std::size_t>(j)])
          return false;
      return true;
    }
    if ((a == 0) != (want[static_cast<std::size_t>(i)] == 0)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("build_conic determinant and transition") {
  // alpha101 = 1, alpha020 = u, alpha011 = 0, alpha002 = 1 gives det = -u/4
  FiveTuple t = tilde_tuple({1, 4, 5}, 6, UniPoly::constant(1), UniPoly::var(), UniPoly(),
                            UniPoly::constant(1));
  ConicData c = build_conic(t);
  CHECK(c.det0 == UniPoly::var() * Rat(-1, 4));
  CHECK(c.det0 == cofactor_det(c.m0));
  CHECK(c.det1 == cofactor_det(c.m1));
  // transition consistency at five sample points
  int deg = c.det_section_degree;
  for (int k = 1; k <= 5; ++k) {
    Rat u(k);
    CHECK(c.det1.eval(Rat(1) / u) * rat_pow(u, deg) == c.det0.eval(u));
  }

  // diagonal conic: det = 1, smooth bundle
  FiveTuple diag;
  diag.d = {1, 1, 1};
  diag.e0 = 2;
  diag.alpha[{2, 0, 0}] = Section(0, UniPoly::constant(1));
  diag.alpha[{0, 2, 0}] = Section(0, UniPoly::constant(1));
  diag.alpha[{0, 0, 2}] = Section(0, UniPoly::constant(1));
  ConicData dc = build_conic(diag);
  CHECK(dc.det0 == UniPoly::constant(1));
  ConicReport rep = classify_singularities(dc);
  CHECK(rep.verdict == ConicVerdict::SmoothConic);
  CHECK(rep.degenerate.empty());

  FiveTuple empty;
  empty.d = {1, 1, 1};
  empty.e0 = 2;
  CHECK_THROWS_WITH(build_conic(empty), "empty conic");
}

TEST_CASE("classifier: A1 node location") {
  // alpha020 = u^2 gives ord 2, node at (0 : 1 : 0)
  FiveTuple t = tilde_tuple({1, 4, 5}, 6, UniPoly::constant(1), UniPoly{0, 0, 1}, UniPoly(),
                            UniPoly::constant(1));
  ConicReport rep = classify_singularities(build_conic(t));
  auto sing = rep.singularities();
  REQUIRE(sing.size() == 1);
  CHECK(sing[0].point == BasePoint::rational(0));
  CHECK(sing[0].an_index() == 1);
  CHECK(node_equals(sing[0].node, {0, 1, 0}));
  CHECK(rep.verdict == ConicVerdict::RDPOnly);
}

TEST_CASE("classifier: A2 under the rank-two hypothesis") {
  // alpha101 = u, alpha020 = u, alpha011 = 1 keeps the fiber rank 2;
  // n = 2 ord(alpha101) + ord(alpha020) - 1 = 2 at (1 : 0 : 0)
  FiveTuple t = tilde_tuple({2, 2, 2}, 2, UniPoly::var(), UniPoly::var(), UniPoly::constant(1),
                            UniPoly::constant(1));
  ConicReport rep = classify_singularities(build_conic(t));
  bool found = false;
  for (const auto& f : rep.singularities()) {
    if (f.point == BasePoint::rational(0)) {
      found = true;
      CHECK(f.an_index() == 2);
      CHECK(node_equals(f.node, {1, 0, 0}));
    }
  }
  CHECK(found);
}

TEST_CASE("rank-one fibers are never certified") {
  // alpha011 = 0 with alpha101(0) = alpha020(0) = 0 drops the fiber rank to 1
  FiveTuple t = tilde_tuple({2, 2, 2}, 2, UniPoly::var(), UniPoly::var(), UniPoly(),
                            UniPoly::constant(1));
  ConicReport rep = classify_singularities(build_conic(t));
  CHECK(rep.verdict == ConicVerdict::Undetermined);
  JacobianOracleResult oracle = jacobian_oracle(build_conic(t));
  CHECK(!oracle.undetermined_fibers.empty());
}

TEST_CASE("degenerate determinant is not admissible") {
  // no x0 anywhere: the section Delta lies in the singular locus
  FiveTuple t = tilde_tuple({1, 1, 1}, 2, UniPoly(), UniPoly::constant(1), UniPoly::constant(1),
                            UniPoly::constant(1));
  ConicData c = build_conic(t);
  CHECK(c.det0.is_zero());
  CHECK(classify_singularities(c).verdict == ConicVerdict::NotAdmissible);
  JacobianOracleResult oracle = jacobian_oracle(c);
  CHECK(oracle.positive_dimensional);
}

TEST_CASE("lemma grid: types and oracle agreement") {
  // ord(alpha101) = a, ord(alpha020) = b at u = 0, fiber rank 2 throughout
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      UniPoly a101 = UniPoly::monomial(a, 1) * UniPoly::linear_root(3).pow(static_cast<unsigned>(2 - a));
      UniPoly a020 = UniPoly::monomial(b, 1) * UniPoly::linear_root(5).pow(static_cast<unsigned>(2 - b));
      FiveTuple t = tilde_tuple({2, 2, 2}, 2, a101, a020, UniPoly::constant(1),
                                UniPoly::constant(1));
      ConicData c = build_conic(t);
      CAPTURE(a);
      CAPTURE(b);
      // exact determinant identity for the tilde form
      CHECK(c.det0 == -(a101 * a101 * a020) * Rat(1, 4));
      ConicReport rep = classify_singularities(c);
      CHECK(rep.verdict != ConicVerdict::Undetermined);
      CHECK(rep.verdict != ConicVerdict::NotAdmissible);
      // expected behavior over u = 0
      int n = 2 * a + b - 1;
      bool found_zero = false;
      for (const auto& f : rep.singularities()) {
        if (f.point == BasePoint::rational(0)) {
          found_zero = true;
          CHECK(f.an_index() == n);
          if (a == 0) CHECK(node_equals(f.node, {-1, a101.eval(0), 0}));
          else
            CHECK(node_equals(f.node, {1, 0, 0}));
        }
      }
      CHECK(found_zero == (n >= 1));

      // the independent Jacobian oracle sees exactly the classified points
      JacobianOracleResult oracle = jacobian_oracle(c);
      CHECK(!oracle.positive_dimensional);
      CHECK(oracle.undetermined_fibers.empty());
      auto sing = rep.singularities();
      REQUIRE(oracle.points.size() == sing.size());
      for (std::size_t i = 0; i < sing.size(); ++i) {
        CHECK(oracle.points[i].base == sing[i].point);
        bool same_coords = true;
        for (int k = 0; k < 3; ++k)
          if (!(oracle.points[i].coords[static_cast<std::size_t>(k)] ==
                sing[i].node[static_cast<std::size_t>(k)]))
            same_coords = false;
        CHECK(same_coords);
      }
    }
  }
}

TEST_CASE("degeneracy over infinity is detected") {
  // alpha101 of full degree, alpha020 constant: ord at infinity = 2 gives an
  // A1 over v = 0 plus conjugate A1 pair over u^2 + 1
  FiveTuple t = tilde_tuple({2, 2, 2}, 2, UniPoly{1, 0, 1}, UniPoly::constant(1), UniPoly(),
                            UniPoly::constant(1));
  ConicReport rep = classify_singularities(build_conic(t));
  auto sing = rep.singularities();
  REQUIRE(sing.size() == 2);
  bool has_inf = false, has_pair = false;
  for (const auto& f : sing) {
    if (f.point.at_infinity) {
      has_inf = true;
      CHECK(f.an_index() == 1);
    } else if (f.point.min_poly == UniPoly{1, 0, 1}) {
      has_pair = true;
      CHECK(f.an_index() == 1);
    }
  }
  CHECK(has_inf);
  CHECK(has_pair);
  // oracle agrees on the locations including infinity
  JacobianOracleResult oracle = jacobian_oracle(build_conic(t));
  REQUIRE(oracle.points.size() == 2);
  bool oracle_inf = oracle.points[0].base.at_infinity || oracle.points[1].base.at_infinity;
  CHECK(oracle_inf);
}

TEST_CASE("hirzebruch parameters") {
  auto h1 = hirzebruch_parameters({1, 1, 1}, 2);
  REQUIRE(h1.has_value());
  CHECK(*h1 == std::make_pair(0, 1));
  auto h2 = hirzebruch_parameters({1, 2, 3}, 4);
  REQUIRE(h2.has_value());
  CHECK(*h2 == std::make_pair(1, 2));
  CHECK(!hirzebruch_parameters({1, 3, 3}, 2).has_value());

  // report on a lowest-slope tuple: branch class 8 Delta + 2(2m+d) Gamma
  FiveTuple low = make_lowslope(1, 2, 1);  // degrees (1,2,3), e0 = 4
  ConicReport rep = classify_singularities(build_conic(low));
  REQUIRE(rep.hirzebruch.has_value());
  CHECK(*rep.hirzebruch == std::make_pair(1, 2));
  CHECK(rep.delta_in_conic);  // tilde form has no alpha 200
  CHECK(rep.branch_class[0] == 8);
  CHECK(rep.branch_class[1] == 2 * (2 * 1 + 2));
}
