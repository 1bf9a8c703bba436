#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibforge/branch.hpp"

using namespace fibforge;

namespace {

// exact bivariate polynomial as a jet over Q
Jet2 jet_from_terms(std::initializer_list<std::tuple<int, int, int>> terms, int trunc = 44) {
  Jet2 f(trunc, NFElem::from_rat(0));
  for (auto [i, j, c] : terms) f.set(i, j, NFElem::from_rat(c));
  return f;
}

}  // namespace

TEST_CASE("jets: arithmetic and implicit solve") {
  NFElem zero = NFElem::from_rat(0);
  // solve q = z - v - w^2  ->  phi = v + w^2
  KTriPoly f;
  f[{1, 0, 0}] = NFElem::from_rat(1);
  f[{0, 1, 0}] = NFElem::from_rat(-1);
  f[{0, 0, 2}] = NFElem::from_rat(-1);
  Jet2 phi = implicit_solve(f, 10, zero);
  CHECK(phi.at(1, 0) == NFElem::from_rat(1));
  CHECK(phi.at(0, 2) == NFElem::from_rat(1));
  CHECK(phi.at(0, 1).is_zero());

  // solve z + z^2 = v: phi = v - v^2 + 2v^3 - ...
  KTriPoly g;
  g[{1, 0, 0}] = NFElem::from_rat(1);
  g[{2, 0, 0}] = NFElem::from_rat(1);
  g[{0, 1, 0}] = NFElem::from_rat(-1);
  Jet2 psi = implicit_solve(g, 8, zero);
  CHECK(psi.at(1, 0) == NFElem::from_rat(1));
  CHECK(psi.at(2, 0) == NFElem::from_rat(-1));
  CHECK(psi.at(3, 0) == NFElem::from_rat(2));

  // jet inverse: 1/(1 - v) = 1 + v + v^2 + ...
  Jet2 unit(6, zero);
  unit.set(0, 0, NFElem::from_rat(1));
  unit.set(1, 0, NFElem::from_rat(-1));
  Jet2 inv = unit.inverse();
  for (int i = 0; i < 6; ++i) CHECK(inv.at(i, 0) == NFElem::from_rat(1));
}

TEST_CASE("ADE normal forms") {
  // A_n: w^2 + v^(n+1)
  for (int n = 1; n <= 8; ++n) {
    Jet2 f = jet_from_terms({{0, 2, 1}, {n + 1, 0, 1}});
    PlaneSingularity s = classify_plane_singularity(f);
    CHECK(s.cls == SingClass::A);
    CHECK(s.milnor == n);
    CHECK(s.multiplicity == 2);
    CHECK(s.tag() == "A" + std::to_string(n));
  }
  // D_n: v(w^2 + v^(n-2))
  for (int n = 4; n <= 8; ++n) {
    Jet2 f = jet_from_terms({{1, 2, 1}, {n - 1, 0, 1}});
    PlaneSingularity s = classify_plane_singularity(f);
    CHECK(s.cls == SingClass::D);
    CHECK(s.milnor == n);
    CHECK(s.multiplicity == 3);
  }
  // E6: v^3 + w^4, E7: v(v^2 + w^3), E8: v^3 + w^5
  CHECK(classify_plane_singularity(jet_from_terms({{3, 0, 1}, {0, 4, 1}})).cls == SingClass::E6);
  PlaneSingularity e7 = classify_plane_singularity(jet_from_terms({{3, 0, 1}, {1, 3, 1}}));
  CHECK(e7.cls == SingClass::E7);
  CHECK(e7.milnor == 7);
  CHECK(e7.multiplicity == 3);
  CHECK(classify_plane_singularity(jet_from_terms({{3, 0, 1}, {0, 5, 1}})).cls == SingClass::E8);
  // x^4 + y^4 is not simple
  PlaneSingularity ns = classify_plane_singularity(jet_from_terms({{4, 0, 1}, {0, 4, 1}}));
  CHECK(ns.cls == SingClass::NotSimple);
  CHECK(ns.multiplicity == 4);
  // smooth and cusp spot checks
  CHECK(classify_plane_singularity(jet_from_terms({{1, 0, 1}, {0, 2, 1}})).cls == SingClass::Smooth);
  PlaneSingularity cusp = classify_plane_singularity(jet_from_terms({{0, 2, 1}, {3, 0, 1}}));
  CHECK(cusp.tag() == "A2");
  // non-isolated: w^2 alone never stabilizes
  CHECK(classify_plane_singularity(jet_from_terms({{0, 2, 1}})).cls == SingClass::Undetermined);

  // classification is stable under a unit multiple and coordinate scaling
  Jet2 e7b = jet_from_terms({{3, 0, 2}, {1, 3, 5}, {4, 1, 7}, {2, 4, -3}});
  CHECK(classify_plane_singularity(e7b).cls == SingClass::E7);
}

TEST_CASE("milnor numbers over a quadratic field") {
  auto K = make_field(UniPoly{-2, 0, 1});
  NFElem t = NFElem::generator(K);
  // w^2 - t v^3: cusp with an irrational coefficient
  Jet2 f(20, NFElem::zero(K));
  f.set(0, 2, NFElem::one(K));
  f.set(3, 0, -t);
  PlaneSingularity s = classify_plane_singularity(f);
  CHECK(s.cls == SingClass::A);
  CHECK(s.milnor == 2);
}

TEST_CASE("restriction to the conic") {
  FiveTuple s48 = make_slope4813(3);
  ConicData c = build_conic(s48);
  BranchData b = restrict_to_conic(s48, c);
  // tilde form splits off the x2 factor: no monomial with x2-exponent 0
  for (const auto& [k, v] : b.g0.coeffs()) {
    (void)v;
    CHECK(k[2] >= 1);
  }
  // generic full beta keeps x2-free monomials
  FiveTuple m0 = make_m0(1);
  BranchData bm = restrict_to_conic(m0, build_conic(m0));
  bool has_x2_free = false;
  for (const auto& [k, v] : bm.g0.coeffs()) {
    (void)v;
    if (k[2] == 0) has_x2_free = true;
  }
  CHECK(has_x2_free);

  // beta = conic * quadric is rejected
  FiveTuple bad = m0;
  bad.beta.clear();
  for (const auto& akey : exponent_triples(2)) {
    Section a = bad.alpha_at(akey);
    if (a.is_zero()) continue;
    // quadric h = x1^2 with the degree that lands in beta
    ExpTriple h{0, 2, 0};
    int hdeg = bad.beta_degree({akey[0] + h[0], akey[1] + h[1], akey[2] + h[2]}) -
               a.bundle_degree();
    if (hdeg < 0) continue;
    ExpTriple bkey{akey[0], akey[1] + 2, akey[2]};
    Section add = a * Section(hdeg, UniPoly::monomial(std::min(hdeg, 1), 1));
    Section cur = bad.beta_at(bkey);
    bad.beta[bkey] = cur + add;
  }
  CHECK(conic_divides_quartic(bad));
  CHECK_THROWS_WITH(restrict_to_conic(bad, build_conic(bad)), "branch divisor contains the conic");
  CHECK(!conic_divides_quartic(m0));
}

TEST_CASE("designed rational crossings are found and classified") {
  // split branch: g = x2 * (b103 x0 x2^2 + b031 x1^3 + ...) with
  // q|x2=0 = x0^2 - x1^2; crossings at (1:1:0), (1:-1:0) over roots of b031
  FiveTuple t;
  t.d = {2, 5, 7};
  t.e0 = 4;
  auto alpha_put = [&](ExpTriple k, UniPoly p) { t.alpha[k] = Section(t.alpha_degree(k), std::move(p)); };
  alpha_put({2, 0, 0}, UniPoly::constant(1));
  alpha_put({0, 2, 0}, UniPoly::constant(-1));
  alpha_put({1, 0, 1}, UniPoly::constant(3));
  alpha_put({0, 1, 1}, UniPoly::constant(1));
  alpha_put({0, 0, 2}, UniPoly{7, 1, 2});
  auto beta_put = [&](ExpTriple k, UniPoly p) { t.beta[k] = Section(t.beta_degree(k), std::move(p)); };
  // b031 = (u-1)(u-2)
  beta_put({0, 3, 1}, UniPoly{2, -3, 1});
  beta_put({1, 0, 3}, UniPoly::constant(2));
  beta_put({0, 0, 4}, UniPoly{1, 1});
  beta_put({0, 2, 2}, UniPoly::constant(5));
  REQUIRE(validate(t).empty());

  ConicData c = build_conic(t);
  BranchData b = restrict_to_conic(t, c);
  SingularSearch search = find_singular_points(c, b);
  CHECK(!search.non_isolated);
  CHECK(!search.solver_failed);
  // four designed crossings at (1 : +-1 : 0) over u = 1, 2
  int rational_crossings = 0;
  for (const auto& pt : search.points) {
    if (pt.at_infinity_chart) continue;
    if (pt.base_min_poly.degree() != 1) continue;
    Rat u0 = -pt.base_min_poly.coeff(0);
    if (u0 != 1 && u0 != 2) continue;
    REQUIRE(pt.proj[0].is_rational());
    REQUIRE(pt.proj[1].is_rational());
    Rat x0 = pt.proj[0].rational_value(), x1 = pt.proj[1].rational_value();
    CHECK(pt.proj[2].is_zero());
    CHECK(x0 * x0 == x1 * x1);
    ++rational_crossings;
  }
  CHECK(rational_crossings == 4);
  BranchReport rep = analyze_branch(c, classify_singularities(c), b);
  for (const auto& s : rep.singularities) CHECK(s.sing.tag() == "A1");
  CHECK(rep.verdict == BranchVerdict::NegligibleOnly);
}

TEST_CASE("E7 pattern at the section meeting the conic") {
  // e0 < 2 d0 gives alpha200 a root: one point of Delta on the conic; the
  // tilde branch acquires an E7 there
  FiveTuple t = make_slope4813(5);
  t.d = {2, 5, 7};
  t.e0 = 3;
  t.alpha.clear();
  t.beta.clear();
  FiveTuple drawn = draw_tuple({2, 5, 7}, 3, PhiFamily::General, PsiFamily::Tilde, 5);
  t = drawn;
  REQUIRE(validate(t).empty());
  ConicData c = build_conic(t);
  ConicReport crep = classify_singularities(c);
  REQUIRE(crep.verdict == ConicVerdict::SmoothConic);
  BranchData b = restrict_to_conic(t, c);
  BranchReport rep = analyze_branch(c, crep, b);
  REQUIRE(rep.singularities.size() == 1);
  CHECK(rep.singularities[0].sing.tag() == "E7");
  // located at (1 : 0 : 0) over the root of alpha200
  const LocatedPoint& pt = rep.singularities[0].at;
  CHECK(pt.proj[1].is_zero());
  CHECK(pt.proj[2].is_zero());
  Section a200 = t.alpha_at({2, 0, 0});
  CHECK(eval_poly(a200.chart0(), pt.u).is_zero());
  CHECK(rep.verdict == BranchVerdict::NegligibleOnly);
}

TEST_CASE("branch through a conic node is never certified") {
  // conic with an A1 node at (0:1:0) over u=0; quartic passing through it
  FiveTuple t;
  t.d = {1, 4, 5};
  t.e0 = 6;
  auto alpha_put = [&](ExpTriple k, UniPoly p) { t.alpha[k] = Section(t.alpha_degree(k), std::move(p)); };
  alpha_put({1, 0, 1}, UniPoly::constant(1));
  alpha_put({0, 2, 0}, UniPoly{0, 0, 1});
  alpha_put({0, 0, 2}, UniPoly::constant(1));
  auto beta_put = [&](ExpTriple k, UniPoly p) { t.beta[k] = Section(t.beta_degree(k), std::move(p)); };
  beta_put({0, 4, 0}, UniPoly{0, 1});        // vanishes at u = 0
  beta_put({0, 0, 4}, UniPoly::constant(1));
  beta_put({2, 1, 1}, UniPoly::constant(1));
  REQUIRE(validate(t).empty());
  ConicData c = build_conic(t);
  ConicReport crep = classify_singularities(c);
  REQUIRE(crep.verdict == ConicVerdict::RDPOnly);
  BranchData b = restrict_to_conic(t, c);
  BranchReport rep = analyze_branch(c, crep, b);
  CHECK(rep.meets_conic_singularities);
  Certificate cert = certify(t);
  CHECK(cert.verdict != Admissibility::Admissible);
}

TEST_CASE("lift independence of the certificate") {
  // family with a nontrivial space of conic multiples
  for (std::uint64_t seed : {4ull, 9ull}) {
    FiveTuple t = draw_tuple({2, 2, 2}, 3, PhiFamily::Tilde, PsiFamily::General, seed);
    REQUIRE(validate(t).empty());
    Certificate base = certify(t);
    std::string base_json = certificate_to_json(base);
    for (std::uint64_t trial = 1; trial <= 10; ++trial) {
      FiveTuple pert = perturb_beta_by_conic(t, trial);
      CHECK(certificate_to_json(certify(pert)) == base_json);
    }
  }
}

TEST_CASE("certify joins the verdicts") {
  // necessary-bound violation is reported as not admissible
  FiveTuple bad;
  bad.d = {1, 1, 1};
  bad.e0 = 3;
  bad.alpha[{0, 0, 2}] = Section(-1, UniPoly());
  Certificate cert = certify(bad);
  CHECK(cert.verdict == Admissibility::NotAdmissible);

  // a generic admissible example certifies end to end
  bool found = false;
  for (std::uint64_t seed = 1; seed <= 10 && !found; ++seed) {
    Certificate c = certify(make_lowslope(seed, 1, 0));
    if (c.verdict == Admissibility::Admissible) {
      found = true;
      CHECK(c.conic.verdict == ConicVerdict::SmoothConic);
      CHECK((c.branch.verdict == BranchVerdict::SmoothBranch ||
             c.branch.verdict == BranchVerdict::NegligibleOnly));
    }
  }
  CHECK(found);
}
