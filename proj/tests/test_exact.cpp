#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fibforge/factor.hpp"
#include "fibforge/linalg.hpp"
#include "fibforge/nfelem.hpp"
#include "fibforge/polyres.hpp"
#include "fibforge/ratfunc.hpp"
#include "fibforge/unipoly.hpp"

using namespace fibforge;

namespace {

UniPoly random_poly(std::mt19937_64& rng, int max_deg, bool nonzero = true) {
  int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
  std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = draw_small_int(rng);
  UniPoly p{std::move(c)};
  if (nonzero && p.is_zero()) return UniPoly::constant(1);
  return p;
}

// test-only oracle: expand a factor list by brute-force multiplication
UniPoly expand_oracle(const std::vector<std::pair<UniPoly, int>>& factors, const Rat& unit) {
  UniPoly acc = UniPoly::constant(unit);
  for (const auto& [f, m] : factors)
    for (int i = 0; i < m; ++i) acc *= f;
  return acc;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(*parse_rat("7") == Rat(7));
  CHECK(*parse_rat("-3/4") == Rat(-3, 4));
  CHECK(*parse_rat("1.25") == Rat(5, 4));
  CHECK(*parse_rat("1/3") == Rat(1, 3));
  CHECK(!parse_rat("x").has_value());
  CHECK(!parse_rat("1/0").has_value());
  CHECK(rat_str(Rat(-3, 4)) == "-3/4");
  CHECK(rat_str(Rat(5)) == "5");
  // normalized representation
  Rat r = make_rat(6, -8);
  CHECK(numer(r) == -3);
  CHECK(denom(r) == 4);
}

TEST_CASE("unipoly arithmetic basics") {
  UniPoly f{1, 2, 1};  // (u+1)^2
  UniPoly g{1, 1};
  CHECK(f == g * g);
  CHECK(f.degree() == 2);
  auto [q, r] = UniPoly::divrem(f, g);
  CHECK(r.is_zero());
  CHECK(q == g);
  CHECK(f.eval(2) == 9);
  CHECK(f.derivative() == UniPoly{2, 2});
  CHECK(gcd(f, g) == g);
  UniPoly zero;
  CHECK(zero.degree() == -1);
  CHECK((f * zero).is_zero());
  CHECK(f.shift(1) == UniPoly{4, 4, 1});
  CHECK(f.reverse(2) == UniPoly{1, 2, 1});
  CHECK(UniPoly{0, 0, 3}.reverse(3) == UniPoly{0, 3});
}

TEST_CASE("squarefree factorization: spec examples") {
  UniPoly u = UniPoly::var();
  // u^2 (u - 1)
  UniPoly f = u * u * (u - UniPoly::constant(1));
  auto fac = squarefree_factor(f);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0] == std::pair<UniPoly, int>{u - UniPoly::constant(1), 1});
  CHECK(fac.factors[1] == std::pair<UniPoly, int>{u, 2});

  // u^2 + 1 irreducible square-free
  UniPoly g{1, 0, 1};
  auto gf = squarefree_factor(g);
  REQUIRE(gf.factors.size() == 1);
  CHECK(gf.factors[0].first == g);
  CHECK(gf.factors[0].second == 1);

  // (u^2 - 2)^2 (u + 3): expected expansion computed by the brute-force
  // multiplier, then the factorization must reproduce it
  UniPoly p{-2, 0, 1};
  UniPoly l{3, 1};
  UniPoly target = expand_oracle({{p, 2}, {l, 1}}, 1);
  auto tf = squarefree_factor(target);
  REQUIRE(tf.factors.size() == 2);
  CHECK(tf.factors[0] == std::pair<UniPoly, int>{l, 1});
  CHECK(tf.factors[1] == std::pair<UniPoly, int>{p, 2});
  CHECK(tf.expand() == target);

  CHECK_THROWS(squarefree_factor(UniPoly()));
}

TEST_CASE("squarefree round trip on random polynomials") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    UniPoly f = random_poly(rng, 12);
    if (f.degree() < 1) continue;
    auto fac = squarefree_factor(f);
    CHECK(fac.expand() == f);
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
      // square-free: gcd with derivative constant
      const UniPoly& fi = fac.factors[i].first;
      CHECK(gcd(fi, fi.derivative()).degree() <= 0);
      for (std::size_t j = i + 1; j < fac.factors.size(); ++j)
        CHECK(gcd(fi, fac.factors[j].first).degree() == 0);
    }
  }
}

TEST_CASE("irreducible factorization") {
  UniPoly u = UniPoly::var();
  SUBCASE("splits rational roots") {
    UniPoly f = (u - UniPoly::constant(1)) * (u - UniPoly::constant(2)) * (u + UniPoly::constant(Rat(1, 3)));
    auto fac = irreducible_factor(f);
    CHECK(fac.factors.size() == 3);
    CHECK(fac.expand() == f);
    auto roots = rational_roots(f);
    REQUIRE(roots.size() == 3);
  }
  SUBCASE("x^4 + 1 stays irreducible despite splitting mod every prime") {
    UniPoly f{1, 0, 0, 0, 1};
    CHECK(is_irreducible(f));
  }
  SUBCASE("product of quadratics") {
    UniPoly a{-2, 0, 1};  // u^2-2
    UniPoly b{1, 1, 1};   // u^2+u+1
    auto fac = irreducible_factor(a * a * b);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.expand() == a * a * b);
  }
  SUBCASE("non-monic with unit") {
    UniPoly f = (u * UniPoly::constant(6) + UniPoly::constant(3)) * (u - UniPoly::constant(5));
    auto fac = irreducible_factor(f);
    CHECK(fac.unit == 6);
    CHECK(fac.expand() == f);
  }
  SUBCASE("random products recombine") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      UniPoly f = random_poly(rng, 5) * random_poly(rng, 5) * random_poly(rng, 3);
      if (f.degree() < 1) continue;
      auto fac = irreducible_factor(f);
      CHECK(fac.expand() == f);
      for (const auto& [fi, m] : fac.factors) {
        (void)m;
        CHECK(fi.leading() == 1);
      }
    }
  }
}

TEST_CASE("vanishing orders") {
  UniPoly u = UniPoly::var();
  UniPoly f = u * u * u - u * u;  // u^2 (u - 1)
  CHECK(*vanishing_order(f, 0) == 2);
  CHECK(*vanishing_order(f, 1) == 1);
  CHECK(*vanishing_order(f, 2) == 0);
  CHECK(!vanishing_order(UniPoly(), 0).has_value());  // +infinity
  // additivity
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    UniPoly a = random_poly(rng, 6), b = random_poly(rng, 6);
    Rat p = draw_small_int(rng);
    CHECK(*vanishing_order(a * b, p) == *vanishing_order(a, p) + *vanishing_order(b, p));
  }
  // at factors and infinity
  UniPoly q{-2, 0, 1};
  CHECK(*vanishing_order_at_factor(q * q * (u + UniPoly::constant(1)), q) == 2);
  CHECK(*vanishing_order_at_infinity(UniPoly{1, 2}, 5) == 4);
  CHECK(!vanishing_order_at_infinity(UniPoly(), 5).has_value());
}

TEST_CASE("number field arithmetic is a field") {
  // Q[t]/(t^2 - 2)
  auto K = make_field(UniPoly{-2, 0, 1});
  NFElem t = NFElem::generator(K);
  NFElem one = NFElem::one(K);
  CHECK(t * t == one * 2);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    NFElem a(K, UniPoly{draw_small_int(rng), draw_small_int(rng)});
    NFElem b(K, UniPoly{draw_small_int(rng), draw_small_int(rng)});
    NFElem c(K, UniPoly{draw_small_int(rng), draw_small_int(rng)});
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == one);
    }
  }
  // cubic field
  auto L = make_field(UniPoly{-2, 0, 0, 1});  // t^3 = 2
  NFElem s = NFElem::generator(L);
  CHECK((s * s * s) == NFElem::one(L) * 2);
  CHECK((s.inverse() * s) == NFElem::one(L));
  // evaluation
  UniPoly f{1, 1, 1};
  CHECK(eval_poly(f, t) == t + one * 3);  // t^2 + t + 1 = t + 3 in Q(sqrt 2)
}

TEST_CASE("rational function field") {
  UniPoly u = UniPoly::var();
  RatFunc x{u};
  RatFunc y{UniPoly::constant(1), u};  // 1/u
  CHECK(x * y == RatFunc(UniPoly::constant(1)));
  RatFunc z = x + y;                   // (u^2+1)/u
  CHECK(z.num() == UniPoly{1, 0, 1});
  CHECK(z.den() == u);
  CHECK((z - z).is_zero());
  CHECK(z * z.inverse() == RatFunc(UniPoly::constant(1)));
}

TEST_CASE("generic linear algebra over Rat and NFElem") {
  Mat<Rat> m(3, 3, 0);
  m.at(0, 0) = 1;
  m.at(1, 1) = 2;
  m.at(2, 2) = 0;
  CHECK(m.rank() == 2);
  auto ker = m.kernel(Rat(0), Rat(1));
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][2] == 1);

  auto K = make_field(UniPoly{-2, 0, 1});
  NFElem t = NFElem::generator(K), one = NFElem::one(K), zero = NFElem::zero(K);
  Mat<NFElem> n(2, 2, zero);
  n.at(0, 0) = t;
  n.at(0, 1) = one;
  n.at(1, 0) = one * 2;
  n.at(1, 1) = t;  // det = t^2 - 2 = 0 in K
  CHECK(n.rank() == 1);
}

TEST_CASE("resultants: spec examples") {
  // f = x - u, g = x - 1 over Q[u][x]
  UniPoly u = UniPoly::var();
  Bi f(std::vector<UniPoly>{-u, UniPoly::constant(1)});
  Bi g(std::vector<UniPoly>{UniPoly::constant(-1), UniPoly::constant(1)});
  UniPoly r = resultant_a(f, g);
  CHECK((r == u - UniPoly::constant(1) || r == -(u - UniPoly::constant(1))));

  // f = x^2 - u, g = x
  Bi f2(std::vector<UniPoly>{-u, UniPoly(), UniPoly::constant(1)});
  Bi g2(std::vector<UniPoly>{UniPoly(), UniPoly::constant(1)});
  UniPoly r2 = resultant_a(f2, g2);
  CHECK((r2 == -u || r2 == u));

  CHECK_THROWS(resultant_a(Bi::constant(UniPoly::constant(1)), Bi::constant(u)));
}

TEST_CASE("resultant agrees with sylvester reference and root sampling") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    // random degree-(2,2) pair in x with degree <= 2 coefficients
    auto rand_bi = [&](int dx, int du) {
      std::vector<UniPoly> c(static_cast<std::size_t>(dx) + 1);
      for (auto& f : c) f = random_poly(rng, du, false);
      Bi b{std::move(c)};
      if (b.deg_a() < 1) b = b + Bi(std::vector<UniPoly>{UniPoly(), UniPoly::constant(1)});
      return b;
    };
    Bi f = rand_bi(2, 2), g = rand_bi(2, 2);
    UniPoly res = resultant_a(f, g);
    CHECK(res == resultant_a_sylvester(f, g));
    // sampling oracle: at 20 rational u values the resultant vanishes iff
    // the specialized polynomials share a root (or both leading coeffs die)
    for (int s = 0; s < 20; ++s) {
      Rat p(s);
      UniPoly fa = f.eval_u(p), ga = g.eval_u(p);
      bool res_zero = res.eval(p) == 0;
      bool share = false;
      if (fa.is_zero() || ga.is_zero()) {
        share = true;
      } else if (fa.degree() >= 1 && ga.degree() >= 1) {
        share = gcd(fa, ga).degree() >= 1;
      }
      bool lc_drop = f.coeff(f.deg_a()).eval(p) == 0 && g.coeff(g.deg_a()).eval(p) == 0;
      CHECK(res_zero == (share || lc_drop));
    }
  }
}

TEST_CASE("resultant identically zero iff common factor") {
  UniPoly u = UniPoly::var();
  Bi common(std::vector<UniPoly>{-u, UniPoly::constant(1)});       // x - u
  Bi a(std::vector<UniPoly>{UniPoly::constant(1), UniPoly::constant(1)});
  Bi b(std::vector<UniPoly>{u, UniPoly::constant(3)});
  CHECK(resultant_a(common * a, common * b).is_zero());
  CHECK(!resultant_a(a, b).is_zero());
}

TEST_CASE("trivariate resultant eliminates b") {
  // f = b - a, g = b - u: Res_b = a - u up to sign
  Bi a_poly(std::vector<UniPoly>{UniPoly(), UniPoly::constant(1)});
  Bi u_poly = Bi::constant(UniPoly::var());
  Tri f(std::vector<Bi>{-a_poly, Bi::constant(UniPoly::constant(1))});
  Tri g(std::vector<Bi>{-u_poly, Bi::constant(UniPoly::constant(1))});
  Bi r = resultant_b(f, g);
  Bi expect = a_poly - u_poly;
  CHECK((r == expect || r == -expect));
}

TEST_CASE("fpoly over a number field") {
  auto K = make_field(UniPoly{-2, 0, 1});
  NFElem t = NFElem::generator(K), one = NFElem::one(K);
  // p = (x - t)(x - 1) over K
  KPoly p = KPoly(std::vector<NFElem>{t, -(one + t) * 1, one}) ;
  // p(x) = x^2 - (1+t)x + t
  CHECK(p.eval(t).is_zero());
  CHECK(p.eval(one).is_zero());
  KPoly dp = p.derivative();
  CHECK(dp.degree() == 1);
  KPoly g = fpoly_gcd(p, KPoly(std::vector<NFElem>{-t, one}));  // gcd with (x - t)
  CHECK(g.degree() == 1);
  // resultant of (x-t)(x-1) and (x-t) is zero
  CHECK(fpoly_resultant(p, KPoly(std::vector<NFElem>{-t, one}), one).is_zero());
  CHECK(!fpoly_resultant(p, KPoly(std::vector<NFElem>{one * 5, one}), one).is_zero());
}
