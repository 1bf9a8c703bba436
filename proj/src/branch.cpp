#include "fibforge/branch.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fibforge/ratfunc.hpp"

namespace fibforge {

namespace {

Tri swap_ab(const Tri& f) {
  int da = f.max_deg_a(), db = f.deg_b();
  std::vector<Bi> out(static_cast<std::size_t>(da) + 1);
  for (int i = 0; i <= da; ++i) {
    std::vector<UniPoly> row(static_cast<std::size_t>(db) + 1);
    for (int j = 0; j <= db; ++j) row[static_cast<std::size_t>(j)] = f.coeff(j).coeff(i);
    out[static_cast<std::size_t>(i)] = Bi(std::move(row));
  }
  return Tri(std::move(out));
}

Bi divide_content(const Bi& f, const UniPoly& content) {
  std::vector<UniPoly> out;
  out.reserve(static_cast<std::size_t>(f.deg_a()) + 1);
  for (int i = 0; i <= f.deg_a(); ++i) out.push_back(UniPoly::divrem(f.coeff(i), content).first);
  return Bi(std::move(out));
}

Bi shift_a(const Bi& f, int m) {
  if (f.is_zero() || m == 0) return f;
  std::vector<UniPoly> out(static_cast<std::size_t>(f.deg_a() + m) + 1);
  for (int i = 0; i <= f.deg_a(); ++i) out[static_cast<std::size_t>(i + m)] = f.coeff(i);
  return Bi(std::move(out));
}

// substitute b := b + c*a
Tri shear_b(const Tri& f, int c) {
  if (c == 0 || f.is_zero()) return f;
  int db = f.deg_b();
  std::vector<Bi> out(static_cast<std::size_t>(db) + 1);
  for (int k = 0; k <= db; ++k) {
    const Bi& bk = f.coeff(k);
    if (bk.is_zero()) continue;
    Rat pw = 1;
    long long binom = 1;
    for (int r = k; r >= 0; --r) {
      // coefficient of b^r: C(k, r) c^(k-r) a^(k-r) * bk
      Rat scale = Rat(binom) * pw;
      out[static_cast<std::size_t>(r)] =
          out[static_cast<std::size_t>(r)] + shift_a(bk * UniPoly::constant(scale), k - r);
      if (r > 0) {
        binom = binom * r / (k - r + 1);
        pw = pw * Rat(c);
      }
    }
  }
  return Tri(std::move(out));
}

Tri reduce_tri_mod(const Tri& f, const UniPoly& p) {
  std::vector<Bi> out;
  out.reserve(static_cast<std::size_t>(f.deg_b()) + 1);
  for (int j = 0; j <= f.deg_b(); ++j) {
    const Bi& bi = f.coeff(j);
    std::vector<UniPoly> row;
    row.reserve(static_cast<std::size_t>(bi.deg_a()) + 1);
    for (int i = 0; i <= bi.deg_a(); ++i) row.push_back(UniPoly::divrem(bi.coeff(i), p).second);
    out.push_back(Bi(std::move(row)));
  }
  return Tri(std::move(out));
}

// Certain-prune test: true when rho(t, .) provably has no repeated root over
// Q[t]/(p). Works in F_P[t]/(p mod P) with word arithmetic; a nonconstant gcd
// modulo a good prime is inconclusive, a constant one is a proof.
bool no_multiple_root_mod_p(const Bi& rho, const UniPoly& p) {
  using zp::Poly;
  auto [pints, pscale] = p.primitive_int();
  (void)pscale;
  for (std::size_t attempt = 0; attempt < 3; ++attempt) {
    std::uint64_t P = zp::nth_crt_prime(attempt);
    Poly pbar(pints.size());
    for (std::size_t i = 0; i < pints.size(); ++i) pbar[i] = zp::int_mod(pints[i], P);
    zp::trim(pbar);
    if (zp::deg(pbar) != p.degree()) continue;
    // elements of F_P[t]/(pbar)
    auto reduce_elem = [&](const UniPoly& c) {
      auto [ci, cs] = c.primitive_int();
      // keep the true scalar: c = (1/cs) * ci, and cs is invertible mod P
      Poly e(ci.size());
      for (std::size_t i = 0; i < ci.size(); ++i) e[i] = zp::int_mod(ci[i], P);
      zp::trim(e);
      // rem mod pbar
      if (!e.empty() && zp::deg(e) >= zp::deg(pbar)) {
        std::uint64_t inv = zp::invmod(pbar.back(), P);
        while (zp::deg(e) >= zp::deg(pbar)) {
          std::uint64_t q = zp::mulmod(e.back(), inv, P);
          std::size_t off = e.size() - pbar.size();
          for (std::size_t k = 0; k < pbar.size(); ++k)
            e[off + k] = zp::submod(e[off + k], zp::mulmod(q, pbar[k], P), P);
          zp::trim(e);
          if (e.empty()) break;
        }
      }
      // scalar 1/cs: multiply by inverse of numerator(cs) * inverse... the
      // scalar does not change gcd degrees, so ignore it
      std::uint64_t csn = zp::int_mod(numer(Rat(1) / cs), P);
      std::uint64_t csd = zp::int_mod(denom(Rat(1) / cs), P);
      if (csd == 0) return std::optional<Poly>();
      std::uint64_t s = zp::mulmod(csn, zp::invmod(csd, P), P);
      for (auto& x : e) x = zp::mulmod(x, s, P);
      return std::optional<Poly>(std::move(e));
    };
    // ring ops
    auto mul = [&](const Poly& x, const Poly& y) {
      Poly r = zp::Poly();
      if (x.empty() || y.empty()) return r;
      r.assign(x.size() + y.size() - 1, 0);
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
          r[i + j] = zp::addmod(r[i + j], zp::mulmod(x[i], y[j], P), P);
      zp::trim(r);
      std::uint64_t inv = zp::invmod(pbar.back(), P);
      while (zp::deg(r) >= zp::deg(pbar)) {
        std::uint64_t q = zp::mulmod(r.back(), inv, P);
        std::size_t off = r.size() - pbar.size();
        for (std::size_t k = 0; k < pbar.size(); ++k)
          r[off + k] = zp::submod(r[off + k], zp::mulmod(q, pbar[k], P), P);
        zp::trim(r);
        if (r.empty()) break;
      }
      return r;
    };
    // inverse in the quotient ring; empty optional on a zero divisor
    auto inverse = [&](const Poly& x) -> std::optional<Poly> {
      Poly r0 = pbar, r1 = x, s0, s1{1};
      while (!r1.empty()) {
        Poly q, rem = r0;
        std::uint64_t inv = zp::invmod(r1.back(), P);
        q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, 0);
        while (zp::deg(rem) >= zp::deg(r1)) {
          std::uint64_t c = zp::mulmod(rem.back(), inv, P);
          std::size_t off = rem.size() - r1.size();
          q[off] = c;
          for (std::size_t k = 0; k < r1.size(); ++k)
            rem[off + k] = zp::submod(rem[off + k], zp::mulmod(c, r1[k], P), P);
          zp::trim(rem);
          if (rem.empty()) break;
        }
        zp::trim(q);
        r0 = std::move(r1);
        r1 = std::move(rem);
        // s2 = s0 - q*s1 (polynomial product, no modular reduction by pbar needed
        // beyond keeping sizes small)
        Poly qs1;
        if (!q.empty() && !s1.empty()) {
          qs1.assign(q.size() + s1.size() - 1, 0);
          for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j)
              qs1[i + j] = zp::addmod(qs1[i + j], zp::mulmod(q[i], s1[j], P), P);
          zp::trim(qs1);
        }
        Poly s2 = s0;
        if (s2.size() < qs1.size()) s2.resize(qs1.size(), 0);
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] = zp::submod(s2[i], qs1[i], P);
        zp::trim(s2);
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      if (zp::deg(r0) != 0) return std::nullopt;  // zero divisor
      std::uint64_t inv = zp::invmod(r0[0], P);
      for (auto& c : s0) c = zp::mulmod(c, inv, P);
      zp::trim(s0);
      // reduce mod pbar
      return mul(s0, Poly{1});
    };
    // reduce rho coefficients; derivative in a
    int da = rho.deg_a();
    std::vector<Poly> A(static_cast<std::size_t>(da) + 1);
    bool bad = false;
    for (int i = 0; i <= da && !bad; ++i) {
      auto e = reduce_elem(rho.coeff(i));
      if (!e) bad = true;
      else
        A[static_cast<std::size_t>(i)] = *e;
    }
    if (bad) continue;
    while (!A.empty() && A.back().empty()) A.pop_back();
    if (A.size() <= 1) continue;  // degenerate reduction: inconclusive
    if (static_cast<int>(A.size()) - 1 != da) continue;  // leading died: inconclusive
    std::vector<Poly> B(A.size() - 1);
    for (std::size_t i = 1; i < A.size(); ++i) {
      B[i - 1] = A[i];
      std::uint64_t k = static_cast<std::uint64_t>(i % P);
      for (auto& c : B[i - 1]) c = zp::mulmod(c, k, P);
    }
    while (!B.empty() && B.back().empty()) B.pop_back();
    // Euclid over the quotient ring; abort on zero divisors
    std::vector<Poly> X = A, Y = B;
    bool inconclusive = false;
    while (!Y.empty()) {
      auto linv = inverse(Y.back());
      if (!linv) {
        inconclusive = true;
        break;
      }
      while (static_cast<int>(X.size()) >= static_cast<int>(Y.size()) && !X.empty()) {
        Poly f = mul(X.back(), *linv);
        std::size_t off = X.size() - Y.size();
        for (std::size_t k = 0; k < Y.size(); ++k) {
          Poly sub = mul(f, Y[k]);
          Poly& tgt = X[off + k];
          if (tgt.size() < sub.size()) tgt.resize(sub.size(), 0);
          for (std::size_t m2 = 0; m2 < sub.size(); ++m2) tgt[m2] = zp::submod(tgt[m2], sub[m2], P);
          zp::trim(tgt);
        }
        while (!X.empty() && X.back().empty()) X.pop_back();
      }
      std::swap(X, Y);
      while (!Y.empty() && Y.back().empty()) Y.pop_back();
    }
    if (inconclusive) continue;
    if (X.size() == 1) return true;  // gcd is a unit: certainly separable
    return false;
  }
  return false;
}

struct ChartSystem {
  Tri q, g, q_a, q_b, q_u, g_a, g_b, g_u, m_ab, m_ua, m_ub;
};

ChartSystem chart_system(const XForm& q, const XForm& g, int j) {
  ChartSystem s;
  s.q = q.dehom(j);
  s.g = g.dehom(j);
  s.q_a = s.q.derivative_a();
  s.q_b = s.q.derivative_b();
  s.q_u = s.q.derivative_u();
  s.g_a = s.g.derivative_a();
  s.g_b = s.g.derivative_b();
  s.g_u = s.g.derivative_u();
  s.m_ab = s.q_a * s.g_b - s.q_b * s.g_a;
  s.m_ua = s.q_u * s.g_a - s.q_a * s.g_u;
  s.m_ub = s.q_u * s.g_b - s.q_b * s.g_u;
  return s;
}

}  // namespace

bool conic_divides_quartic(const FiveTuple& t) {
  // solve quartic = conic * h over Q(u) for a quadric h
  auto quartics = exponent_triples(4);
  auto quadrics = exponent_triples(2);
  RatFunc zero;
  Mat<RatFunc> aug(quartics.size(), quadrics.size() + 1, zero);
  for (std::size_t r = 0; r < quartics.size(); ++r) {
    const ExpTriple& tt = quartics[r];
    for (std::size_t cidx = 0; cidx < quadrics.size(); ++cidx) {
      const ExpTriple& h = quadrics[cidx];
      ExpTriple diff{tt[0] - h[0], tt[1] - h[1], tt[2] - h[2]};
      if (diff[0] < 0 || diff[1] < 0 || diff[2] < 0) continue;
      Section a = t.alpha_at(diff);
      if (!a.is_zero()) aug.at(r, cidx) = RatFunc(a.chart0());
    }
    Section bsec = t.beta_at(tt);
    if (!bsec.is_zero()) aug.at(r, quadrics.size()) = RatFunc(bsec.chart0());
  }
  auto pivots = aug.rref();
  for (std::size_t p : pivots)
    if (p == quadrics.size()) return false;  // inconsistent: not divisible
  return true;
}

BranchData restrict_to_conic(const FiveTuple& t, const ConicData& c) {
  (void)c;
  BranchData b;
  b.g0 = beta_form(t, 0);
  b.g1 = beta_form(t, 1);
  if (b.g0.is_zero()) throw std::invalid_argument("branch divisor contains the conic");
  if (conic_divides_quartic(t)) throw std::invalid_argument("branch divisor contains the conic");
  return b;
}

std::string LocatedPoint::location_str() const {
  std::ostringstream os;
  os << (at_infinity_chart ? "v root of " : "u root of ") << base_min_poly.str();
  os << " at (" << proj[0].str() << " : " << proj[1].str() << " : " << proj[2].str() << ")";
  return os.str();
}

namespace {

std::array<NFElem, 3> chart_point_to_proj(int j, const NFElem& a, const NFElem& b) {
  std::array<NFElem, 3> x{NFElem::zero(a.field()), NFElem::zero(a.field()),
                          NFElem::zero(a.field())};
  x[static_cast<std::size_t>(j)] = NFElem::one(a.field());
  x[static_cast<std::size_t>((j + 1) % 3)] = a;
  x[static_cast<std::size_t>((j + 2) % 3)] = b;
  return x;
}

}  // namespace

SingularSearch find_singular_points(const ConicData& c, const BranchData& b) {
  SingularSearch out;
  // Candidates come from the chart-0 fiber-scheme discriminants: a singular
  // point of the restriction doubles a fiber intersection, so its base
  // coordinate is a root of the projection discriminant (or of the content).
  std::set<std::vector<Rat>> seen;
  std::vector<UniPoly> candidates;
  std::set<std::vector<Rat>> from_content;
  auto add_candidates = [&](const UniPoly& f, bool content_source) {
    if (f.is_zero() || f.degree() < 1) return;
    for (const auto& [p, m] : irreducible_factor(f).factors) {
      (void)m;
      if (p.degree() < 1) continue;
      if (seen.insert(p.coeffs()).second) candidates.push_back(p);
      if (content_source) from_content.insert(p.coeffs());
    }
  };
  std::array<Bi, 3> chart_rho;  // squarefree-projection resultants for pruning
  std::array<bool, 3> chart_ok{false, false, false};
  for (int j = 0; j < 3; ++j) {
    Tri qt0 = c.q0.dehom(j), gt0 = b.g0.dehom(j);
    if (gt0.is_zero()) continue;
    if (qt0.deg_b() < 1 || gt0.deg_b() < 1) {
      if (qt0.max_deg_a() >= 1 || gt0.max_deg_a() >= 1) {
        qt0 = swap_ab(qt0);
        gt0 = swap_ab(gt0);
      }
      if (qt0.deg_b() < 1 || gt0.deg_b() < 1) {
        out.non_isolated = true;
        out.evidence.push_back("degenerate chart projection (chart " + std::to_string(j) + ")");
        continue;
      }
    }
    // a generic fiber shear separates points that a projection happens to
    // glue along a curve (which would kill the discriminant identically)
    bool done = false;
    for (int shear : {0, 1, -1, 2, 3}) {
      Tri qt = shear_b(qt0, shear), gt = shear_b(gt0, shear);
      Bi rho = resultant_b(qt, gt);
      if (rho.is_zero()) {
        out.non_isolated = true;
        out.evidence.push_back("conic and branch share a component (chart " + std::to_string(j) +
                               ")");
        done = true;
        break;
      }
      UniPoly content = rho.content_u();
      Bi rho_star = rho;
      if (content.degree() >= 1) rho_star = divide_content(rho, content);
      UniPoly disc;
      if (rho_star.deg_a() >= 1) {
        disc = resultant_a(rho_star, rho_star.derivative_a());
        if (disc.is_zero()) continue;  // square survived: try the next shear
      }
      add_candidates(content, true);
      add_candidates(disc, false);
      chart_rho[static_cast<std::size_t>(j)] = rho_star;
      chart_ok[static_cast<std::size_t>(j)] = true;
      done = true;
      break;
    }
    if (!done) {
      out.non_isolated = true;
      out.evidence.push_back("projection stays non-reduced under shears (chart " +
                             std::to_string(j) + ")");
    }
  }

  // per-candidate fiber analysis; chart 1 contributes only the fiber over
  // infinity, analyzed directly at v = 0
  struct Candidate {
    UniPoly p;
    bool infinity;
  };
  std::vector<Candidate> work;
  for (const auto& p : candidates) work.push_back({p, false});
  work.push_back({UniPoly::var(), true});  // v = 0 on chart 1

  for (const auto& cand : work) {
    const XForm& q = cand.infinity ? c.q1 : c.q0;
    const XForm& g = cand.infinity ? b.g1 : b.g0;
    NumberFieldPtr field =
        cand.p.degree() == 1 ? trivial_field() : make_field(cand.p);
    NFElem at = cand.p.degree() == 1 ? NFElem::from_rat(-cand.p.coeff(0))
                                     : NFElem::generator(field);
    bool pruneable = !cand.infinity && from_content.find(cand.p.coeffs()) == from_content.end();
    for (int j = 0; j < 3; ++j) {
      // cheap multiple-intersection test in F_P[t]/(p): certain prunes only
      if (pruneable && chart_ok[static_cast<std::size_t>(j)] &&
          no_multiple_root_mod_p(chart_rho[static_cast<std::size_t>(j)], cand.p))
        continue;
      ChartSystem s = chart_system(q, g, j);
      if (s.g.is_zero()) continue;
      Tri q_red = reduce_tri_mod(s.q, cand.p), g_red = reduce_tri_mod(s.g, cand.p),
          mab_red = reduce_tri_mod(s.m_ab, cand.p), mua_red = reduce_tri_mod(s.m_ua, cand.p),
          mub_red = reduce_tri_mod(s.m_ub, cand.p);
      std::vector<std::vector<KPoly>> fib{tri_at_point(q_red, at), tri_at_point(g_red, at),
                                          tri_at_point(mab_red, at), tri_at_point(mua_red, at),
                                          tri_at_point(mub_red, at)};
      std::vector<PointGroup> groups;
      auto zeros = fiber_common_zeros(fib, at);
      if (zeros && zeros->needs_extension == 0) {
        for (const auto& pt : zeros->points) groups.push_back({field, at, pt[0], pt[1]});
      } else if (!zeros) {
        out.non_isolated = true;
        out.evidence.push_back("non-isolated singular locus over " + cand.p.str());
        continue;
      } else {
        // coordinates live in an extension: fall back to the primitive
        // element solver on the p-reduced system
        Tri ptri(std::vector<Bi>{Bi::constant(cand.p)});
        std::vector<Tri> sys{ptri, q_red, g_red, mab_red, mua_red, mub_red};
        ZeroDimResult res = solve_zero_dim(sys);
        if (res.positive_dimensional) {
          out.non_isolated = true;
          out.evidence.push_back("non-isolated singular locus over " + cand.p.str());
          continue;
        }
        if (res.failed) {
          out.solver_failed = true;
          out.evidence.push_back("point solver gave up over " + cand.p.str());
          continue;
        }
        for (const auto& grp : res.groups) groups.push_back(grp);
      }
      for (const auto& grp : groups) {
        // chart-visibility partition avoids cross-field deduplication
        if (j == 1 && !grp.b.is_zero()) continue;
        if (j == 2 && !(grp.a.is_zero() && grp.b.is_zero())) continue;
        LocatedPoint pt;
        pt.field = grp.field;
        pt.u = grp.u;
        pt.at_infinity_chart = cand.infinity;
        pt.fiber_chart = j;
        pt.proj = chart_point_to_proj(j, grp.a, grp.b);
        pt.base_min_poly = cand.p;
        // on Sing(conic) iff the full chart gradient of q dies at the point
        Tri qa = reduce_tri_mod(s.q_a, cand.p), qb = reduce_tri_mod(s.q_b, cand.p),
            qu = reduce_tri_mod(s.q_u, cand.p);
        bool grad_zero = tri_eval_nf(qa, grp.u, grp.a, grp.b).is_zero() &&
                         tri_eval_nf(qb, grp.u, grp.a, grp.b).is_zero() &&
                         tri_eval_nf(qu, grp.u, grp.a, grp.b).is_zero();
        pt.on_conic_singularity = grad_zero;
        out.points.push_back(std::move(pt));
      }
    }
  }
  return out;
}

Jet2 local_branch_equation(const ConicData& c, const BranchData& b, const LocatedPoint& pt,
                           int trunc) {
  const XForm& qf = pt.at_infinity_chart ? c.q1 : c.q0;
  const XForm& gf = pt.at_infinity_chart ? b.g1 : b.g0;
  Tri qt = qf.dehom(pt.fiber_chart), gt = gf.dehom(pt.fiber_chart);
  int ja = (pt.fiber_chart + 1) % 3, jb = (pt.fiber_chart + 2) % 3;
  NFElem a0 = pt.proj[static_cast<std::size_t>(ja)];
  NFElem b0 = pt.proj[static_cast<std::size_t>(jb)];
  NFElem u0 = pt.u;
  NFElem one = NFElem::one(u0.field());
  NFElem zero = NFElem::zero(u0.field());

  // recenter (u, a, b) -> (U, A, B) at the point
  auto shift = [&](const Tri& f) {
    KTriPoly out;
    for (int j = 0; j <= f.deg_b(); ++j) {
      const Bi& bi = f.coeff(j);
      for (int i = 0; i <= bi.deg_a(); ++i) {
        const UniPoly cu = bi.coeff(i);
        if (cu.is_zero()) continue;
        // Taylor coefficients of cu at u0
        std::vector<NFElem> taylor;
        UniPoly der = cu;
        Rat fact = 1;
        for (int m = 0; m <= cu.degree(); ++m) {
          taylor.push_back(eval_poly(der, u0) * (Rat(1) / fact));
          der = der.derivative();
          fact *= Rat(m + 1);
        }
        // binomial expansions of (a0 + A)^i (b0 + B)^j
        std::vector<NFElem> apow(static_cast<std::size_t>(i) + 1, one);
        for (int k = 1; k <= i; ++k)
          apow[static_cast<std::size_t>(k)] = apow[static_cast<std::size_t>(k - 1)] * a0;
        std::vector<NFElem> bpow(static_cast<std::size_t>(j) + 1, one);
        for (int k = 1; k <= j; ++k)
          bpow[static_cast<std::size_t>(k)] = bpow[static_cast<std::size_t>(k - 1)] * b0;
        auto binom = [](int n, int k) {
          long long r = 1;
          for (int x = 0; x < k; ++x) r = r * (n - x) / (x + 1);
          return Rat(r);
        };
        for (std::size_t m = 0; m < taylor.size(); ++m) {
          if (taylor[m].is_zero()) continue;
          for (int ai = 0; ai <= i; ++ai)
            for (int bj = 0; bj <= j; ++bj) {
              NFElem coef = taylor[m] * binom(i, ai) * binom(j, bj) *
                            apow[static_cast<std::size_t>(i - ai)] *
                            bpow[static_cast<std::size_t>(j - bj)];
              if (coef.is_zero()) continue;
              std::array<int, 3> key{static_cast<int>(m), ai, bj};
              auto it = out.find(key);
              if (it == out.end()) out.emplace(key, coef);
              else {
                it->second = it->second + coef;
                if (it->second.is_zero()) out.erase(it);
              }
            }
        }
      }
    }
    return out;
  };
  KTriPoly pq = shift(qt), pg = shift(gt);
  // choose the solve variable: a coordinate with nonvanishing q-gradient
  auto lin_coeff = [&](const KTriPoly& f, int slot) {
    std::array<int, 3> key{0, 0, 0};
    key[static_cast<std::size_t>(slot)] = 1;
    auto it = f.find(key);
    return it == f.end() ? zero : it->second;
  };
  int solve_slot = -1;
  for (int slot : {0, 2, 1}) {  // prefer the base direction, then B, then A
    if (!lin_coeff(pq, slot).is_zero()) {
      solve_slot = slot;
      break;
    }
  }
  if (solve_slot < 0) throw std::logic_error("local equation requested at a conic singularity");
  // permute exponents so the solve variable comes first
  auto permute = [&](const KTriPoly& f) {
    if (solve_slot == 0) return f;
    KTriPoly out;
    for (const auto& [k, v] : f) {
      std::array<int, 3> nk;
      if (solve_slot == 1) nk = {k[1], k[0], k[2]};
      else
        nk = {k[2], k[1], k[0]};
      out[nk] = v;
    }
    return out;
  };
  KTriPoly pq2 = permute(pq), pg2 = permute(pg);
  Jet2 phi = implicit_solve(pq2, trunc, zero);
  return substitute_z(pg2, phi);
}

BranchReport analyze_branch(const ConicData& c, const ConicReport& crep, const BranchData& b) {
  BranchReport rep;
  SingularSearch search = find_singular_points(c, b);
  rep.notes = search.evidence;

  // direct check: does the branch pass through a singular point of the conic?
  for (const auto& fib : crep.degenerate) {
    if (!fib.is_singular()) continue;
    const XForm& g = fib.point.at_infinity ? b.g1 : b.g0;
    NFElem at = fib.point.at_infinity ? NFElem::from_rat(0) : fib.point.element();
    if (g.eval_at(at, fib.node).is_zero()) rep.meets_conic_singularities = true;
  }
  for (const auto& pt : search.points)
    if (pt.on_conic_singularity) rep.meets_conic_singularities = true;

  bool any_undetermined = false, any_not_simple = false;
  for (const auto& pt : search.points) {
    if (pt.on_conic_singularity) continue;
    CurveSingularity cs;
    cs.at = pt;
    for (int trunc : {14, 24, 44}) {
      Jet2 f = local_branch_equation(c, b, pt, trunc);
      cs.sing = classify_plane_singularity(f);
      if (cs.sing.cls != SingClass::Undetermined || trunc == 44) break;
    }
    if (cs.sing.cls == SingClass::Smooth) continue;  // tangency candidate, not singular
    if (cs.sing.cls == SingClass::Undetermined) any_undetermined = true;
    if (cs.sing.cls == SingClass::NotSimple) any_not_simple = true;
    rep.singularities.push_back(std::move(cs));
  }
  std::sort(rep.singularities.begin(), rep.singularities.end(),
            [](const CurveSingularity& x, const CurveSingularity& y) {
              return x.at.location_str() < y.at.location_str();
            });

  if (search.non_isolated) rep.verdict = BranchVerdict::NotNegligible;
  else if (search.solver_failed || any_undetermined)
    rep.verdict = BranchVerdict::Undetermined;
  else if (any_not_simple)
    rep.verdict = BranchVerdict::NotNegligible;
  else if (rep.meets_conic_singularities)
    rep.verdict = BranchVerdict::Undetermined;
  else if (rep.singularities.empty())
    rep.verdict = BranchVerdict::SmoothBranch;
  else
    rep.verdict = BranchVerdict::NegligibleOnly;
  return rep;
}

// ============================================================
// Certification
// ============================================================

Certificate certify(const FiveTuple& t) {
  Certificate cert;
  cert.violations = validate(t);
  bool fatal = !cert.violations.empty();
  if (t.sum_d() > 0) {
    cert.inv = invariants(t.d, t.e0, 0);
    if (0 <= t.d[0] && t.d[0] <= t.d[1] && t.d[1] <= t.d[2]) cert.cond = conditions(t.d, t.e0);
  }
  if (fatal) {
    cert.verdict = Admissibility::NotAdmissible;
    cert.notes.push_back("validation failed");
    return cert;
  }
  ConicData conic;
  try {
    conic = build_conic(t);
  } catch (const std::exception& e) {
    cert.verdict = Admissibility::NotAdmissible;
    cert.notes.push_back(e.what());
    return cert;
  }
  cert.conic_built = true;
  cert.conic = classify_singularities(conic);
  if (cert.conic.verdict == ConicVerdict::NotAdmissible) {
    cert.verdict = Admissibility::NotAdmissible;
    return cert;
  }
  BranchData bd;
  try {
    bd = restrict_to_conic(t, conic);
  } catch (const std::exception& e) {
    cert.verdict = Admissibility::NotAdmissible;
    cert.notes.push_back(e.what());
    return cert;
  }
  cert.branch = analyze_branch(conic, cert.conic, bd);

  bool conic_ok = cert.conic.verdict == ConicVerdict::SmoothConic ||
                  cert.conic.verdict == ConicVerdict::RDPOnly;
  bool branch_ok = cert.branch.verdict == BranchVerdict::SmoothBranch ||
                   cert.branch.verdict == BranchVerdict::NegligibleOnly;
  if (cert.conic.verdict == ConicVerdict::Undetermined ||
      cert.branch.verdict == BranchVerdict::Undetermined) {
    cert.verdict = Admissibility::Undetermined;
  } else if (conic_ok && branch_ok && !cert.branch.meets_conic_singularities) {
    cert.verdict = Admissibility::Admissible;
  } else {
    cert.verdict = Admissibility::NotAdmissible;
  }
  return cert;
}

namespace {

const char* conic_verdict_str(ConicVerdict v) {
  switch (v) {
    case ConicVerdict::SmoothConic:
      return "SmoothConic";
    case ConicVerdict::RDPOnly:
      return "RDPOnly";
    case ConicVerdict::NotAdmissible:
      return "NotAdmissible";
    case ConicVerdict::Undetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

const char* branch_verdict_str(BranchVerdict v) {
  switch (v) {
    case BranchVerdict::SmoothBranch:
      return "SmoothBranch";
    case BranchVerdict::NegligibleOnly:
      return "NegligibleOnly";
    case BranchVerdict::NotNegligible:
      return "NotNegligible";
    case BranchVerdict::Undetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

}  // namespace

std::string verdict_str(Admissibility a) {
  switch (a) {
    case Admissibility::Admissible:
      return "Admissible";
    case Admissibility::NotAdmissible:
      return "NotAdmissible";
    case Admissibility::Undetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

int verdict_exit_code(Admissibility a) {
  switch (a) {
    case Admissibility::Admissible:
      return 0;
    case Admissibility::NotAdmissible:
      return 1;
    case Admissibility::Undetermined:
      return 2;
  }
  return 2;
}

std::string certificate_to_json(const Certificate& c) {
  nlohmann::json j;
  j["verdict"] = verdict_str(c.verdict);
  j["violations"] = nlohmann::json::array();
  for (const auto& v : c.violations) j["violations"].push_back({{"code", v.code}, {"message", v.message}});
  j["notes"] = c.notes;
  nlohmann::json inv;
  inv["chi_O"] = c.inv.chi_O;
  inv["c1sq"] = c.inv.c1sq;
  inv["chi_f"] = c.inv.chi_f;
  inv["Kf2"] = c.inv.Kfsq;
  inv["slope"] = rat_str(c.inv.slope);
  inv["pg"] = c.inv.pg;
  inv["q"] = c.inv.q;
  inv["Kcsq"] = c.inv.Kcsq;
  inv["blowups"] = c.inv.blowup_count;
  inv["threeK8chi"] = c.inv.three_Kf2_minus_8chi;
  j["invariants"] = inv;
  nlohmann::json cond;
  cond["nec51"] = c.cond.necessary;
  cond["exA"] = c.cond.exist_a;
  cond["exB"] = c.cond.exist_b;
  cond["scA"] = c.cond.sc_a;
  cond["scB"] = c.cond.sc_b;
  cond["epsilon"] = c.cond.epsilon;
  cond["epsilon_prime"] = c.cond.epsilon_prime;
  j["conditions"] = cond;
  if (c.conic_built) {
    nlohmann::json conic;
    conic["verdict"] = conic_verdict_str(c.conic.verdict);
    conic["degenerate_fibers"] = nlohmann::json::array();
    for (const auto& f : c.conic.degenerate) {
      nlohmann::json e;
      e["point"] = f.point.str();
      e["multiplicity"] = f.multiplicity;
      e["fiber_rank"] = f.fiber_rank;
      if (f.fiber_rank == 2) {
        e["node"] = {f.node[0].str(), f.node[1].str(), f.node[2].str()};
        e["type"] = f.is_singular() ? "A" + std::to_string(f.an_index()) : "A0";
      }
      conic["degenerate_fibers"].push_back(e);
    }
    if (c.conic.hirzebruch) {
      conic["hirzebruch"] = {{"m", c.conic.hirzebruch->first}, {"d", c.conic.hirzebruch->second}};
      conic["delta_in_conic"] = c.conic.delta_in_conic;
      conic["branch_class"] = {c.conic.branch_class[0], c.conic.branch_class[1]};
    }
    j["conic"] = conic;
    nlohmann::json branch;
    branch["verdict"] = branch_verdict_str(c.branch.verdict);
    branch["meets_conic_singularities"] = c.branch.meets_conic_singularities;
    branch["notes"] = c.branch.notes;
    branch["singularities"] = nlohmann::json::array();
    for (const auto& s : c.branch.singularities) {
      nlohmann::json e;
      e["location"] = s.at.location_str();
      e["base"] = s.at.base_min_poly.str(s.at.at_infinity_chart ? "v" : "u");
      e["at_infinity"] = s.at.at_infinity_chart;
      e["type"] = s.sing.tag();
      e["multiplicity"] = s.sing.multiplicity;
      e["milnor"] = s.sing.milnor;
      branch["singularities"].push_back(e);
    }
    j["branch"] = branch;
  }
  return j.dump(2);
}

}  // namespace fibforge
