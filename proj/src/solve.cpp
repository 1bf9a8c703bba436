#include "fibforge/solve.hpp"

#include <algorithm>
#include <sstream>

namespace fibforge {

// ============================================================
// BasePoint
// ============================================================

BasePoint BasePoint::infinity() {
  BasePoint p;
  p.at_infinity = true;
  return p;
}

BasePoint BasePoint::rational(const Rat& value) {
  BasePoint p;
  p.min_poly = UniPoly::linear_root(value);
  return p;
}

BasePoint BasePoint::factor(const UniPoly& monic_irreducible) {
  BasePoint p;
  p.min_poly = monic_irreducible.monic();
  return p;
}

Rat BasePoint::rational_value() const {
  if (at_infinity || min_poly.degree() != 1) throw std::logic_error("not a finite rational point");
  return -min_poly.coeff(0);
}

NumberFieldPtr BasePoint::field() const {
  if (is_rational()) return trivial_field();
  return make_field(min_poly);
}

NFElem BasePoint::element() const {
  if (at_infinity) throw std::logic_error("infinity has no chart-0 coordinate");
  if (min_poly.degree() == 1) return NFElem::from_rat(rational_value());
  return NFElem::generator(field());
}

std::string BasePoint::str() const {
  if (at_infinity) return "infinity";
  if (min_poly.degree() == 1) return "u = " + rat_str(rational_value());
  return "root of " + min_poly.str();
}

bool BasePoint::operator==(const BasePoint& o) const {
  return at_infinity == o.at_infinity && min_poly == o.min_poly;
}

bool BasePoint::operator<(const BasePoint& o) const {
  if (at_infinity != o.at_infinity) return o.at_infinity;
  if (min_poly.degree() != o.min_poly.degree()) return min_poly.degree() < o.min_poly.degree();
  for (int i = min_poly.degree(); i >= 0; --i)
    if (min_poly.coeff(i) != o.min_poly.coeff(i)) return min_poly.coeff(i) < o.min_poly.coeff(i);
  return false;
}

// ============================================================
// Chain eliminants
// ============================================================

UniPoly chain_eliminant_u(const std::vector<Tri>& sys) {
  std::vector<Bi> stage;
  std::vector<const Tri*> positive;
  for (const auto& f : sys) {
    if (f.is_zero()) continue;
    if (f.deg_b() == 0) stage.push_back(f.coeff(0));
    else
      positive.push_back(&f);
  }
  for (std::size_t i = 0; i < positive.size(); ++i)
    for (std::size_t j = i + 1; j < positive.size(); ++j) {
      Bi r = resultant_b(*positive[i], *positive[j]);
      if (!r.is_zero()) stage.push_back(std::move(r));
    }
  if (stage.empty()) return UniPoly();
  std::vector<UniPoly> finals;
  std::vector<const Bi*> stage_pos;
  for (const auto& f : stage) {
    if (f.deg_a() == 0) finals.push_back(f.coeff(0));
    else
      stage_pos.push_back(&f);
  }
  for (std::size_t i = 0; i < stage_pos.size(); ++i)
    for (std::size_t j = i + 1; j < stage_pos.size(); ++j) {
      UniPoly r = resultant_a(*stage_pos[i], *stage_pos[j]);
      if (!r.is_zero()) finals.push_back(std::move(r));
    }
  UniPoly g;
  for (const auto& f : finals) {
    g = gcd(g, f);
    if (g.degree() == 0) break;
  }
  return g;
}

// ============================================================
// Fiber-wise common zeros over a number field
// ============================================================

std::vector<KPoly> tri_at_point(const Tri& f, const NFElem& t) { return f.eval_u_nf(t); }

namespace {

int max_deg_a(const std::vector<KPoly>& f) {
  int d = -1;
  for (const auto& c : f) d = std::max(d, c.degree());
  return d;
}

// fixed-structure Sylvester resultant in b of two polys in K[a][b], by
// evaluation at rational nodes in a and Newton interpolation over K
KPoly kres_b(const std::vector<KPoly>& A, const std::vector<KPoly>& B, const NFElem& one) {
  NFElem zero = FieldOps<NFElem>::zero(one);
  int m = static_cast<int>(A.size()) - 1, n = static_cast<int>(B.size()) - 1;
  int bound = n * std::max(max_deg_a(A), 0) + m * std::max(max_deg_a(B), 0);
  std::vector<NFElem> nodes;
  std::vector<NFElem> values;
  for (int pt = 0; pt <= bound; ++pt) {
    NFElem av = one * Rat(pt);
    std::size_t size = static_cast<std::size_t>(m + n);
    Mat<NFElem> s(size, size, zero);
    for (int r = 0; r < n; ++r)
      for (int j = 0; j <= m; ++j)
        s.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r + j)) =
            A[static_cast<std::size_t>(m - j)].eval(av);
    for (int r = 0; r < m; ++r)
      for (int j = 0; j <= n; ++j)
        s.at(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + j)) =
            B[static_cast<std::size_t>(n - j)].eval(av);
    nodes.push_back(av);
    values.push_back(mat_det(std::move(s), zero, one));
  }
  // Newton interpolation with K values at rational nodes
  std::size_t npts = nodes.size();
  for (std::size_t k = 1; k < npts; ++k)
    for (std::size_t i = npts - 1; i >= k; --i) {
      values[i] = (values[i] - values[i - 1]) * Rat(1, static_cast<long long>(k));
      if (i == k) break;
    }
  KPoly acc;
  for (std::size_t i = npts; i-- > 0;) {
    KPoly lin(std::vector<NFElem>{-nodes[i], one});
    acc = acc * lin + KPoly::constant(values[i]);
  }
  return acc;
}

KPoly squarefree_part(const KPoly& f) {
  if (f.degree() <= 1) return f.monic();
  KPoly g = fpoly_gcd(f, f.derivative());
  if (g.degree() == 0) return f.monic();
  return FPoly<NFElem>::divrem(f, g).first.monic();
}

}  // namespace

NFElem tri_eval_nf(const Tri& f, const NFElem& u, const NFElem& a, const NFElem& b) {
  NFElem acc = NFElem::zero(u.field());
  for (int i = f.deg_b(); i >= 0; --i) {
    const Bi& bi = f.coeff(i);
    NFElem inner = NFElem::zero(u.field());
    for (int j = bi.deg_a(); j >= 0; --j) inner = inner * a + eval_poly(bi.coeff(j), u);
    acc = acc * b + inner;
  }
  return acc;
}

Tri substitute_u_linear(const Tri& f, const Rat& lam, const Rat& mu) {
  // trinomial expansion of (s - lam*a - mu*b)^k
  int dmax = 0;
  for (int jb = 0; jb <= f.deg_b(); ++jb) dmax = std::max(dmax, f.coeff(jb).max_deg_u());
  // binomial table
  std::vector<std::vector<Rat>> binom(static_cast<std::size_t>(dmax) + 1);
  for (int n = 0; n <= dmax; ++n) {
    binom[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, Rat(1));
    for (int k = 1; k < n; ++k)
      binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
          binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
  }
  int db = f.deg_b() + dmax, da = f.max_deg_a() + dmax;
  std::vector<std::vector<std::vector<Rat>>> acc(
      static_cast<std::size_t>(db) + 1,
      std::vector<std::vector<Rat>>(static_cast<std::size_t>(da) + 1,
                                    std::vector<Rat>(static_cast<std::size_t>(dmax) + 1, Rat(0))));
  for (int jb = 0; jb <= f.deg_b(); ++jb) {
    const Bi& bi = f.coeff(jb);
    for (int ia = 0; ia <= bi.deg_a(); ++ia) {
      const UniPoly c = bi.coeff(ia);
      for (int k = 0; k <= c.degree(); ++k) {
        Rat ck = c.coeff(k);
        if (ck == 0) continue;
        // (s - lam a - mu b)^k = sum over p+q+r=k of C(k,q,r) s^p (-lam a)^q (-mu b)^r
        for (int q = 0; q <= k; ++q)
          for (int r = 0; r + q <= k; ++r) {
            int p = k - q - r;
            Rat coef = binom[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)] *
                       binom[static_cast<std::size_t>(k - q)][static_cast<std::size_t>(r)] *
                       rat_pow(-lam, q) * rat_pow(-mu, r);
            acc[static_cast<std::size_t>(jb + r)][static_cast<std::size_t>(ia + q)]
               [static_cast<std::size_t>(p)] += ck * coef;
          }
      }
    }
  }
  std::vector<Bi> bcoeffs;
  bcoeffs.reserve(static_cast<std::size_t>(db) + 1);
  for (int jb = 0; jb <= db; ++jb) {
    std::vector<UniPoly> arow;
    arow.reserve(static_cast<std::size_t>(da) + 1);
    for (int ia = 0; ia <= da; ++ia)
      arow.push_back(UniPoly(std::vector<Rat>(acc[static_cast<std::size_t>(jb)][static_cast<std::size_t>(ia)])));
    bcoeffs.push_back(Bi(std::move(arow)));
  }
  return Tri(std::move(bcoeffs));
}

ZeroDimResult solve_zero_dim(const std::vector<Tri>& sys) {
  ZeroDimResult out;
  UniPoly eu = chain_eliminant_u(sys);
  if (eu.is_zero()) {
    out.positive_dimensional = true;
    return out;
  }
  static const std::pair<int, int> combos[] = {{1, 2},  {1, -1}, {2, 1},
                                               {-1, 1}, {3, -2}, {2, 5}};
  for (auto [li, mi] : combos) {
    Rat lam(li), mu(mi);
    std::vector<Tri> sub;
    sub.reserve(sys.size());
    for (const auto& f : sys) sub.push_back(substitute_u_linear(f, lam, mu));
    UniPoly big_r = chain_eliminant_u(sub);
    if (big_r.is_zero()) continue;
    if (big_r.degree() == 0) return out;  // nonzero constant: no solutions
    bool retry = false;
    std::vector<PointGroup> groups;
    for (const auto& [h, mult] : irreducible_factor(big_r).factors) {
      (void)mult;
      if (h.degree() < 1) continue;
      NumberFieldPtr ks = h.degree() == 1 ? trivial_field() : make_field(h);
      NFElem sval = h.degree() == 1 ? NFElem::from_rat(-h.coeff(0)) : NFElem::generator(ks);
      std::vector<std::vector<KPoly>> fib;
      fib.reserve(sub.size());
      for (const auto& f : sub) fib.push_back(tri_at_point(f, sval));
      auto zeros = fiber_common_zeros(fib, sval);
      if (!zeros) {
        out.positive_dimensional = true;
        return out;
      }
      if (zeros->needs_extension > 0) {
        retry = true;
        break;
      }
      for (const auto& pt : zeros->points) {
        const NFElem& av = pt[0];
        const NFElem& bv = pt[1];
        NFElem uv = sval - av * lam - bv * mu;
        bool ok = true;
        for (const auto& f : sys)
          if (!tri_eval_nf(f, uv, av, bv).is_zero()) {
            ok = false;
            break;
          }
        if (ok) groups.push_back({ks, uv, av, bv});
      }
    }
    if (!retry) {
      out.groups = std::move(groups);
      return out;
    }
  }
  out.failed = true;
  return out;
}

std::optional<FiberZeros> fiber_common_zeros(const std::vector<std::vector<KPoly>>& sys,
                                             const NFElem& sample) {
  NFElem one = FieldOps<NFElem>::one(sample);
  NFElem zero = FieldOps<NFElem>::zero(sample);
  // eliminate b
  std::vector<KPoly> stage;
  std::vector<const std::vector<KPoly>*> positive;
  for (const auto& f : sys) {
    if (f.empty()) continue;
    if (f.size() == 1) stage.push_back(f[0]);
    else
      positive.push_back(&f);
  }
  for (std::size_t i = 0; i < positive.size(); ++i)
    for (std::size_t j = i + 1; j < positive.size(); ++j) {
      KPoly r = kres_b(*positive[i], *positive[j], one);
      if (!r.is_zero()) stage.push_back(std::move(r));
    }
  KPoly ea;
  bool any = false;
  for (const auto& f : stage) {
    if (f.is_zero()) continue;
    any = true;
    ea = ea.is_zero() ? f.monic() : fpoly_gcd(ea, f);
    if (ea.degree() == 0) break;
  }
  if (!any) return std::nullopt;  // everything collapsed: non-isolated
  FiberZeros out;
  if (ea.degree() == 0) return out;  // no common a-coordinate at all
  KPoly w = squarefree_part(ea);
  // peel off roots in K: repeatedly strip linear factors found by gcd with
  // candidate linears from rational roots is not available over K, so handle
  // the two tractable shapes: linear w, or w splitting into linears found by
  // exhausting degree-1 gcds with derivative chains. Anything else counts as
  // needing an extension.
  std::vector<NFElem> a_roots;
  if (w.degree() == 1) {
    a_roots.push_back(-(w.coeff(0, zero) * FieldOps<NFElem>::inv(w.leading())));
  } else {
    out.needs_extension += w.degree();
    return out;
  }
  for (const NFElem& av : a_roots) {
    // substitute a = av, solve for b
    KPoly eb;
    bool nonconst_seen = false;
    for (const auto& f : sys) {
      std::vector<NFElem> bc;
      bc.reserve(f.size());
      for (const auto& ka : f) bc.push_back(ka.eval(av));
      KPoly fb(std::move(bc));
      if (fb.is_zero()) continue;
      nonconst_seen = true;
      eb = eb.is_zero() ? fb.monic() : fpoly_gcd(eb, fb);
      if (eb.degree() == 0) break;
    }
    if (!nonconst_seen) return std::nullopt;  // a whole b-line of zeros
    if (eb.degree() == 0) continue;           // no consistent b
    KPoly wb = squarefree_part(eb);
    if (wb.degree() == 1) {
      NFElem bv = -(wb.coeff(0, zero) * FieldOps<NFElem>::inv(wb.leading()));
      out.points.push_back({av, bv});
    } else {
      out.needs_extension += wb.degree();
    }
  }
  return out;
}

}  // namespace fibforge
