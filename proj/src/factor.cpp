#include "fibforge/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace fibforge {
namespace {

// ============================================================
// Arithmetic in F_p[x], p an odd word-sized prime
// ============================================================

using ZpPoly = std::vector<std::uint64_t>;  // coefficients, no trailing zeros

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

std::uint64_t powmod_u(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1u) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1u;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod_u(a % p, p - 2, p); }

void zp_trim(ZpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int zp_deg(const ZpPoly& f) { return static_cast<int>(f.size()) - 1; }

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + static_cast<__uint128_t>(a[i]) * b[j]) % p;
  }
  zp_trim(out);
  return out;
}

ZpPoly zp_sub(ZpPoly a, const ZpPoly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  zp_trim(a);
  return a;
}

ZpPoly zp_monic(ZpPoly f, std::uint64_t p) {
  if (f.empty()) return f;
  std::uint64_t inv = invmod(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv, p);
  return f;
}

// remainder of a by b, b nonzero
ZpPoly zp_rem(ZpPoly a, const ZpPoly& b, std::uint64_t p) {
  std::uint64_t lb_inv = invmod(b.back(), p);
  while (zp_deg(a) >= zp_deg(b)) {
    std::uint64_t q = mulmod(a.back(), lb_inv, p);
    std::size_t off = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      a[off + j] = (a[off + j] + p - mulmod(q, b[j], p)) % p;
    zp_trim(a);
    if (a.empty()) break;
  }
  return a;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
  while (!b.empty()) {
    ZpPoly r = zp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return zp_monic(a, p);
}

ZpPoly zp_deriv(const ZpPoly& f, std::uint64_t p) {
  if (f.size() <= 1) return {};
  ZpPoly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = mulmod(f[i], i % p, p);
  zp_trim(out);
  return out;
}

ZpPoly zp_powmod(ZpPoly base, const Int& e, const ZpPoly& mod, std::uint64_t p) {
  ZpPoly r{1};
  base = zp_rem(std::move(base), mod, p);
  Int k = e;
  while (k > 0) {
    if ((k & 1) != 0) r = zp_rem(zp_mul(r, base, p), mod, p);
    k >>= 1;
    if (k > 0) base = zp_rem(zp_mul(base, base, p), mod, p);
  }
  return r;
}

// Extended Euclid: s*a + t*b = gcd (monic); requires gcd = 1 for our use.
void zp_ext_gcd(const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t, std::uint64_t p) {
  ZpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    // r0 = q r1 + r
    ZpPoly q;
    {
      ZpPoly rem = r0;
      std::uint64_t inv = invmod(r1.back(), p);
      q.assign(static_cast<std::size_t>(std::max(0, zp_deg(r0) - zp_deg(r1))) + 1, 0);
      while (zp_deg(rem) >= zp_deg(r1)) {
        std::uint64_t c = mulmod(rem.back(), inv, p);
        std::size_t off = rem.size() - r1.size();
        q[off] = c;
        for (std::size_t j = 0; j < r1.size(); ++j)
          rem[off + j] = (rem[off + j] + p - mulmod(c, r1[j], p)) % p;
        zp_trim(rem);
        if (rem.empty()) break;
      }
      zp_trim(q);
      r0 = std::move(rem);
    }
    std::swap(r0, r1);
    ZpPoly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ZpPoly t2 = zp_sub(t0, zp_mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  std::uint64_t inv = invmod(r0.back(), p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  for (auto& c : t0) c = mulmod(c, inv, p);
  s = std::move(s0);
  t = std::move(t0);
}

// Equal-degree splitting (Cantor--Zassenhaus), f squarefree monic, all
// irreducible factors of degree d.
void zp_edf(const ZpPoly& f, int d, std::uint64_t p, std::mt19937_64& rng,
            std::vector<ZpPoly>& out) {
  if (zp_deg(f) == d) {
    out.push_back(f);
    return;
  }
  Int expo = (int_pow(Int(p), static_cast<unsigned>(d)) - 1) / 2;
  for (;;) {
    ZpPoly a(static_cast<std::size_t>(zp_deg(f)), 0);
    for (auto& c : a) c = rng() % p;
    zp_trim(a);
    if (zp_deg(a) < 1) continue;
    ZpPoly b = zp_powmod(a, expo, f, p);
    if (b.empty()) continue;
    b[0] = (b[0] + p - 1) % p;
    zp_trim(b);
    ZpPoly g = zp_gcd(b, f, p);
    if (zp_deg(g) > 0 && zp_deg(g) < zp_deg(f)) {
      zp_edf(g, d, p, rng, out);
      ZpPoly h = zp_rem(f, g, p);  // should be zero; use division for cofactor
      // cofactor f / g
      ZpPoly co;
      {
        ZpPoly rem = f;
        std::uint64_t inv = invmod(g.back(), p);
        co.assign(f.size() - g.size() + 1, 0);
        while (zp_deg(rem) >= zp_deg(g)) {
          std::uint64_t c = mulmod(rem.back(), inv, p);
          std::size_t off = rem.size() - g.size();
          co[off] = c;
          for (std::size_t j = 0; j < g.size(); ++j)
            rem[off + j] = (rem[off + j] + p - mulmod(c, g[j], p)) % p;
          zp_trim(rem);
          if (rem.empty()) break;
        }
        zp_trim(co);
      }
      zp_edf(co, d, p, rng, out);
      return;
    }
  }
}

// Full factorization of a squarefree monic polynomial mod p.
std::vector<ZpPoly> zp_factor_squarefree(ZpPoly f, std::uint64_t p) {
  std::vector<ZpPoly> out;
  std::mt19937_64 rng(0x5eedULL ^ (p << 16));
  ZpPoly x{0, 1};
  ZpPoly h = x;
  int d = 0;
  while (zp_deg(f) > 0) {
    ++d;
    if (2 * d > zp_deg(f)) {
      out.push_back(f);
      break;
    }
    h = zp_powmod(h, Int(p), f, p);
    ZpPoly hx = zp_sub(h, x, p);
    ZpPoly g = zp_gcd(hx, f, p);
    if (zp_deg(g) > 0) {
      zp_edf(g, d, p, rng, out);
      // f /= g
      ZpPoly co;
      {
        ZpPoly rem = f;
        std::uint64_t inv = invmod(g.back(), p);
        co.assign(f.size() - g.size() + 1, 0);
        while (zp_deg(rem) >= zp_deg(g)) {
          std::uint64_t c = mulmod(rem.back(), inv, p);
          std::size_t off = rem.size() - g.size();
          co[off] = c;
          for (std::size_t j = 0; j < g.size(); ++j)
            rem[off + j] = (rem[off + j] + p - mulmod(c, g[j], p)) % p;
          zp_trim(rem);
          if (rem.empty()) break;
        }
        zp_trim(co);
      }
      f = std::move(co);
      h = zp_rem(h, f, p);
    }
  }
  return out;
}

// ============================================================
// Z[x] helpers (dense, coefficient vectors over Int)
// ============================================================

using ZPoly = std::vector<Int>;

void z_trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int z_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  z_trim(out);
  return out;
}

void z_mod_sym(ZPoly& f, const Int& m) {
  Int half = m / 2;
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  z_trim(f);
}

// Exact division by a monic divisor; returns false if not divisible.
bool z_div_monic(const ZPoly& a, const ZPoly& b, ZPoly& quo) {
  if (b.empty() || b.back() != 1) throw std::logic_error("divisor not monic");
  ZPoly rem = a;
  quo.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
  while (z_deg(rem) >= z_deg(b)) {
    Int c = rem.back();
    std::size_t off = rem.size() - b.size();
    quo[off] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[off + j] -= c * b[j];
    z_trim(rem);
    if (rem.empty()) break;
  }
  return rem.empty();
}

ZpPoly z_to_zp(const ZPoly& f, std::uint64_t p) {
  ZpPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Int c = f[i] % Int(p);
    if (c < 0) c += Int(p);
    out[i] = c.convert_to<std::uint64_t>();
  }
  zp_trim(out);
  return out;
}

ZPoly zp_to_z_sym(const ZpPoly& f, std::uint64_t p) {
  ZPoly out(f.size());
  std::uint64_t half = p / 2;
  for (std::size_t i = 0; i < f.size(); ++i)
    out[i] = f[i] > half ? Int(f[i]) - Int(p) : Int(f[i]);
  z_trim(out);
  return out;
}

// ============================================================
// Hensel lifting (monic polynomials, quadratic two-factor step)
// ============================================================

ZPoly z_mod_mul(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r = z_mul(a, b);
  z_mod_sym(r, m);
  return r;
}

ZPoly z_mod_sub(ZPoly a, const ZPoly& b, const Int& m) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  z_mod_sym(a, m);
  return a;
}

ZPoly z_mod_add(ZPoly a, const ZPoly& b, const Int& m) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  z_mod_sym(a, m);
  return a;
}

// divrem modulo m with monic divisor
void z_mod_divrem(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
  r = a;
  z_mod_sym(r, m);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Int(0));
  while (z_deg(r) >= z_deg(b)) {
    Int c = r.back();
    std::size_t off = r.size() - b.size();
    q[off] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[off + j] -= c * b[j];
    z_trim(r);
    if (r.empty()) break;
  }
  z_mod_sym(q, m);
  z_mod_sym(r, m);
}

// One quadratic step: f = g*h mod m, s*g + t*h = 1 mod m, g and h monic.
// Afterwards the same holds mod m^2 (von zur Gathen & Gerhard 15.10).
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
  Int m2 = m * m;
  ZPoly e = z_mod_sub(f, z_mod_mul(g, h, m2), m2);
  ZPoly q, r;
  z_mod_divrem(z_mod_mul(s, e, m2), h, m2, q, r);
  ZPoly g1 = z_mod_add(g, z_mod_add(z_mod_mul(t, e, m2), z_mod_mul(q, g, m2), m2), m2);
  ZPoly h1 = z_mod_add(h, r, m2);
  ZPoly b = z_mod_sub(z_mod_add(z_mod_mul(s, g1, m2), z_mod_mul(t, h1, m2), m2), ZPoly{Int(1)}, m2);
  ZPoly c, d;
  z_mod_divrem(z_mod_mul(s, b, m2), h1, m2, c, d);
  ZPoly s1 = z_mod_sub(s, d, m2);
  ZPoly t1 = z_mod_sub(t, z_mod_add(z_mod_mul(t, b, m2), z_mod_mul(c, g1, m2), m2), m2);
  g = std::move(g1);
  h = std::move(h1);
  s = std::move(s1);
  t = std::move(t1);
}

// Lift the mod-p factor list of a monic f to factors mod M (M = p^(2^k) >= bound).
void hensel_lift_tree(const ZPoly& f, const std::vector<ZpPoly>& modp, std::uint64_t p,
                      const Int& bound, std::vector<ZPoly>& out) {
  if (modp.size() == 1) {
    ZPoly r = f;
    out.push_back(std::move(r));
    return;
  }
  std::size_t mid = modp.size() / 2;
  ZpPoly a{1}, b{1};
  for (std::size_t i = 0; i < mid; ++i) a = zp_mul(a, modp[i], p);
  for (std::size_t i = mid; i < modp.size(); ++i) b = zp_mul(b, modp[i], p);
  ZpPoly s, t;
  zp_ext_gcd(a, b, s, t, p);
  ZPoly G = zp_to_z_sym(a, p), H = zp_to_z_sym(b, p);
  ZPoly S = zp_to_z_sym(s, p), T = zp_to_z_sym(t, p);
  Int m(p);
  while (m < bound) {
    hensel_step(f, G, H, S, T, m);
    m *= m;
  }
  hensel_lift_tree(G, std::vector<ZpPoly>(modp.begin(), modp.begin() + static_cast<long>(mid)),
                   p, bound, out);
  hensel_lift_tree(H, std::vector<ZpPoly>(modp.begin() + static_cast<long>(mid), modp.end()),
                   p, bound, out);
}

// ============================================================
// Zassenhaus for monic square-free integer polynomials
// ============================================================

Int coeff_bound_monic(const ZPoly& f) {
  // 2^n * l2-norm covers every monic factor (Mignotte)
  Int s = 0;
  for (const auto& c : f) s += c * c;
  Int root = 1;
  while (root * root < s) root <<= 1;
  return (Int(1) << static_cast<unsigned>(z_deg(f) + 2)) * root;
}

bool next_prime(std::uint64_t& p) {
  auto is_prime = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  do {
    ++p;
  } while (!is_prime(p));
  return true;
}

// Monic irreducible factors over Z of a monic square-free f in Z[x].
std::vector<ZPoly> zassenhaus_monic(ZPoly f) {
  std::vector<ZPoly> result;
  if (z_deg(f) <= 1) {
    result.push_back(std::move(f));
    return result;
  }
  std::uint64_t p = 2;
  std::vector<ZpPoly> modp;
  for (;;) {
    next_prime(p);
    ZpPoly fp = z_to_zp(f, p);
    if (zp_deg(fp) != z_deg(f)) continue;  // cannot happen for monic, kept for safety
    ZpPoly g = zp_gcd(fp, zp_deriv(fp, p), p);
    if (zp_deg(g) != 0) continue;
    modp = zp_factor_squarefree(zp_monic(fp, p), p);
    break;
  }
  if (modp.size() == 1) {
    result.push_back(std::move(f));
    return result;
  }
  Int bound = 2 * coeff_bound_monic(f);
  Int M(p);
  while (M < bound) M *= M;
  std::vector<ZPoly> lifted;
  hensel_lift_tree(f, modp, p, bound, lifted);
  for (auto& g : lifted) z_mod_sym(g, M);

  std::vector<int> active(lifted.size());
  for (std::size_t i = 0; i < lifted.size(); ++i) active[i] = static_cast<int>(i);
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= active.size()) {
    // all index subsets of size s
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool found = false;
    for (;;) {
      ZPoly cand{Int(1)};
      for (std::size_t i : idx) cand = z_mod_mul(cand, lifted[static_cast<std::size_t>(active[i])], M);
      z_mod_sym(cand, M);
      ZPoly quo;
      if (!cand.empty() && cand.back() == 1 && z_div_monic(rest, cand, quo)) {
        result.push_back(cand);
        rest = std::move(quo);
        std::vector<int> na;
        for (std::size_t i = 0, k = 0; i < active.size(); ++i) {
          if (k < s && idx[k] == i) {
            ++k;
            continue;
          }
          na.push_back(active[i]);
        }
        active = std::move(na);
        found = true;
        break;
      }
      // next combination
      long pos = static_cast<long>(s) - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] ==
                             active.size() - s + static_cast<std::size_t>(pos))
        --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (std::size_t j = static_cast<std::size_t>(pos) + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (z_deg(rest) > 0) result.push_back(rest);
  return result;
}

[[maybe_unused]] UniPoly z_to_unipoly(const ZPoly& f) {
  std::vector<Rat> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) c[i] = Rat(f[i]);
  return UniPoly(std::move(c));
}

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

}  // namespace

UniPoly Factorization::expand() const {
  UniPoly r = UniPoly::constant(unit);
  for (const auto& [f, m] : factors) r *= f.pow(static_cast<unsigned>(m));
  return r;
}

Factorization squarefree_factor(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero input");
  Factorization out;
  out.unit = f.leading();
  UniPoly g = f.monic();
  if (g.degree() == 0) return out;
  // Yun
  UniPoly gp = g.derivative();
  UniPoly w = gcd(g, gp);
  UniPoly a = UniPoly::divrem(g, w).first;
  UniPoly b = UniPoly::divrem(gp, w).first;
  UniPoly c = b - a.derivative();
  int i = 1;
  while (a.degree() > 0) {
    UniPoly fi = gcd(a, c);
    if (fi.degree() > 0) out.factors.emplace_back(fi, i);
    a = UniPoly::divrem(a, fi).first;
    b = UniPoly::divrem(c, fi).first;
    c = b - a.derivative();
    ++i;
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  return out;
}

Factorization irreducible_factor(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero input");
  Factorization sf = squarefree_factor(f);
  Factorization out;
  out.unit = sf.unit;
  for (const auto& [g, mult] : sf.factors) {
    auto [ints, scale] = g.primitive_int();
    (void)scale;
    // monicize: H(x) = L^(n-1) * G(x/L) is monic over Z
    Int L = ints.back();
    int n = z_deg(ints);
    // H(x) = L^(n-1) * G(x/L) is monic over Z: H_i = G_i * L^(n-1-i)
    ZPoly H(ints.size());
    H[static_cast<std::size_t>(n)] = 1;
    Int pw = 1;
    for (int i = n - 1; i >= 0; --i) {
      H[static_cast<std::size_t>(i)] = ints[static_cast<std::size_t>(i)] * pw;
      pw *= L;
    }
    for (const ZPoly& Hi : zassenhaus_monic(std::move(H))) {
      // map back: g_i(y) = H_i(L*y) / L^deg
      int di = z_deg(Hi);
      std::vector<Rat> ci(Hi.size());
      Rat lp = 1;
      for (int i = 0; i <= di; ++i) {
        ci[static_cast<std::size_t>(i)] =
            Rat(Hi[static_cast<std::size_t>(i)]) * lp / rat_pow(Rat(L), di);
        lp *= Rat(L);
      }
      out.factors.emplace_back(UniPoly(std::move(ci)), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second < y.second;
    return poly_less(x.first, y.first);
  });
  return out;
}

bool is_irreducible(const UniPoly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  Factorization fac = irreducible_factor(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::optional<int> vanishing_order(const UniPoly& f, const Rat& p) {
  if (f.is_zero()) return std::nullopt;
  UniPoly lin = UniPoly::linear_root(p);
  int k = 0;
  UniPoly g = f;
  for (;;) {
    auto [q, r] = UniPoly::divrem(g, lin);
    if (!r.is_zero()) return k;
    ++k;
    g = std::move(q);
  }
}

std::optional<int> vanishing_order_at_factor(const UniPoly& f, const UniPoly& q) {
  if (f.is_zero()) return std::nullopt;
  if (q.degree() < 1) throw std::invalid_argument("constant factor");
  int k = 0;
  UniPoly g = f;
  for (;;) {
    auto [quo, r] = UniPoly::divrem(g, q);
    if (!r.is_zero()) return k;
    ++k;
    g = std::move(quo);
  }
}

std::optional<int> vanishing_order_at_infinity(const UniPoly& f, int degree_bound) {
  if (f.is_zero()) return std::nullopt;
  if (degree_bound < f.degree()) throw std::invalid_argument("degree bound below degree");
  return degree_bound - f.degree();
}

std::vector<Rat> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero input");
  std::vector<Rat> roots;
  for (const auto& [g, m] : irreducible_factor(f).factors) {
    (void)m;
    if (g.degree() == 1) roots.push_back(-g.coeff(0) / g.coeff(1));
  }
  return roots;
}

}  // namespace fibforge
