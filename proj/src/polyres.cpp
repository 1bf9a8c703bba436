#include "fibforge/polyres.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "zp_detail.hpp"

namespace fibforge {

namespace zp {
namespace {
// deterministic Miller-Rabin, valid for all 64-bit inputs
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x <= 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < r - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}
}  // namespace

std::uint64_t nth_crt_prime(std::size_t i) {
  static std::vector<std::uint64_t> cache;
  static std::uint64_t next = (1ull << 62) - 1;
  while (cache.size() <= i) {
    while (!is_prime_u64(next)) next -= 2;
    cache.push_back(next);
    next -= 2;
  }
  return cache[i];
}
}  // namespace zp

// ============================================================
// Bi
// ============================================================

void Bi::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Bi Bi::from_unipoly_in_a(const UniPoly& f) {
  std::vector<UniPoly> c;
  c.reserve(static_cast<std::size_t>(f.degree() + 1));
  for (int i = 0; i <= f.degree(); ++i) c.push_back(UniPoly::constant(f.coeff(i)));
  return Bi(std::move(c));
}

int Bi::max_deg_u() const {
  int d = -1;
  for (const auto& f : c_) d = std::max(d, f.degree());
  return d;
}

UniPoly Bi::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return UniPoly();
  return c_[static_cast<std::size_t>(i)];
}

Bi Bi::operator-() const {
  Bi r = *this;
  for (auto& f : r.c_) f = -f;
  return r;
}

Bi operator+(Bi x, const Bi& y) {
  if (x.c_.size() < y.c_.size()) x.c_.resize(y.c_.size());
  for (std::size_t i = 0; i < y.c_.size(); ++i) x.c_[i] += y.c_[i];
  x.trim();
  return x;
}

Bi operator-(Bi x, const Bi& y) {
  if (x.c_.size() < y.c_.size()) x.c_.resize(y.c_.size());
  for (std::size_t i = 0; i < y.c_.size(); ++i) x.c_[i] -= y.c_[i];
  x.trim();
  return x;
}

Bi operator*(const Bi& x, const Bi& y) {
  if (x.is_zero() || y.is_zero()) return Bi();
  std::vector<UniPoly> out(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) out[i + j] += x.c_[i] * y.c_[j];
  }
  return Bi(std::move(out));
}

Bi Bi::operator*(const UniPoly& s) const {
  Bi r = *this;
  for (auto& f : r.c_) f *= s;
  r.trim();
  return r;
}

Bi Bi::derivative_a() const {
  if (c_.size() <= 1) return Bi();
  std::vector<UniPoly> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rat(static_cast<int>(i));
  return Bi(std::move(out));
}

Bi Bi::derivative_u() const {
  std::vector<UniPoly> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].derivative();
  return Bi(std::move(out));
}

UniPoly Bi::eval_a(const Rat& a) const {
  UniPoly acc;
  for (int i = deg_a(); i >= 0; --i) acc = acc * UniPoly::constant(a) + c_[static_cast<std::size_t>(i)];
  return acc;
}

UniPoly Bi::eval_u(const Rat& u) const {
  std::vector<Rat> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].eval(u);
  return UniPoly(std::move(out));
}

KPoly Bi::eval_u_nf(const NFElem& t) const {
  std::vector<NFElem> out;
  out.reserve(c_.size());
  for (const auto& f : c_) out.push_back(eval_poly(f, t));
  return KPoly(std::move(out));
}

Rat Bi::eval(const Rat& u, const Rat& a) const {
  Rat acc = 0;
  for (int i = deg_a(); i >= 0; --i) acc = acc * a + c_[static_cast<std::size_t>(i)].eval(u);
  return acc;
}

UniPoly Bi::content_u() const {
  UniPoly g;
  for (const auto& f : c_) {
    g = gcd(g, f);
    if (g.degree() == 0) break;
  }
  return g;
}

std::string Bi::str(const std::string& ua, const std::string& av) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg_a(); i >= 0; --i) {
    if (c_[static_cast<std::size_t>(i)].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c_[static_cast<std::size_t>(i)].str(ua) << ")";
    if (i > 0) os << "*" << av << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return os.str();
}

// ============================================================
// Tri
// ============================================================

void Tri::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Tri::max_deg_a() const {
  int d = -1;
  for (const auto& f : c_) d = std::max(d, f.deg_a());
  return d;
}

int Tri::max_deg_u() const {
  int d = -1;
  for (const auto& f : c_) d = std::max(d, f.max_deg_u());
  return d;
}

Bi Tri::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Bi();
  return c_[static_cast<std::size_t>(i)];
}

Tri Tri::operator-() const {
  Tri r = *this;
  for (auto& f : r.c_) f = -f;
  return r;
}

Tri operator+(Tri x, const Tri& y) {
  if (x.c_.size() < y.c_.size()) x.c_.resize(y.c_.size());
  for (std::size_t i = 0; i < y.c_.size(); ++i) x.c_[i] = x.c_[i] + y.c_[i];
  x.trim();
  return x;
}

Tri operator-(Tri x, const Tri& y) {
  if (x.c_.size() < y.c_.size()) x.c_.resize(y.c_.size());
  for (std::size_t i = 0; i < y.c_.size(); ++i) x.c_[i] = x.c_[i] - y.c_[i];
  x.trim();
  return x;
}

Tri operator*(const Tri& x, const Tri& y) {
  if (x.is_zero() || y.is_zero()) return Tri();
  std::vector<Bi> out(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) out[i + j] = out[i + j] + x.c_[i] * y.c_[j];
  }
  return Tri(std::move(out));
}

Tri Tri::derivative_b() const {
  if (c_.size() <= 1) return Tri();
  std::vector<Bi> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    out[i - 1] = c_[i] * UniPoly::constant(Rat(static_cast<int>(i)));
  return Tri(std::move(out));
}

Tri Tri::derivative_a() const {
  std::vector<Bi> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].derivative_a();
  return Tri(std::move(out));
}

Tri Tri::derivative_u() const {
  std::vector<Bi> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].derivative_u();
  return Tri(std::move(out));
}

Bi Tri::eval_b(const Rat& b) const {
  Bi acc;
  Bi bval = Bi::constant(UniPoly::constant(b));
  for (int i = deg_b(); i >= 0; --i) acc = acc * bval + c_[static_cast<std::size_t>(i)];
  return acc;
}

Rat Tri::eval(const Rat& u, const Rat& a, const Rat& b) const {
  Rat acc = 0;
  for (int i = deg_b(); i >= 0; --i) acc = acc * b + c_[static_cast<std::size_t>(i)].eval(u, a);
  return acc;
}

std::vector<KPoly> Tri::eval_u_nf(const NFElem& t) const {
  std::vector<KPoly> out;
  out.reserve(c_.size());
  for (const auto& f : c_) out.push_back(f.eval_u_nf(t));
  return out;
}

// ============================================================
// Determinants and interpolation
// ============================================================

Rat det_rat(std::vector<std::vector<Rat>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  // clear rows to integers
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Rat scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < n; ++j) {
      Int d = denom(m[i][j]);
      l = l / int_gcd(l, d) * d;
    }
    for (std::size_t j = 0; j < n; ++j) a[i][j] = numer(m[i][j]) * (l / denom(m[i][j]));
    scale *= Rat(1, l);
  }
  // Bareiss
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num / prev;  // exact
      }
    prev = a[k][k];
  }
  return Rat(sign * a[n - 1][n - 1]) * scale;
}

UniPoly interpolate_q(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  std::size_t n = xs.size();
  std::vector<Rat> dd = ys;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
      if (i == k) break;
    }
  UniPoly acc;
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * UniPoly{-xs[i], Rat(1)};
    acc += UniPoly::constant(dd[i]);
  }
  return acc;
}

namespace {

Bi interpolate_bi(const std::vector<Rat>& xs, std::vector<UniPoly> ys) {
  std::size_t n = xs.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k]);
      if (i == k) break;
    }
  Bi acc;
  for (std::size_t i = n; i-- > 0;) {
    // acc = acc*(a - x_i) + dd_i
    Bi lin(std::vector<UniPoly>{UniPoly::constant(-xs[i]), UniPoly::constant(1)});
    acc = acc * lin + Bi::constant(ys[i]);
  }
  return acc;
}

UniPoly unipoly_pow(const UniPoly& f, int e) {
  return f.pow(static_cast<unsigned>(e));
}

}  // namespace

// ============================================================
// Resultants
// ============================================================

Rat resultant_q(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  int m = f.degree(), n = g.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) return rat_pow(f.coeff(0), n);
  if (n == 0) return rat_pow(g.coeff(0), m);
  std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size, Rat(0)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = f.coeff(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = g.coeff(n - j);
  return det_rat(std::move(s));
}

UniPoly resultant_a_sylvester(const Bi& f, const Bi& g) {
  if (f.is_zero() || g.is_zero()) return UniPoly();
  int m = f.deg_a(), n = g.deg_a();
  if (m == 0 && n == 0) throw std::invalid_argument("resultant: both inputs constant in x");
  if (m == 0) return unipoly_pow(f.coeff(0), n);
  if (n == 0) return unipoly_pow(g.coeff(0), m);
  int bound = n * std::max(f.max_deg_u(), 0) + m * std::max(g.max_deg_u(), 0);
  std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<Rat> xs, ys;
  for (int pt = 0; pt <= bound; ++pt) {
    Rat u(pt);
    std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size, Rat(0)));
    for (int r = 0; r < n; ++r)
      for (int j = 0; j <= m; ++j)
        s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = f.coeff(m - j).eval(u);
    for (int r = 0; r < m; ++r)
      for (int j = 0; j <= n; ++j)
        s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = g.coeff(n - j).eval(u);
    xs.push_back(u);
    ys.push_back(det_rat(std::move(s)));
  }
  return interpolate_q(xs, ys);
}

namespace {

struct ClearedBi {
  std::vector<std::vector<Int>> coeff;  // coeff[i] = integer coefficients of a^i in u
  Rat scale;                            // cleared = scale * original
  int deg_a;
  Int l1() const {
    Int s = 0;
    for (const auto& f : coeff)
      for (const auto& c : f) s += int_abs(c);
    return s;
  }
};

ClearedBi clear_bi(const Bi& f) {
  ClearedBi out;
  out.deg_a = f.deg_a();
  Int l = 1;
  for (int i = 0; i <= f.deg_a(); ++i)
    for (int j = 0; j <= f.coeff(i).degree(); ++j) {
      Int d = denom(f.coeff(i).coeff(j));
      l = l / int_gcd(l, d) * d;
    }
  for (int i = 0; i <= f.deg_a(); ++i) {
    const UniPoly& c = f.coeff(i);
    std::vector<Int> row(static_cast<std::size_t>(c.degree() + 1));
    for (int j = 0; j <= c.degree(); ++j) {
      Rat v = c.coeff(j) * Rat(l);
      row[static_cast<std::size_t>(j)] = numer(v);  // denominator is 1 now
    }
    out.coeff.push_back(std::move(row));
  }
  // pull out the integer content to keep the CRT bound small
  Int content = 0;
  for (const auto& row : out.coeff)
    for (const auto& v : row) content = int_gcd(content, v);
  if (content > 1)
    for (auto& row : out.coeff)
      for (auto& v : row) v /= content;
  else
    content = 1;
  out.scale = make_rat(l, content);
  return out;
}

}  // namespace

UniPoly resultant_a(const Bi& f, const Bi& g) {
  if (f.is_zero() || g.is_zero()) return UniPoly();
  int m = f.deg_a(), n = g.deg_a();
  if (m == 0 && n == 0) throw std::invalid_argument("resultant: both inputs constant in x");
  if (m == 0) return unipoly_pow(f.coeff(0), n);
  if (n == 0) return unipoly_pow(g.coeff(0), m);

  ClearedBi F = clear_bi(f), G = clear_bi(g);
  int du_f = std::max(f.max_deg_u(), 0), du_g = std::max(g.max_deg_u(), 0);
  int bound_deg = n * du_f + m * du_g;
  Int bound_coeff = int_pow(F.l1(), static_cast<unsigned>(n)) *
                    int_pow(G.l1(), static_cast<unsigned>(m));
  if (bound_coeff == 0) bound_coeff = 1;

  std::size_t npts = static_cast<std::size_t>(bound_deg) + 1;
  std::vector<Int> crt_coeff(npts, Int(0));
  Int crt_mod = 1;
  std::size_t prime_idx = 0;
  while (crt_mod <= 2 * bound_coeff) {
    std::uint64_t p = zp::nth_crt_prime(prime_idx++);
    if (p <= npts) throw std::runtime_error("resultant degree exceeds prime pool");
    // reduce coefficients mod p
    auto reduce = [&](const ClearedBi& x) {
      std::vector<zp::Poly> r(x.coeff.size());
      for (std::size_t i = 0; i < x.coeff.size(); ++i) {
        r[i].resize(x.coeff[i].size());
        for (std::size_t j = 0; j < x.coeff[i].size(); ++j) r[i][j] = zp::int_mod(x.coeff[i][j], p);
      }
      return r;
    };
    std::vector<zp::Poly> Fp = reduce(F), Gp = reduce(G);
    std::vector<std::uint64_t> values(npts);
    for (std::size_t pt = 0; pt < npts; ++pt) {
      std::uint64_t x = static_cast<std::uint64_t>(pt) % p;
      auto eval_all = [&](const std::vector<zp::Poly>& c, int nominal) {
        zp::Poly vals(static_cast<std::size_t>(nominal) + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
          std::uint64_t acc = 0;
          for (std::size_t j = c[i].size(); j-- > 0;) acc = zp::addmod(zp::mulmod(acc, x, p), c[i][j], p);
          vals[i] = acc;
        }
        return vals;
      };
      zp::Poly A = eval_all(Fp, m), B = eval_all(Gp, n);
      // nominal degrees (m, n); correct for drops at this point
      int mt = m, nt = n;
      while (mt >= 0 && A[static_cast<std::size_t>(mt)] == 0) --mt;
      while (nt >= 0 && B[static_cast<std::size_t>(nt)] == 0) --nt;
      std::uint64_t value = 0;
      if (mt < 0 || nt < 0 || (mt < m && nt < n)) {
        value = 0;
      } else {
        std::uint64_t factor = 1;
        if (mt < m) {
          // ((-1)^n * lc(B))^(m - mt)
          std::uint64_t lb = B[static_cast<std::size_t>(n)];
          std::uint64_t base = (n & 1) ? (p - lb) % p : lb;
          factor = zp::powmod(base, static_cast<std::uint64_t>(m - mt), p);
        } else if (nt < n) {
          std::uint64_t la = A[static_cast<std::size_t>(m)];
          factor = zp::powmod(la, static_cast<std::uint64_t>(n - nt), p);
        }
        zp::Poly At(A.begin(), A.begin() + mt + 1);
        zp::Poly Bt(B.begin(), B.begin() + nt + 1);
        value = zp::mulmod(factor, zp::resultant(std::move(At), std::move(Bt), p), p);
      }
      values[pt] = value;
    }
    zp::Poly interp = zp::interpolate(values, p);
    interp.resize(npts, 0);
    if (crt_mod == 1) {
      for (std::size_t i = 0; i < npts; ++i) crt_coeff[i] = Int(interp[i]);
      crt_mod = Int(p);
    } else {
      Int p_int(p);
      std::uint64_t minv = zp::invmod(zp::int_mod(crt_mod, p), p);
      for (std::size_t i = 0; i < npts; ++i) {
        std::uint64_t cur = zp::int_mod(crt_coeff[i], p);
        std::uint64_t delta = zp::mulmod(zp::submod(interp[i], cur, p), minv, p);
        crt_coeff[i] += crt_mod * Int(delta);
      }
      crt_mod *= p_int;
    }
  }
  // symmetric lift and undo scaling
  Int half = crt_mod / 2;
  Rat unscale = Rat(1) / (rat_pow(F.scale, n) * rat_pow(G.scale, m));
  std::vector<Rat> out(npts);
  for (std::size_t i = 0; i < npts; ++i) {
    Int c = crt_coeff[i];
    if (c > half) c -= crt_mod;
    out[i] = Rat(c) * unscale;
  }
  return UniPoly(std::move(out));
}

Bi resultant_b(const Tri& f, const Tri& g) {
  if (f.is_zero() || g.is_zero()) return Bi();
  int m = f.deg_b(), n = g.deg_b();
  if (m == 0 && n == 0) throw std::invalid_argument("resultant: both inputs constant in b");
  auto bi_pow = [](const Bi& base, int e) {
    Bi r = Bi::constant(UniPoly::constant(1));
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
  };
  if (m == 0) return bi_pow(f.coeff(0), n);
  if (n == 0) return bi_pow(g.coeff(0), m);

  int bu = n * std::max(f.max_deg_u(), 0) + m * std::max(g.max_deg_u(), 0);
  int ba = n * std::max(f.max_deg_a(), 0) + m * std::max(g.max_deg_a(), 0);
  std::size_t size = static_cast<std::size_t>(m + n);
  // fixed Sylvester structure with Bi entries
  std::vector<std::vector<Bi>> s(size, std::vector<Bi>(size));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = f.coeff(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = g.coeff(n - j);

  std::vector<Rat> a_nodes;
  std::vector<UniPoly> a_values;
  for (int aj = 0; aj <= ba; ++aj) {
    Rat a(aj);
    // evaluate entries at a, leaving Q[u]
    std::vector<std::vector<UniPoly>> su(size, std::vector<UniPoly>(size));
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) su[i][j] = s[i][j].eval_a(a);
    std::vector<Rat> xs, ys;
    for (int ui = 0; ui <= bu; ++ui) {
      Rat u(ui);
      std::vector<std::vector<Rat>> sq(size, std::vector<Rat>(size));
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) sq[i][j] = su[i][j].eval(u);
      xs.push_back(u);
      ys.push_back(det_rat(std::move(sq)));
    }
    a_nodes.push_back(a);
    a_values.push_back(interpolate_q(xs, ys));
  }
  return interpolate_bi(a_nodes, std::move(a_values));
}

}  // namespace fibforge
