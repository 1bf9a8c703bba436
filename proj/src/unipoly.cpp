#include "fibforge/unipoly.hpp"

#include "zp_detail.hpp"

#include <sstream>
#include <stdexcept>

namespace fibforge {

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(Rat a) {
  UniPoly p;
  if (a != 0) p.c_ = {std::move(a)};
  return p;
}

UniPoly UniPoly::monomial(int degree, Rat a) {
  UniPoly p;
  if (a != 0) {
    p.c_.assign(static_cast<std::size_t>(degree) + 1, Rat(0));
    p.c_.back() = std::move(a);
  }
  return p;
}

UniPoly UniPoly::linear_root(const Rat& a) { return UniPoly{-a, Rat(1)}; }

UniPoly UniPoly::var() { return UniPoly{Rat(0), Rat(1)}; }

const Rat& UniPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

Rat UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[static_cast<std::size_t>(i)];
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const Rat& s) const {
  if (s == 0) return UniPoly();
  UniPoly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

UniPoly UniPoly::operator/(const Rat& s) const {
  if (s == 0) throw std::invalid_argument("division by zero scalar");
  UniPoly r = *this;
  for (auto& x : r.c_) x /= s;
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rat> rem = a.c_;
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
  const Rat& lb = b.leading();
  for (int i = a.degree(); i >= b.degree(); --i) {
    Rat q = rem[static_cast<std::size_t>(i)] / lb;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(i - b.degree())] = q;
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<std::size_t>(i - b.degree() + j)] -= q * b.c_[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

bool UniPoly::divides(const UniPoly& a) const {
  if (is_zero()) return a.is_zero();
  return divrem(a, *this).second.is_zero();
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rat(static_cast<int>(i));
  return UniPoly(std::move(out));
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
  return acc;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly r = UniPoly::constant(1), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    if (e >>= 1u) b *= b;
  }
  return r;
}

UniPoly UniPoly::shift(const Rat& a) const {
  // Horner in (u + a)
  UniPoly acc;
  UniPoly lin{a, Rat(1)};
  for (int i = degree(); i >= 0; --i) {
    acc = acc * lin;
    acc += UniPoly::constant(c_[static_cast<std::size_t>(i)]);
  }
  return acc;
}

UniPoly UniPoly::reverse(int n) const {
  if (is_zero()) return UniPoly();
  if (n < degree()) throw std::invalid_argument("reverse bound below degree");
  std::vector<Rat> out(static_cast<std::size_t>(n) + 1, Rat(0));
  for (int i = 0; i <= degree(); ++i) out[static_cast<std::size_t>(n - i)] = c_[static_cast<std::size_t>(i)];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return UniPoly();
  return *this / leading();
}

std::pair<std::vector<Int>, Rat> UniPoly::primitive_int() const {
  if (is_zero()) return {{}, Rat(1)};
  Int den_lcm = 1;
  for (const auto& x : c_) {
    Int d = denom(x);
    den_lcm = den_lcm / int_gcd(den_lcm, d) * d;
  }
  std::vector<Int> ints(c_.size());
  Int content = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    ints[i] = numer(c_[i]) * (den_lcm / denom(c_[i]));
    content = int_gcd(content, ints[i]);
  }
  if (content == 0) content = 1;
  for (auto& v : ints) v /= content;
  return {std::move(ints), Rat(den_lcm, content)};
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat a = coeff(i);
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    Rat mag = rat_abs(a);
    if (i == 0 || mag != 1) {
      os << rat_str(mag);
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

namespace {

bool z_divides(const std::vector<Int>& f, const std::vector<Int>& d) {
  // exact division test over Q is enough here: both primitive
  std::vector<Rat> rem(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) rem[i] = Rat(f[i]);
  int df = static_cast<int>(f.size()) - 1, dd = static_cast<int>(d.size()) - 1;
  Rat lead(d.back());
  for (int i = df; i >= dd; --i) {
    Rat q = rem[static_cast<std::size_t>(i)] / lead;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= q * Rat(d[static_cast<std::size_t>(j)]);
  }
  for (int i = 0; i < dd; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

// Brown's modular gcd for primitive integer polynomials: gcd images modulo
// word primes, Chinese remaindering, and a final exact divisibility check.
std::vector<Int> modular_gcd_z(const std::vector<Int>& f, const std::vector<Int>& g) {
  using zp::mulmod;
  Int lead_gcd = int_gcd(f.back(), g.back());
  Int modulus = 0;
  int best_deg = 1 << 29;
  std::vector<Int> acc, prev_sym;
  auto symmetric = [](const std::vector<Int>& v, const Int& m) {
    Int half = m / 2;
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] > half ? v[i] - m : v[i];
    return out;
  };
  for (std::size_t prime_idx = 0;; ++prime_idx) {
    std::uint64_t p = zp::nth_crt_prime(prime_idx);
    if (zp::int_mod(f.back(), p) == 0 || zp::int_mod(g.back(), p) == 0) continue;
    auto to_zp = [&](const std::vector<Int>& v) {
      zp::Poly out(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) out[i] = zp::int_mod(v[i], p);
      zp::trim(out);
      return out;
    };
    zp::Poly fp = to_zp(f), gp = to_zp(g);
    // Euclid over F_p
    while (!gp.empty()) {
      std::uint64_t inv = zp::invmod(gp.back(), p);
      while (zp::deg(fp) >= zp::deg(gp)) {
        std::uint64_t q = mulmod(fp.back(), inv, p);
        std::size_t off = fp.size() - gp.size();
        for (std::size_t j = 0; j < gp.size(); ++j)
          fp[off + j] = zp::submod(fp[off + j], mulmod(q, gp[j], p), p);
        zp::trim(fp);
        if (fp.empty()) break;
      }
      std::swap(fp, gp);
    }
    if (zp::deg(fp) == 0) return {Int(1)};
    // scale the monic image by the leading-coefficient gcd
    std::uint64_t inv = zp::invmod(fp.back(), p);
    std::uint64_t scale = mulmod(zp::int_mod(lead_gcd, p), inv, p);
    for (auto& c : fp) c = mulmod(c, scale, p);
    if (zp::deg(fp) < best_deg) {
      best_deg = zp::deg(fp);
      acc.assign(fp.size(), Int(0));
      for (std::size_t i = 0; i < fp.size(); ++i) acc[i] = Int(fp[i]);
      modulus = Int(p);
      prev_sym = symmetric(acc, modulus);
      continue;
    }
    if (zp::deg(fp) > best_deg) continue;  // unlucky prime
    std::uint64_t minv = zp::invmod(zp::int_mod(modulus, p), p);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      std::uint64_t cur = zp::int_mod(acc[i], p);
      std::uint64_t delta = mulmod(zp::submod(fp[i], cur, p), minv, p);
      if (delta) acc[i] += modulus * Int(delta);
    }
    modulus *= Int(p);
    std::vector<Int> sym = symmetric(acc, modulus);
    if (sym == prev_sym) {
      // stabilized: primitive part and exact verification
      std::vector<Int> cand = sym;
      Int content = 0;
      for (const auto& c : cand) content = int_gcd(content, c);
      if (content != 0) {
        for (auto& c : cand) c /= content;
        if (cand.back() != 0 && z_divides(f, cand) && z_divides(g, cand)) return cand;
      }
    }
    prev_sym = std::move(sym);
  }
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return UniPoly::constant(1);
  auto [fa, sa] = a.primitive_int();
  auto [fb, sb] = b.primitive_int();
  (void)sa;
  (void)sb;
  std::vector<Int> d = modular_gcd_z(fa, fb);
  std::vector<Rat> coeffs(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) coeffs[i] = Rat(d[i]);
  return UniPoly(std::move(coeffs)).monic();
}

}  // namespace fibforge
