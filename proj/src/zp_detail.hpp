// Word-sized prime field polynomial helpers shared by the factorization and
// modular-resultant code. Internal to src/.
#pragma once

#include <cstdint>
#include <vector>

#include "fibforge/rat.hpp"

namespace fibforge::zp {

using Poly = std::vector<std::uint64_t>;  // no trailing zeros

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  if (s >= p) s -= p;
  return s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1u) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1u;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a % p, p - 2, p); }

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline std::uint64_t int_mod(const Int& v, std::uint64_t p) {
  Int c = v % Int(p);
  if (c < 0) c += Int(p);
  return c.convert_to<std::uint64_t>();
}

// Resultant of two univariate polynomials over F_p by the Euclidean
// recurrence. Degrees are taken as given (true degrees of the inputs).
inline std::uint64_t resultant(Poly a, Poly b, std::uint64_t p) {
  if (a.empty() || b.empty()) return 0;
  std::uint64_t res = 1;
  bool negate = false;
  while (true) {
    if (deg(b) == 0) {
      res = mulmod(res, powmod(b[0], static_cast<std::uint64_t>(deg(a)), p), p);
      break;
    }
    if (deg(a) < deg(b)) {
      if ((static_cast<unsigned>(deg(a)) & 1u) && (static_cast<unsigned>(deg(b)) & 1u))
        negate = !negate;
      std::swap(a, b);
      continue;
    }
    // r = a mod b
    Poly r = a;
    std::uint64_t lb_inv = invmod(b.back(), p);
    while (deg(r) >= deg(b)) {
      std::uint64_t q = mulmod(r.back(), lb_inv, p);
      std::size_t off = r.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j)
        r[off + j] = submod(r[off + j], mulmod(q, b[j], p), p);
      trim(r);
      if (r.empty()) break;
    }
    if (r.empty()) return 0;
    // Res(a,b) = (-1)^(da*db) * lc(b)^(da-dr) * Res(b,r)
    if ((static_cast<unsigned>(deg(a)) & 1u) && (static_cast<unsigned>(deg(b)) & 1u))
      negate = !negate;
    res = mulmod(res, powmod(b.back(), static_cast<std::uint64_t>(deg(a) - deg(r)), p), p);
    a = std::move(b);
    b = std::move(r);
  }
  return negate ? (p - res) % p : res;
}

// Lagrange interpolation at nodes 0..n-1 (requires p > n).
inline Poly interpolate(const std::vector<std::uint64_t>& values, std::uint64_t p) {
  std::size_t n = values.size();
  Poly acc{};  // running result
  // Newton form: divided differences over F_p with nodes x_i = i
  std::vector<std::uint64_t> dd(values);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      std::uint64_t num = submod(dd[i], dd[i - 1], p);
      dd[i] = mulmod(num, invmod(static_cast<std::uint64_t>(k) % p, p), p);
      if (i == k) break;
    }
  // accumulate: result = dd[n-1]; result = result*(x - x_i) + dd[i]
  for (std::size_t i = n; i-- > 0;) {
    // multiply acc by (x - i)
    Poly shifted(acc.size() + 1, 0);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      shifted[j + 1] = addmod(shifted[j + 1], acc[j], p);
      shifted[j] = submod(shifted[j], mulmod(acc[j], static_cast<std::uint64_t>(i) % p, p), p);
    }
    acc = std::move(shifted);
    if (acc.empty()) acc = {dd[i] % p};
    else
      acc[0] = addmod(acc[0], dd[i], p);
    trim(acc);
  }
  return acc;
}

// Primes just below 2^62 suitable for the modular resultant.
std::uint64_t nth_crt_prime(std::size_t i);

}  // namespace fibforge::zp
