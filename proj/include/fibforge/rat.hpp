// Exact scalar arithmetic: arbitrary-precision integers and rationals.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace fibforge {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numer(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }
inline Int int_abs(const Int& n) { return n < 0 ? Int(-n) : n; }

// cpp_rational rejects negative denominators; normalize the sign first.
inline Rat make_rat(Int n, Int d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rat(n, d);
}

Int int_gcd(Int a, Int b);
Int int_pow(Int base, unsigned e);
Rat rat_pow(const Rat& base, int e);

// Parses "7", "-3/4" or an exact decimal such as "1.25".
std::optional<Rat> parse_rat(const std::string& s);

// Canonical text form: "n" or "n/d" with d > 1.
std::string rat_str(const Rat& r);

// Deterministic coefficient draw in [-9, 9]; avoids the
// implementation-defined std::uniform_int_distribution.
template <class Rng>
int draw_small_int(Rng& rng) {
  return static_cast<int>(rng() % 19u) - 9;
}

}  // namespace fibforge
