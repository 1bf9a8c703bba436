#include "fibforge/rat.hpp"

#include <cctype>

namespace fibforge {

Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Int int_pow(Int base, unsigned e) {
  Int r = 1;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

Rat rat_pow(const Rat& base, int e) {
  if (e < 0) {
    Rat inv = Rat(1) / base;
    return rat_pow(inv, -e);
  }
  Rat r = 1, b = base;
  unsigned k = static_cast<unsigned>(e);
  while (k) {
    if (k & 1u) r *= b;
    b *= b;
    k >>= 1u;
  }
  return r;
}

std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  auto digits = [&](Int& out) -> bool {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    out = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      out = out * 10 + (s[i] - '0');
      ++i;
    }
    return true;
  };
  Int num;
  if (!digits(num)) return std::nullopt;
  Int den = 1;
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (!digits(den) || den == 0) return std::nullopt;
  } else if (i < s.size() && s[i] == '.') {
    ++i;
    std::size_t start = i;
    Int frac = 0;
    if (!digits(frac)) return std::nullopt;
    std::size_t places = i - start;
    for (std::size_t k = 0; k < places; ++k) den *= 10;
    num = num * den + frac * 1;
  }
  if (i != s.size()) return std::nullopt;
  Rat r(num, den);
  return neg ? Rat(-r) : r;
}

std::string rat_str(const Rat& r) {
  Int n = numer(r), d = denom(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

}  // namespace fibforge
