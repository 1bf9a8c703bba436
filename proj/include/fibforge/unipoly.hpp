// Dense univariate polynomials over the rationals.
#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fibforge/rat.hpp"

namespace fibforge {

// Coefficient vector indexed by monomial degree; no trailing zeros, so the
// zero polynomial has an empty vector and degree() == -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(Rat a);
  static UniPoly monomial(int degree, Rat a);
  // u - a and u respectively
  static UniPoly linear_root(const Rat& a);
  static UniPoly var();

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& leading() const;
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly operator*(const Rat& s) const;
  UniPoly operator/(const Rat& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  // Euclidean division; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
  bool divides(const UniPoly& a) const;  // *this | a

  UniPoly derivative() const;
  Rat eval(const Rat& x) const;
  template <class F>
  F eval_at(const F& x, const F& one) const {
    F acc = one - one;  // zero in the target field
    for (int i = degree(); i >= 0; --i) acc = acc * x + one * coeff(i);
    return acc;
  }
  UniPoly pow(unsigned e) const;
  // u -> u + a
  UniPoly shift(const Rat& a) const;
  // Coefficient reversal with respect to a degree bound n >= degree():
  // returns u^n * f(1/u).
  UniPoly reverse(int n) const;
  UniPoly monic() const;

  // Smallest positive rational c with c*f having coprime integer
  // coefficients; pulls the polynomial onto a primitive integer form.
  std::pair<std::vector<Int>, Rat> primitive_int() const;

  std::string str(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic unless both zero

}  // namespace fibforge
