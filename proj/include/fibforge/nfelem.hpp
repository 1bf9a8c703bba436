// Arithmetic in simple extensions Q[t]/(p(t)), p monic irreducible.
#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "fibforge/unipoly.hpp"

namespace fibforge {

struct NumberField {
  UniPoly modulus;  // monic irreducible over Q
  int degree() const { return modulus.degree(); }
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

// The degree-1 field Q[t]/(t) standing in for Q itself, so callers can treat
// rational points uniformly.
NumberFieldPtr trivial_field();
NumberFieldPtr make_field(const UniPoly& monic_irreducible);

class NFElem {
 public:
  NFElem() = default;  // zero of the trivial field
  NFElem(NumberFieldPtr field, UniPoly value);

  static NFElem from_rat(const Rat& r);
  static NFElem zero(const NumberFieldPtr& f) { return NFElem(f, UniPoly()); }
  static NFElem one(const NumberFieldPtr& f) { return NFElem(f, UniPoly::constant(1)); }
  // the residue class of t
  static NFElem generator(const NumberFieldPtr& f);

  const NumberFieldPtr& field() const { return field_; }
  const UniPoly& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  bool is_rational() const { return value_.degree() <= 0; }
  Rat rational_value() const;  // requires is_rational()

  NFElem operator-() const;
  friend NFElem operator+(const NFElem& a, const NFElem& b);
  friend NFElem operator-(const NFElem& a, const NFElem& b);
  friend NFElem operator*(const NFElem& a, const NFElem& b);
  NFElem operator*(const Rat& s) const;
  NFElem inverse() const;  // throws on zero
  friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }
  bool operator==(const NFElem& o) const;
  bool operator!=(const NFElem& o) const { return !(*this == o); }

  std::string str(const std::string& var = "t") const { return value_.str(var); }

 private:
  NumberFieldPtr field_ = trivial_field();
  UniPoly value_;
};

// Evaluation of a rational-coefficient polynomial at a field element.
NFElem eval_poly(const UniPoly& f, const NFElem& x);

}  // namespace fibforge
