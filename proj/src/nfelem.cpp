#include "fibforge/nfelem.hpp"

namespace fibforge {

NumberFieldPtr trivial_field() {
  static const NumberFieldPtr f = std::make_shared<NumberField>(NumberField{UniPoly::var()});
  return f;
}

NumberFieldPtr make_field(const UniPoly& monic_irreducible) {
  if (monic_irreducible.degree() < 1 || monic_irreducible.leading() != 1)
    throw std::invalid_argument("number field modulus must be monic of positive degree");
  if (monic_irreducible.degree() == 1 && monic_irreducible.coeff(0) == 0) return trivial_field();
  return std::make_shared<NumberField>(NumberField{monic_irreducible});
}

NFElem::NFElem(NumberFieldPtr field, UniPoly value) : field_(std::move(field)) {
  value_ = UniPoly::divrem(value, field_->modulus).second;
}

NFElem NFElem::from_rat(const Rat& r) { return NFElem(trivial_field(), UniPoly::constant(r)); }

NFElem NFElem::generator(const NumberFieldPtr& f) { return NFElem(f, UniPoly::var()); }

Rat NFElem::rational_value() const {
  if (!is_rational()) throw std::logic_error("element is not rational");
  return value_.coeff(0);
}

NFElem NFElem::operator-() const {
  NFElem r = *this;
  r.value_ = -r.value_;
  return r;
}

namespace {
const NumberFieldPtr& join(const NFElem& a, const NFElem& b) {
  // rationals embed into any field; otherwise the fields must match
  if (a.field() == b.field()) return a.field();
  if (a.is_rational() && a.value().degree() <= 0) return b.field();
  if (b.is_rational() && b.value().degree() <= 0) return a.field();
  if (a.field()->modulus == b.field()->modulus) return a.field();
  throw std::logic_error("mixed number fields");
}
}  // namespace

NFElem operator+(const NFElem& a, const NFElem& b) {
  return NFElem(join(a, b), a.value() + b.value());
}

NFElem operator-(const NFElem& a, const NFElem& b) {
  return NFElem(join(a, b), a.value() - b.value());
}

NFElem operator*(const NFElem& a, const NFElem& b) {
  return NFElem(join(a, b), a.value() * b.value());
}

NFElem NFElem::operator*(const Rat& s) const { return NFElem(field_, value_ * s); }

NFElem NFElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // extended Euclid in Q[t]: s*value + t*modulus = 1
  UniPoly r0 = field_->modulus, r1 = value_;
  UniPoly s0, s1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = UniPoly::divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd, constant since modulus irreducible and value nonzero of lower degree
  if (r0.degree() != 0) throw std::logic_error("modulus not irreducible");
  return NFElem(field_, s0 / r0.coeff(0));
}

bool NFElem::operator==(const NFElem& o) const {
  if (value_.is_zero() && o.value_.is_zero()) return true;
  if (is_rational() && o.is_rational()) return value_ == o.value_;
  return field_->modulus == o.field_->modulus && value_ == o.value_;
}

NFElem eval_poly(const UniPoly& f, const NFElem& x) {
  NFElem acc = NFElem::zero(x.field());
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + NFElem(x.field(), UniPoly::constant(f.coeff(i)));
  return acc;
}

}  // namespace fibforge
