// The rational function field Q(u): normalized fractions of UniPoly.
#pragma once

#include "fibforge/linalg.hpp"
#include "fibforge/unipoly.hpp"

namespace fibforge {

class RatFunc {
 public:
  RatFunc() : num_(), den_(UniPoly::constant(1)) {}
  explicit RatFunc(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(1)) {}
  RatFunc(UniPoly num, UniPoly den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  RatFunc inverse() const;
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

 private:
  void normalize();
  UniPoly num_, den_;  // den monic, gcd(num, den) = 1
};

template <>
struct FieldOps<RatFunc> {
  static RatFunc zero(const RatFunc&) { return RatFunc(); }
  static RatFunc one(const RatFunc&) { return RatFunc(UniPoly::constant(1)); }
  static bool is_zero(const RatFunc& x) { return x.is_zero(); }
  static RatFunc inv(const RatFunc& x) { return x.inverse(); }
};

}  // namespace fibforge
