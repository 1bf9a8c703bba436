// Dense univariate polynomials over a generic exact field.
#pragma once

#include <vector>

#include "fibforge/linalg.hpp"

namespace fibforge {

template <class F>
class FPoly {
 public:
  FPoly() = default;
  explicit FPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  static FPoly constant(const F& a) {
    FPoly p;
    if (!FieldOps<F>::is_zero(a)) p.c_ = {a};
    return p;
  }
  static FPoly monomial(int degree, const F& a) {
    FPoly p;
    if (!FieldOps<F>::is_zero(a)) {
      p.c_.assign(static_cast<std::size_t>(degree) + 1, FieldOps<F>::zero(a));
      p.c_.back() = a;
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const F& leading() const { return c_.back(); }
  F coeff(int i, const F& zero_like) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return FieldOps<F>::zero(zero_like);
    return c_[static_cast<std::size_t>(i)];
  }
  const std::vector<F>& coeffs() const { return c_; }

  FPoly operator-() const {
    FPoly r = *this;
    for (auto& x : r.c_) x = FieldOps<F>::zero(x) - x;
    return r;
  }
  friend FPoly operator+(FPoly a, const FPoly& b) {
    if (a.c_.size() < b.c_.size()) a.c_.resize(b.c_.size(), FieldOps<F>::zero(b.c_[0]));
    for (std::size_t i = 0; i < b.c_.size(); ++i) a.c_[i] = a.c_[i] + b.c_[i];
    a.trim();
    return a;
  }
  friend FPoly operator-(FPoly a, const FPoly& b) {
    if (a.c_.size() < b.c_.size()) a.c_.resize(b.c_.size(), FieldOps<F>::zero(b.c_[0]));
    for (std::size_t i = 0; i < b.c_.size(); ++i) a.c_[i] = a.c_[i] - b.c_[i];
    a.trim();
    return a;
  }
  friend FPoly operator*(const FPoly& a, const FPoly& b) {
    if (a.is_zero() || b.is_zero()) return FPoly();
    F z = FieldOps<F>::zero(a.c_[0]);
    std::vector<F> out(a.c_.size() + b.c_.size() - 1, z);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (FieldOps<F>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return FPoly(std::move(out));
  }
  FPoly scaled(const F& s) const {
    FPoly r = *this;
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
  }

  static std::pair<FPoly, FPoly> divrem(const FPoly& a, const FPoly& b) {
    FPoly rem = a;
    if (a.degree() < b.degree()) return {FPoly(), rem};
    F z = FieldOps<F>::zero(b.leading());
    std::vector<F> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, z);
    F lb_inv = FieldOps<F>::inv(b.leading());
    while (rem.degree() >= b.degree()) {
      F q = rem.leading() * lb_inv;
      int off = rem.degree() - b.degree();
      quo[static_cast<std::size_t>(off)] = q;
      for (int j = 0; j <= b.degree(); ++j)
        rem.c_[static_cast<std::size_t>(off + j)] =
            rem.c_[static_cast<std::size_t>(off + j)] - q * b.c_[static_cast<std::size_t>(j)];
      rem.trim();
      if (rem.is_zero()) break;
    }
    return {FPoly(std::move(quo)), rem};
  }

  FPoly monic() const {
    if (is_zero()) return *this;
    return scaled(FieldOps<F>::inv(leading()));
  }
  FPoly derivative() const {
    if (c_.size() <= 1) return FPoly();
    F one = FieldOps<F>::one(c_[0]);
    std::vector<F> out;
    out.reserve(c_.size() - 1);
    F k = one;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      out.push_back(c_[i] * k);
      k = k + one;
    }
    FPoly r(std::move(out));
    return r;
  }
  F eval(const F& x) const {
    F acc = FieldOps<F>::zero(x);
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && FieldOps<F>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
FPoly<F> fpoly_gcd(FPoly<F> a, FPoly<F> b) {
  while (!b.is_zero()) {
    FPoly<F> r = FPoly<F>::divrem(a, b).second;
    a = b.monic();
    b = r.is_zero() ? r : r.monic();
  }
  return a.is_zero() ? a : a.monic();
}

// Resultant over a field by the Euclidean recurrence (true degrees).
template <class F>
F fpoly_resultant(FPoly<F> a, FPoly<F> b, const F& one) {
  F zero = FieldOps<F>::zero(one);
  if (a.is_zero() || b.is_zero()) return zero;
  F res = one;
  bool negate = false;
  for (;;) {
    if (b.degree() == 0) {
      F lb = b.leading(), acc = one;
      for (int i = 0; i < a.degree(); ++i) acc = acc * lb;
      res = res * acc;
      break;
    }
    if (a.degree() < b.degree()) {
      if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
      std::swap(a, b);
      continue;
    }
    FPoly<F> r = FPoly<F>::divrem(a, b).second;
    if (r.is_zero()) return zero;
    if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
    F lb = b.leading(), acc = one;
    for (int i = 0; i < a.degree() - r.degree(); ++i) acc = acc * lb;
    res = res * acc;
    a = b;
    b = r;
  }
  return negate ? zero - res : res;
}

}  // namespace fibforge
