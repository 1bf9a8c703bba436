// Truncated bivariate power series over a number field, with the implicit
// solve used to restrict divisors to local coordinates on the conic.
#pragma once

#include <array>
#include <map>
#include <vector>

#include "fibforge/linalg.hpp"
#include "fibforge/nfelem.hpp"

namespace fibforge {

// Coefficients c[i][j] of v^i w^j, kept for i + j < trunc.
class Jet2 {
 public:
  Jet2(int trunc, const NFElem& zero_like);

  int trunc() const { return trunc_; }
  const NFElem& at(int i, int j) const { return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  void set(int i, int j, const NFElem& v);
  bool is_zero() const;
  const NFElem& zero() const { return zero_; }

  Jet2 operator+(const Jet2& o) const;
  Jet2 operator-(const Jet2& o) const;
  Jet2 operator*(const Jet2& o) const;
  Jet2 scaled(const NFElem& s) const;
  // multiplicative inverse; constant term must be nonzero
  Jet2 inverse() const;

  // lowest total degree with a nonzero coefficient; trunc() when zero
  int order() const;
  Jet2 derivative_v() const;
  Jet2 derivative_w() const;

 private:
  int trunc_;
  NFElem zero_;
  std::vector<std::vector<NFElem>> c_;
};

// A trivariate polynomial over a number field with exponents (z, v, w),
// produced by recentering chart equations at a closed point.
using KTriPoly = std::map<std::array<int, 3>, NFElem>;

// Solve f(z, v, w) = 0 for z = phi(v, w) with phi(0,0) = 0 by Newton
// iteration; requires f(0) = 0 and df/dz(0) != 0.
Jet2 implicit_solve(const KTriPoly& f, int trunc, const NFElem& zero_like);

// Substitute z = phi into f.
Jet2 substitute_z(const KTriPoly& f, const Jet2& phi);

}  // namespace fibforge
