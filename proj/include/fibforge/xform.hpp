// Homogeneous forms in (x0, x1, x2) with Q[u] coefficients, one per base
// chart, and their dehomogenizations to the affine fiber charts.
#pragma once

#include <map>

#include "fibforge/fivetuple.hpp"
#include "fibforge/polyres.hpp"

namespace fibforge {

class XForm {
 public:
  explicit XForm(int degree) : deg_(degree) {}

  int degree() const { return deg_; }
  UniPoly coeff(const ExpTriple& t) const;
  void set_coeff(const ExpTriple& t, UniPoly c);
  void add_coeff(const ExpTriple& t, const UniPoly& c);
  bool is_zero() const;
  const std::map<ExpTriple, UniPoly>& coeffs() const { return c_; }

  XForm dx(int i) const;  // partial derivative in x_i (degree drops by one)
  XForm du() const;       // partial derivative in the chart coordinate

  // substitute x_j = 1; remaining variables a = x_{j+1 mod 3}, b = x_{j+2 mod 3}
  Tri dehom(int j) const;

  // evaluate at a projective point with coordinates in a number field,
  // base point substituted first
  NFElem eval_at(const NFElem& u, const std::array<NFElem, 3>& x) const;

  friend XForm operator*(const XForm& f, const XForm& g);

 private:
  int deg_;
  std::map<ExpTriple, UniPoly> c_;
};

// chart 0 uses section chart0 polynomials, chart 1 the chart1 ones
XForm alpha_form(const FiveTuple& t, int chart);  // degree 2
XForm beta_form(const FiveTuple& t, int chart);   // degree 4

}  // namespace fibforge
