// Elimination utilities: closed points of P^1, sound chain eliminants for
// systems in (u, a, b), and fiber-wise common-zero extraction over number
// fields.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibforge/factor.hpp"
#include "fibforge/polyres.hpp"

namespace fibforge {

// A closed point of the base line: a monic irreducible factor in the chart-0
// coordinate, or the point at infinity.
struct BasePoint {
  bool at_infinity = false;
  UniPoly min_poly;  // monic irreducible, ignored when at_infinity

  static BasePoint infinity();
  static BasePoint rational(const Rat& value);
  static BasePoint factor(const UniPoly& monic_irreducible);

  int field_degree() const { return at_infinity ? 1 : min_poly.degree(); }
  bool is_rational() const { return at_infinity || min_poly.degree() == 1; }
  Rat rational_value() const;  // finite rational points only
  NumberFieldPtr field() const;
  NFElem element() const;  // the point's chart coordinate as a field element
  std::string str() const;
  bool operator==(const BasePoint& o) const;
  bool operator<(const BasePoint& o) const;
};

// Sound u-eliminant: pairwise resultants eliminating b then a, gcd of the
// univariate outcomes. Every common zero of the system projects to a root;
// the zero polynomial signals that every chain collapsed (the common-zero
// locus may be positive-dimensional over the base).
UniPoly chain_eliminant_u(const std::vector<Tri>& sys);

// Common zeros with coordinates in K of a system over K[a][b], assuming the
// solution set in the fiber is finite. Returns nullopt when a non-isolated
// (positive-dimensional) fiber locus is detected. Solutions whose
// coordinates need a proper extension of K are reported in `needs_extension`
// (their count, not their values).
struct FiberZeros {
  std::vector<std::array<NFElem, 2>> points;
  int needs_extension = 0;
};
std::optional<FiberZeros> fiber_common_zeros(const std::vector<std::vector<KPoly>>& sys,
                                             const NFElem& sample);

// Evaluate a Tri at u = t over K, giving the system form used above.
std::vector<KPoly> tri_at_point(const Tri& f, const NFElem& t);

// Full evaluation over a number field.
NFElem tri_eval_nf(const Tri& f, const NFElem& u, const NFElem& a, const NFElem& b);

// Substitute u := s - lam*a - mu*b; the returned Tri's polynomial slot holds s.
Tri substitute_u_linear(const Tri& f, const Rat& lam, const Rat& mu);

// Common zeros of a finite-solution system in (u, a, b) over Q. Each group
// is one closed point: a field Q[s]/(h) generated by a primitive linear form
// of the coordinates, with the coordinates expressed in it. Solutions are
// verified against the input system before being reported.
struct PointGroup {
  NumberFieldPtr field;
  NFElem u, a, b;
};
struct ZeroDimResult {
  bool positive_dimensional = false;  // eliminant collapse or fiber line
  bool failed = false;                // no primitive form separated the points
  std::vector<PointGroup> groups;
};
ZeroDimResult solve_zero_dim(const std::vector<Tri>& sys);

}  // namespace fibforge
