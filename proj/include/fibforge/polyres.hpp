// Bivariate and trivariate polynomial layers over Q[u] plus the resultant
// machinery used for elimination (Sylvester determinants, modular CRT).
#pragma once

#include <string>
#include <vector>

#include "fibforge/fpoly.hpp"
#include "fibforge/nfelem.hpp"
#include "fibforge/unipoly.hpp"

namespace fibforge {

using KPoly = FPoly<NFElem>;

// Polynomials in a variable `a` with Q[u] coefficients.
class Bi {
 public:
  Bi() = default;
  explicit Bi(std::vector<UniPoly> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Bi from_unipoly_in_a(const UniPoly& f);  // Q[a] viewed inside Q[u][a]
  static Bi constant(UniPoly f) { return Bi(std::vector<UniPoly>{std::move(f)}); }

  bool is_zero() const { return c_.empty(); }
  int deg_a() const { return static_cast<int>(c_.size()) - 1; }
  int max_deg_u() const;
  UniPoly coeff(int i) const;
  const std::vector<UniPoly>& coeffs() const { return c_; }

  Bi operator-() const;
  friend Bi operator+(Bi x, const Bi& y);
  friend Bi operator-(Bi x, const Bi& y);
  friend Bi operator*(const Bi& x, const Bi& y);
  Bi operator*(const UniPoly& s) const;
  bool operator==(const Bi& o) const { return c_ == o.c_; }

  Bi derivative_a() const;
  Bi derivative_u() const;
  UniPoly eval_a(const Rat& a) const;   // result in Q[u]
  UniPoly eval_u(const Rat& u) const;   // result in Q[a]
  KPoly eval_u_nf(const NFElem& t) const;  // result in K[a]
  Rat eval(const Rat& u, const Rat& a) const;
  UniPoly content_u() const;  // monic gcd of the coefficients
  std::string str(const std::string& ua = "u", const std::string& av = "a") const;

 private:
  void trim();
  std::vector<UniPoly> c_;
};

// Polynomials in a variable `b` with Bi coefficients.
class Tri {
 public:
  Tri() = default;
  explicit Tri(std::vector<Bi> coeffs) : c_(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c_.empty(); }
  int deg_b() const { return static_cast<int>(c_.size()) - 1; }
  int max_deg_a() const;
  int max_deg_u() const;
  Bi coeff(int i) const;
  const std::vector<Bi>& coeffs() const { return c_; }

  Tri operator-() const;
  friend Tri operator+(Tri x, const Tri& y);
  friend Tri operator-(Tri x, const Tri& y);
  friend Tri operator*(const Tri& x, const Tri& y);
  bool operator==(const Tri& o) const { return c_ == o.c_; }

  Tri derivative_b() const;
  Tri derivative_a() const;
  Tri derivative_u() const;
  Bi eval_b(const Rat& b) const;  // substitute b, keep (u, a)
  Rat eval(const Rat& u, const Rat& a, const Rat& b) const;
  // substitute u = t over a number field: K[a][b] as FPoly in b over K[a]
  std::vector<KPoly> eval_u_nf(const NFElem& t) const;

 private:
  void trim();
  std::vector<Bi> c_;
};

// Fraction-free determinant of a rational matrix.
Rat det_rat(std::vector<std::vector<Rat>> m);

// Resultant of two univariate rational polynomials (true degrees).
Rat resultant_q(const UniPoly& f, const UniPoly& g);

// Sylvester resultant eliminating `a`, nominal degrees fixed by the inputs;
// computed by Chinese remaindering over word primes with per-point Euclid.
// Throws if both inputs are constant in a.
UniPoly resultant_a(const Bi& f, const Bi& g);

// Slow reference path (evaluate + interpolate the Sylvester determinant);
// used by tests to validate resultant_a.
UniPoly resultant_a_sylvester(const Bi& f, const Bi& g);

// Sylvester resultant eliminating `b` with fixed structure, by evaluating the
// Sylvester matrix on a (u, a) grid and interpolating.
Bi resultant_b(const Tri& f, const Tri& g);

// Newton interpolation at rational nodes.
UniPoly interpolate_q(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace fibforge
