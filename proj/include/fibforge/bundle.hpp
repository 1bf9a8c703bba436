// Split bundles on P^1: degree bookkeeping, cohomology, two-chart sections,
// and the line-bundle degree ledger.
#pragma once

#include <vector>

#include "fibforge/nfelem.hpp"
#include "fibforge/unipoly.hpp"

namespace fibforge {

// A direct sum of line bundles O(d_0) + ... + O(d_{r-1}), degrees sorted.
class SplitBundle {
 public:
  explicit SplitBundle(std::vector<int> degrees);

  const std::vector<int>& degrees() const { return d_; }
  int rank() const { return static_cast<int>(d_.size()); }
  long long degree() const;

 private:
  std::vector<int> d_;
};

SplitBundle sym_power(const SplitBundle& bundle, int n);

// Cohomology of O(n) on P^1.
int h0(int n);
int h1(int n);

// A global section of O(n) on both standard charts. chart1(v) = v^n chart0(1/v).
class Section {
 public:
  Section() : n_(-1) {}  // zero section of a negative-degree bundle
  Section(int bundle_degree, UniPoly chart0);

  int bundle_degree() const { return n_; }
  const UniPoly& chart0() const { return c0_; }
  const UniPoly& chart1() const { return c1_; }
  bool is_zero() const { return c0_.is_zero(); }

  Section operator+(const Section& o) const;  // same bundle degree
  Section operator-() const;
  Section operator*(const Rat& s) const;
  // product lands in O(n1 + n2)
  friend Section operator*(const Section& a, const Section& b);
  bool operator==(const Section& o) const { return n_ == o.n_ && c0_ == o.c0_; }

  Rat eval_chart0(const Rat& u) const { return c0_.eval(u); }
  Rat eval_infinity() const { return c0_.coeff(n_); }

 private:
  int n_;
  UniPoly c0_, c1_;
};

// Named line-bundle degrees attached to (d, e0). The kernel line bundle L has
// degree e0; V2m is the odd weight-2 eigensheaf, M = det(V1) - L as degrees.
struct LineLedger {
  int e0 = 0;
  long long sum_d = 0;
  long long deg_L = 0;
  long long deg_detV1 = 0;
  long long deg_M = 0;
  long long deg_V2minus = 0;
  long long deg_V2plus = 0;
};

LineLedger ledger(int d0, int d1, int d2, int e0);

}  // namespace fibforge
