#include "fibforge/bundle.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibforge {

SplitBundle::SplitBundle(std::vector<int> degrees) : d_(std::move(degrees)) {
  if (d_.empty()) throw std::invalid_argument("bundle needs rank >= 1");
  std::sort(d_.begin(), d_.end());
}

long long SplitBundle::degree() const {
  long long s = 0;
  for (int d : d_) s += d;
  return s;
}

SplitBundle sym_power(const SplitBundle& bundle, int n) {
  if (n < 1) throw std::invalid_argument("sym power needs n >= 1");
  // multisets of size n from the degree list, by nondecreasing index chains
  std::vector<int> out;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  int r = bundle.rank();
  for (;;) {
    int sum = 0;
    for (int i : idx) sum += bundle.degrees()[static_cast<std::size_t>(i)];
    out.push_back(sum);
    int pos = n - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == r - 1) --pos;
    if (pos < 0) break;
    int v = ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < n; ++j) idx[static_cast<std::size_t>(j)] = v;
  }
  return SplitBundle(std::move(out));
}

int h0(int n) { return std::max(n + 1, 0); }
int h1(int n) { return std::max(-n - 1, 0); }

Section::Section(int bundle_degree, UniPoly chart0) : n_(bundle_degree), c0_(std::move(chart0)) {
  if (n_ < 0 && !c0_.is_zero())
    throw std::invalid_argument("negative-degree bundle admits only the zero section");
  if (c0_.degree() > n_) throw std::invalid_argument("section exceeds bundle degree");
  if (!c0_.is_zero()) c1_ = c0_.reverse(n_);
}

Section Section::operator+(const Section& o) const {
  if (n_ != o.n_ && !is_zero() && !o.is_zero())
    throw std::invalid_argument("adding sections of different bundles");
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  return Section(n_, c0_ + o.c0_);
}

Section Section::operator-() const {
  if (is_zero()) return *this;
  return Section(n_, -c0_);
}

Section Section::operator*(const Rat& s) const {
  if (is_zero() || s == 0) return Section(n_, UniPoly());
  return Section(n_, c0_ * s);
}

Section operator*(const Section& a, const Section& b) {
  if (a.is_zero() || b.is_zero()) {
    int n = a.n_ + b.n_;
    return Section(n < 0 ? -1 : n, UniPoly());
  }
  return Section(a.n_ + b.n_, a.c0_ * b.c0_);
}

LineLedger ledger(int d0, int d1, int d2, int e0) {
  LineLedger l;
  l.e0 = e0;
  l.sum_d = static_cast<long long>(d0) + d1 + d2;
  l.deg_L = e0;
  l.deg_detV1 = l.sum_d;
  l.deg_M = l.sum_d - e0;
  l.deg_V2minus = l.sum_d - e0;
  l.deg_V2plus = 4 * l.sum_d - e0;
  // consistency: deg V2+ + deg L = deg Sym^2 V1, and V2- matches M
  if (l.deg_V2plus + l.deg_L != 4 * l.sum_d) throw std::logic_error("ledger identity violated");
  if (l.deg_V2minus != l.deg_detV1 - l.deg_L) throw std::logic_error("ledger identity violated");
  return l;
}

}  // namespace fibforge
