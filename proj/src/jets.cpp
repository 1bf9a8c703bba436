#include "fibforge/jets.hpp"

#include <stdexcept>

namespace fibforge {

Jet2::Jet2(int trunc, const NFElem& zero_like)
    : trunc_(trunc), zero_(NFElem::zero(zero_like.field())) {
  c_.resize(static_cast<std::size_t>(trunc));
  for (int i = 0; i < trunc; ++i)
    c_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(trunc - i), zero_);
}

void Jet2::set(int i, int j, const NFElem& v) {
  if (i + j >= trunc_) return;
  c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
}

bool Jet2::is_zero() const { return order() >= trunc_; }

Jet2 Jet2::operator+(const Jet2& o) const {
  Jet2 r = *this;
  for (int i = 0; i < trunc_; ++i)
    for (int j = 0; i + j < trunc_; ++j) r.c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
        r.at(i, j) + o.at(i, j);
  return r;
}

Jet2 Jet2::operator-(const Jet2& o) const {
  Jet2 r = *this;
  for (int i = 0; i < trunc_; ++i)
    for (int j = 0; i + j < trunc_; ++j) r.c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
        r.at(i, j) - o.at(i, j);
  return r;
}

Jet2 Jet2::operator*(const Jet2& o) const {
  Jet2 r(trunc_, zero_);
  for (int i = 0; i < trunc_; ++i)
    for (int j = 0; i + j < trunc_; ++j) {
      if (FieldOps<NFElem>::is_zero(at(i, j))) continue;
      for (int k = 0; i + j + k < trunc_; ++k)
        for (int l = 0; i + j + k + l < trunc_; ++l) {
          if (FieldOps<NFElem>::is_zero(o.at(k, l))) continue;
          r.c_[static_cast<std::size_t>(i + k)][static_cast<std::size_t>(j + l)] =
              r.at(i + k, j + l) + at(i, j) * o.at(k, l);
        }
    }
  return r;
}

Jet2 Jet2::scaled(const NFElem& s) const {
  Jet2 r = *this;
  for (int i = 0; i < trunc_; ++i)
    for (int j = 0; i + j < trunc_; ++j)
      r.c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j) * s;
  return r;
}

Jet2 Jet2::inverse() const {
  if (at(0, 0).is_zero()) throw std::domain_error("inverse of a non-unit jet");
  // Newton: x -> x(2 - a x), doubling precision
  Jet2 x(trunc_, zero_);
  x.set(0, 0, at(0, 0).inverse());
  Jet2 two(trunc_, zero_);
  two.set(0, 0, NFElem::one(zero_.field()) * 2);
  int prec = 1;
  while (prec < trunc_) {
    x = x * (two - *this * x);
    prec *= 2;
  }
  return x;
}

int Jet2::order() const {
  for (int d = 0; d < trunc_; ++d)
    for (int i = 0; i <= d; ++i)
      if (!at(i, d - i).is_zero()) return d;
  return trunc_;
}

Jet2 Jet2::derivative_v() const {
  Jet2 r(trunc_, zero_);
  for (int i = 1; i < trunc_; ++i)
    for (int j = 0; i + j < trunc_; ++j) r.set(i - 1, j, at(i, j) * Rat(i));
  return r;
}

Jet2 Jet2::derivative_w() const {
  Jet2 r(trunc_, zero_);
  for (int i = 0; i < trunc_; ++i)
    for (int j = 1; i + j < trunc_; ++j) r.set(i, j - 1, at(i, j) * Rat(j));
  return r;
}

namespace {

// f as a polynomial in z with Jet2 coefficients
std::vector<Jet2> z_coefficients(const KTriPoly& f, int trunc, const NFElem& zero_like) {
  int dz = 0;
  for (const auto& [e, v] : f) {
    (void)v;
    dz = std::max(dz, e[0]);
  }
  std::vector<Jet2> out(static_cast<std::size_t>(dz) + 1, Jet2(trunc, zero_like));
  for (const auto& [e, v] : f) {
    if (e[1] + e[2] >= trunc) continue;
    out[static_cast<std::size_t>(e[0])].set(e[1], e[2], out[static_cast<std::size_t>(e[0])].at(e[1], e[2]) + v);
  }
  return out;
}

Jet2 eval_in_z(const std::vector<Jet2>& coeffs, const Jet2& phi) {
  Jet2 acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * phi + coeffs[i];
  return acc;
}

}  // namespace

Jet2 implicit_solve(const KTriPoly& f, int trunc, const NFElem& zero_like) {
  std::vector<Jet2> coeffs = z_coefficients(f, trunc, zero_like);
  if (coeffs.size() < 2) throw std::invalid_argument("implicit solve: no z dependence");
  if (!coeffs[0].at(0, 0).is_zero())
    throw std::invalid_argument("implicit solve: f(0) != 0");
  if (coeffs[1].at(0, 0).is_zero())
    throw std::invalid_argument("implicit solve: df/dz(0) = 0");
  // derivative coefficients
  std::vector<Jet2> dcoeffs;
  for (std::size_t i = 1; i < coeffs.size(); ++i) dcoeffs.push_back(coeffs[i].scaled(NFElem::one(zero_like.field()) * Rat(static_cast<long long>(i))));
  Jet2 phi(trunc, zero_like);
  int prec = 1;
  while (prec < trunc) {
    Jet2 val = eval_in_z(coeffs, phi);
    Jet2 dval = eval_in_z(dcoeffs, phi);
    phi = phi - val * dval.inverse();
    prec *= 2;
  }
  // exactness check at full truncation
  if (!eval_in_z(coeffs, phi).is_zero())
    throw std::logic_error("implicit solve failed to converge");
  return phi;
}

Jet2 substitute_z(const KTriPoly& f, const Jet2& phi) {
  std::vector<Jet2> coeffs = z_coefficients(f, phi.trunc(), phi.zero());
  return eval_in_z(coeffs, phi);
}

}  // namespace fibforge
