#include "fibforge/xform.hpp"

namespace fibforge {

UniPoly XForm::coeff(const ExpTriple& t) const {
  auto it = c_.find(t);
  return it == c_.end() ? UniPoly() : it->second;
}

void XForm::set_coeff(const ExpTriple& t, UniPoly c) {
  if (c.is_zero()) c_.erase(t);
  else
    c_[t] = std::move(c);
}

void XForm::add_coeff(const ExpTriple& t, const UniPoly& c) { set_coeff(t, coeff(t) + c); }

bool XForm::is_zero() const {
  for (const auto& [k, v] : c_) {
    (void)k;
    if (!v.is_zero()) return false;
  }
  return true;
}

XForm XForm::dx(int i) const {
  XForm out(deg_ - 1);
  for (const auto& [k, v] : c_) {
    if (k[static_cast<std::size_t>(i)] == 0) continue;
    ExpTriple t = k;
    int e = t[static_cast<std::size_t>(i)]--;
    out.add_coeff(t, v * Rat(e));
  }
  return out;
}

XForm XForm::du() const {
  XForm out(deg_);
  for (const auto& [k, v] : c_) out.set_coeff(k, v.derivative());
  return out;
}

Tri XForm::dehom(int j) const {
  int ja = (j + 1) % 3, jb = (j + 2) % 3;
  int db = 0, da = 0;
  for (const auto& [k, v] : c_) {
    (void)v;
    db = std::max(db, k[static_cast<std::size_t>(jb)]);
    da = std::max(da, k[static_cast<std::size_t>(ja)]);
  }
  std::vector<Bi> bcoeffs(static_cast<std::size_t>(db) + 1);
  for (int eb = 0; eb <= db; ++eb) {
    std::vector<UniPoly> acoeffs(static_cast<std::size_t>(da) + 1);
    for (const auto& [k, v] : c_) {
      if (k[static_cast<std::size_t>(jb)] != eb) continue;
      acoeffs[static_cast<std::size_t>(k[static_cast<std::size_t>(ja)])] += v;
    }
    bcoeffs[static_cast<std::size_t>(eb)] = Bi(std::move(acoeffs));
  }
  return Tri(std::move(bcoeffs));
}

NFElem XForm::eval_at(const NFElem& u, const std::array<NFElem, 3>& x) const {
  NFElem acc = NFElem::zero(u.field());
  for (const auto& [k, v] : c_) {
    NFElem term = eval_poly(v, u);
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < k[static_cast<std::size_t>(i)]; ++e)
        term = term * x[static_cast<std::size_t>(i)];
    acc = acc + term;
  }
  return acc;
}

XForm operator*(const XForm& f, const XForm& g) {
  XForm out(f.deg_ + g.deg_);
  for (const auto& [a, fa] : f.c_)
    for (const auto& [b, gb] : g.c_)
      out.add_coeff({a[0] + b[0], a[1] + b[1], a[2] + b[2]}, fa * gb);
  return out;
}

XForm alpha_form(const FiveTuple& t, int chart) {
  XForm out(2);
  for (const auto& key : exponent_triples(2)) {
    Section s = t.alpha_at(key);
    if (s.is_zero()) continue;
    out.set_coeff(key, chart == 0 ? s.chart0() : s.chart1());
  }
  return out;
}

XForm beta_form(const FiveTuple& t, int chart) {
  XForm out(4);
  for (const auto& key : exponent_triples(4)) {
    Section s = t.beta_at(key);
    if (s.is_zero()) continue;
    out.set_coeff(key, chart == 0 ? s.chart0() : s.chart1());
  }
  return out;
}

}  // namespace fibforge
