#include "fibforge/conic.hpp"

#include <algorithm>
#include <set>

namespace fibforge {

namespace {

Mat3 matrix_from_form(const XForm& q) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ExpTriple t{0, 0, 0};
      ++t[static_cast<std::size_t>(i)];
      ++t[static_cast<std::size_t>(j)];
      UniPoly c = q.coeff(t);
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          i == j ? c : c * Rat(1, 2);
    }
  return m;
}

UniPoly det3(const Mat3& m) {
  const auto& a = m;
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat<NFElem> matrix_at(const Mat3& m, const NFElem& u) {
  NFElem zero = NFElem::zero(u.field());
  Mat<NFElem> out(3, 3, zero);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out.at(i, j) = eval_poly(m[i][j], u);
  return out;
}

std::array<NFElem, 3> normalize_projective(std::array<NFElem, 3> x) {
  for (auto& c : x)
    if (!c.is_zero()) {
      NFElem inv = c.inverse();
      for (auto& y : x) y = y * inv;
      break;
    }
  return x;
}

}  // namespace

ConicData build_conic(const FiveTuple& t) {
  ConicData c;
  c.d = t.d;
  c.e0 = t.e0;
  c.q0 = alpha_form(t, 0);
  c.q1 = alpha_form(t, 1);
  if (c.q0.is_zero()) throw std::invalid_argument("empty conic");
  c.m0 = matrix_from_form(c.q0);
  c.m1 = matrix_from_form(c.q1);
  c.det0 = det3(c.m0);
  c.det1 = det3(c.m1);
  c.det_section_degree = static_cast<int>(2 * t.sum_d()) - 3 * t.e0;
  // chart transition: det1(v) = v^deg * det0(1/v)
  if (!c.det0.is_zero() && c.det1 != c.det0.reverse(c.det_section_degree))
    throw std::logic_error("determinant charts violate the transition rule");
  if (c.det0.is_zero() && !c.det1.is_zero())
    throw std::logic_error("determinant charts disagree about vanishing");
  return c;
}

std::vector<DegenerateFiber> ConicReport::singularities() const {
  std::vector<DegenerateFiber> out;
  for (const auto& f : degenerate)
    if (f.is_singular()) out.push_back(f);
  return out;
}

ConicReport classify_singularities(const ConicData& c) {
  ConicReport rep;
  if (auto hz = hirzebruch_parameters(c.d, c.e0)) {
    rep.hirzebruch = hz;
    rep.delta_in_conic = c.q0.coeff({2, 0, 0}).is_zero();
    rep.branch_class = {8, 2LL * (2 * hz->first + hz->second)};
  }
  if (c.det0.is_zero()) {
    rep.verdict = ConicVerdict::NotAdmissible;
    return rep;
  }
  bool undetermined = false;
  auto analyze = [&](const BasePoint& pt, int mult, const Mat3& m, const NFElem& at) {
    DegenerateFiber f;
    f.point = pt;
    f.multiplicity = mult;
    Mat<NFElem> mk = matrix_at(m, at);
    f.fiber_rank = static_cast<int>(mk.rank());
    if (f.fiber_rank == 2) {
      auto ker = mk.kernel(NFElem::zero(at.field()), NFElem::one(at.field()));
      f.node = normalize_projective({ker[0][0], ker[0][1], ker[0][2]});
    } else {
      undetermined = true;
    }
    rep.degenerate.push_back(std::move(f));
  };
  for (const auto& [p, mult] : irreducible_factor(c.det0).factors) {
    if (p.degree() < 1) continue;
    BasePoint pt = p.degree() == 1 ? BasePoint::rational(-p.coeff(0)) : BasePoint::factor(p);
    analyze(pt, mult, c.m0, pt.element());
  }
  int infinity_mult = c.det_section_degree - c.det0.degree();
  if (infinity_mult > 0)
    analyze(BasePoint::infinity(), infinity_mult, c.m1, NFElem::from_rat(0));
  std::sort(rep.degenerate.begin(), rep.degenerate.end(),
            [](const DegenerateFiber& x, const DegenerateFiber& y) { return x.point < y.point; });
  if (undetermined) {
    rep.verdict = ConicVerdict::Undetermined;
  } else if (rep.singularities().empty()) {
    rep.verdict = ConicVerdict::SmoothConic;
  } else {
    rep.verdict = ConicVerdict::RDPOnly;
  }
  return rep;
}

std::optional<std::pair<int, int>> hirzebruch_parameters(const std::array<int, 3>& d, int e0) {
  if (d[0] + d[2] != e0 || 2 * d[1] != e0) return std::nullopt;
  return std::make_pair(d[1] - d[0], d[1]);
}

JacobianOracleResult jacobian_oracle(const ConicData& c) {
  JacobianOracleResult out;
  std::set<std::pair<bool, std::vector<Rat>>> seen_factors;  // (at_infinity, coeffs)
  std::vector<std::pair<BasePoint, int>> candidates;         // point, source chart

  for (int chart = 0; chart < 2; ++chart) {
    const XForm& q = chart == 0 ? c.q0 : c.q1;
    XForm qu = q.du();
    std::array<XForm, 3> grads{q.dx(0), q.dx(1), q.dx(2)};
    for (int j = 0; j < 3; ++j) {
      std::vector<Tri> sys;
      sys.push_back(q.dehom(j));
      sys.push_back(qu.dehom(j));
      sys.push_back(grads[static_cast<std::size_t>((j + 1) % 3)].dehom(j));
      sys.push_back(grads[static_cast<std::size_t>((j + 2) % 3)].dehom(j));
      UniPoly elim = chain_eliminant_u(sys);
      if (elim.is_zero()) {
        out.positive_dimensional = true;
        continue;
      }
      for (const auto& [p, mult] : irreducible_factor(elim).factors) {
        (void)mult;
        if (p.degree() < 1) continue;
        if (chart == 1) {
          // only the origin of chart 1 is new: the point at infinity
          if (p.degree() == 1 && p.coeff(0) == 0)
            candidates.push_back({BasePoint::infinity(), 1});
          continue;
        }
        BasePoint pt = p.degree() == 1 ? BasePoint::rational(-p.coeff(0)) : BasePoint::factor(p);
        auto key = std::make_pair(false, pt.min_poly.coeffs());
        if (seen_factors.insert(key).second) candidates.push_back({pt, 0});
      }
    }
  }
  bool has_inf = false;
  for (auto& [pt, chart] : candidates) {
    (void)chart;
    if (pt.at_infinity) {
      if (has_inf) continue;
      has_inf = true;
    }
    // verify from the Jacobian equations: the fiber-singular locus is the
    // kernel of M; a point there is a surface singularity iff q_u vanishes
    const Mat3& m = pt.at_infinity ? c.m1 : c.m0;
    const XForm& q = pt.at_infinity ? c.q1 : c.q0;
    NFElem at = pt.at_infinity ? NFElem::from_rat(0) : pt.element();
    Mat<NFElem> mk = matrix_at(m, at);
    std::size_t rank = mk.rank();
    if (rank == 3) continue;  // spurious candidate
    if (rank <= 1) {
      out.undetermined_fibers.push_back(pt);
      continue;
    }
    auto ker = mk.kernel(NFElem::zero(at.field()), NFElem::one(at.field()));
    std::array<NFElem, 3> x = normalize_projective({ker[0][0], ker[0][1], ker[0][2]});
    if (q.du().eval_at(at, x).is_zero()) out.points.push_back({pt, x});
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const JacobianPoint& a, const JacobianPoint& b) { return a.base < b.base; });
  return out;
}

}  // namespace fibforge
