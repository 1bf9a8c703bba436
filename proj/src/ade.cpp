#include "fibforge/ade.hpp"

#include <stdexcept>

#include "fibforge/fpoly.hpp"
#include "fibforge/polyres.hpp"
#include "fibforge/linalg.hpp"

namespace fibforge {

std::string PlaneSingularity::tag() const {
  switch (cls) {
    case SingClass::Smooth:
      return "Smooth";
    case SingClass::A:
      return "A" + std::to_string(milnor);
    case SingClass::D:
      return "D" + std::to_string(milnor);
    case SingClass::E6:
      return "E6";
    case SingClass::E7:
      return "E7";
    case SingClass::E8:
      return "E8";
    case SingClass::NotSimple:
      return "NotSimple";
    case SingClass::Undetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

namespace {

// dim of K[v,w] / (ideal(f_v, f_w) + m^N)
int quotient_dim(const Jet2& fv, const Jet2& fw, int N) {
  auto index = [N](int i, int j) { return i * N - i * (i - 1) / 2 + j; };
  int dim = N * (N + 1) / 2;
  NFElem zero = fv.zero();
  std::vector<std::vector<NFElem>> rows;
  for (int p = 0; p < N; ++p)
    for (int q = 0; p + q < N; ++q)
      for (const Jet2* g : {&fv, &fw}) {
        std::vector<NFElem> row(static_cast<std::size_t>(dim), zero);
        bool any = false;
        for (int i = 0; i + p < N && i < g->trunc(); ++i)
          for (int j = 0; i + j < g->trunc() && p + i + q + j < N; ++j) {
            const NFElem& c = g->at(i, j);
            if (c.is_zero()) continue;
            row[static_cast<std::size_t>(index(p + i, q + j))] = c;
            any = true;
          }
        if (any) rows.push_back(std::move(row));
      }
  if (rows.empty()) return dim;
  Mat<NFElem> mat(rows.size(), static_cast<std::size_t>(dim), zero);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < static_cast<std::size_t>(dim); ++c) mat.at(r, c) = rows[r][c];
  return dim - static_cast<int>(mat.rank());
}

enum class ConePattern { ThreeDistinct, DoubleSimple, Triple };

ConePattern cone_pattern(const Jet2& f) {
  // binary cubic from the degree-3 part; m = 3 guarantees it is nonzero
  NFElem zero = f.zero();
  std::vector<NFElem> coeffs;  // p(v) = sum a_{i,3-i} v^i
  for (int i = 0; i <= 3; ++i) coeffs.push_back(f.at(i, 3 - i));
  KPoly p{std::move(coeffs)};
  int dinf = 3 - p.degree();
  KPoly g = p.degree() >= 1 ? fpoly_gcd(p, p.derivative()) : KPoly();
  int rep = g.degree() < 0 ? 0 : g.degree();
  // finite repeated-root weight plus the infinity multiplicity
  if (dinf == 0) {
    if (rep == 0) return ConePattern::ThreeDistinct;
    if (rep == 1) return ConePattern::DoubleSimple;
    return ConePattern::Triple;
  }
  if (dinf == 1) return rep == 0 ? ConePattern::ThreeDistinct : ConePattern::DoubleSimple;
  if (dinf == 2) return ConePattern::DoubleSimple;
  return ConePattern::Triple;
}

}  // namespace

int milnor_number(const Jet2& f) {
  Jet2 fv = f.derivative_v(), fw = f.derivative_w();
  int cap = std::min(f.trunc() - 1, 41);
  int prev = -1;
  for (int n = 2; n <= cap; ++n) {
    int d = quotient_dim(fv, fw, n);
    if (d == prev) return d;
    prev = d;
  }
  return -1;
}

PlaneSingularity classify_plane_singularity(const Jet2& f) {
  PlaneSingularity out;
  int m = f.order();
  if (m == 0) throw std::invalid_argument("germ does not vanish at the origin");
  out.multiplicity = m;
  if (m == 1) {
    out.cls = SingClass::Smooth;
    out.milnor = 0;
    return out;
  }
  if (m >= 4) {
    out.cls = SingClass::NotSimple;
    return out;
  }
  int mu = milnor_number(f);
  if (mu < 0) {
    out.cls = SingClass::Undetermined;
    return out;
  }
  out.milnor = mu;
  if (m == 2) {
    out.cls = SingClass::A;
    return out;
  }
  switch (cone_pattern(f)) {
    case ConePattern::ThreeDistinct:
    case ConePattern::DoubleSimple:
      out.cls = SingClass::D;
      break;
    case ConePattern::Triple:
      if (mu == 6) out.cls = SingClass::E6;
      else if (mu == 7)
        out.cls = SingClass::E7;
      else if (mu == 8)
        out.cls = SingClass::E8;
      else
        out.cls = SingClass::NotSimple;
      break;
  }
  return out;
}

}  // namespace fibforge
