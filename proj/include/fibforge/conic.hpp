// The relative conic: symmetric matrix charts, rank stratification of
// degenerate fibers, singularity classification, the independent Jacobian
// oracle, and the lowest-slope geometry report.
#pragma once

#include <optional>

#include "fibforge/solve.hpp"
#include "fibforge/xform.hpp"

namespace fibforge {

using Mat3 = std::array<std::array<UniPoly, 3>, 3>;

struct ConicData {
  std::array<int, 3> d{0, 0, 0};
  int e0 = 0;
  XForm q0{2}, q1{2};  // chart quadrics
  Mat3 m0, m1;         // symmetric matrices with q = x^T M x
  UniPoly det0, det1;
  int det_section_degree = 0;  // 2 sum d - 3 e0
};

// Throws std::invalid_argument("empty conic") when every alpha vanishes.
// Requires the tuple to carry no degree violations.
ConicData build_conic(const FiveTuple& t);

struct DegenerateFiber {
  BasePoint point;
  int multiplicity = 0;  // vanishing order of det M
  int fiber_rank = 0;
  std::array<NFElem, 3> node;  // crossing point of the two lines, rank 2 only
  bool is_singular() const { return fiber_rank == 2 && multiplicity >= 2; }
  int an_index() const { return multiplicity - 1; }  // A_0 = smooth total space
};

enum class ConicVerdict { SmoothConic, RDPOnly, NotAdmissible, Undetermined };

struct ConicReport {
  std::vector<DegenerateFiber> degenerate;  // every root of det M
  ConicVerdict verdict = ConicVerdict::Undetermined;
  std::optional<std::pair<int, int>> hirzebruch;  // (m, d) in the slope-zero case
  bool delta_in_conic = false;                    // alpha_200 vanishes identically
  std::array<long long, 2> branch_class{0, 0};    // (8, 2(2m+d)) coefficients

  std::vector<DegenerateFiber> singularities() const;
};

ConicReport classify_singularities(const ConicData& c);

// (m, d) when 3 Kf^2 - 8 chi_f = 0, i.e. degrees (d-m, d, d+m) with e0 = 2d.
std::optional<std::pair<int, int>> hirzebruch_parameters(const std::array<int, 3>& d, int e0);

// Independent test oracle: locates singular points of the conic from the
// Jacobian system by resultant elimination, never touching det M.
struct JacobianPoint {
  BasePoint base;
  std::array<NFElem, 3> coords;  // projective, first nonzero coordinate = 1
};
struct JacobianOracleResult {
  bool positive_dimensional = false;
  std::vector<JacobianPoint> points;
  std::vector<BasePoint> undetermined_fibers;  // rank <= 1 fibers met on the way
};
JacobianOracleResult jacobian_oracle(const ConicData& c);

}  // namespace fibforge
