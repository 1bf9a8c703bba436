// Branch-curve analysis: restriction of the quartic to the conic, singular
// point location, ADE classification, and the joined admissibility verdict.
#pragma once

#include "fibforge/ade.hpp"
#include "fibforge/conic.hpp"
#include "fibforge/invariants.hpp"

namespace fibforge {

struct BranchData {
  XForm g0{4}, g1{4};  // the quartic on either base chart
};

// Throws std::invalid_argument when the quartic vanishes identically or is
// divisible by the conic ("branch divisor contains the conic").
BranchData restrict_to_conic(const FiveTuple& t, const ConicData& c);

// conic * quadric-lift divisibility test used by restrict_to_conic
bool conic_divides_quartic(const FiveTuple& t);

struct LocatedPoint {
  NumberFieldPtr field;
  NFElem u;  // chart coordinate (chart-0 finite; chart-1 over infinity)
  bool at_infinity_chart = false;
  int fiber_chart = 0;
  std::array<NFElem, 3> proj;  // projective fiber coordinates
  bool on_conic_singularity = false;
  UniPoly base_min_poly;  // in the coordinate of the chart used
  std::string location_str() const;
};

struct SingularSearch {
  bool non_isolated = false;
  bool solver_failed = false;
  std::vector<std::string> evidence;
  std::vector<LocatedPoint> points;
};

// Complete list of singular points of the restricted branch curve lying on
// the smooth locus of the conic, plus the points where it meets Sing(conic).
SingularSearch find_singular_points(const ConicData& c, const BranchData& b);

struct CurveSingularity {
  LocatedPoint at;
  PlaneSingularity sing;
};

enum class BranchVerdict { SmoothBranch, NegligibleOnly, NotNegligible, Undetermined };

struct BranchReport {
  std::vector<CurveSingularity> singularities;
  bool meets_conic_singularities = false;
  BranchVerdict verdict = BranchVerdict::Undetermined;
  std::vector<std::string> notes;
};

BranchReport analyze_branch(const ConicData& c, const ConicReport& crep, const BranchData& b);

// local equation of the branch curve in local coordinates of the conic at a
// smooth conic point, as a jet of the given order (test hook + pipeline)
Jet2 local_branch_equation(const ConicData& c, const BranchData& b, const LocatedPoint& pt,
                           int trunc);

enum class Admissibility { Admissible, NotAdmissible, Undetermined };

struct Certificate {
  std::vector<Violation> violations;
  bool conic_built = false;
  ConicReport conic;
  BranchReport branch;
  InvariantReport inv;
  ConditionVerdict cond;
  Admissibility verdict = Admissibility::Undetermined;
  std::vector<std::string> notes;
};

Certificate certify(const FiveTuple& t);
std::string certificate_to_json(const Certificate& c);
int verdict_exit_code(Admissibility a);
std::string verdict_str(Admissibility a);

}  // namespace fibforge
