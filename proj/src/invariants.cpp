#include "fibforge/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibforge {

InvariantReport invariants(const std::array<int, 3>& d, int e0, int b) {
  InvariantReport r;
  r.d = d;
  r.e0 = e0;
  r.b = b;
  r.sum_d = static_cast<long long>(d[0]) + d[1] + d[2];
  if (r.sum_d <= 0) throw std::invalid_argument("sum of degrees must be positive");
  if (b < 0) throw std::invalid_argument("base genus must be nonnegative");
  r.chi_O = r.sum_d + 2 * (b - 1);
  r.c1sq = 4 * r.sum_d - 2 * e0 + 16 * (b - 1);
  r.chi_f = r.sum_d;
  r.Kfsq = 4 * r.sum_d - 2 * e0;
  r.slope = make_rat(Int(r.Kfsq), Int(r.chi_f));
  r.three_Kf2_minus_8chi = 3 * r.Kfsq - 8 * r.chi_f;
  if (b == 0) {
    for (int dl : d) {
      r.pg += std::max(dl - 1, 0);
      r.q += std::max(1 - dl, 0);
    }
    r.blowup_count = 2 * r.sum_d - 3 * e0;
    r.Kcsq = 8 - r.blowup_count;
  }
  return r;
}

ConditionVerdict conditions(const std::array<int, 3>& d, int e0) {
  if (!(0 <= d[0] && d[0] <= d[1] && d[1] <= d[2]))
    throw std::invalid_argument("degrees must satisfy 0 <= d0 <= d1 <= d2");
  long long sum = static_cast<long long>(d[0]) + d[1] + d[2];
  if (sum <= 0) throw std::invalid_argument("sum of degrees must be positive");
  ConditionVerdict v;
  long long cap = std::min<long long>(d[0] + d[2], 2LL * d[1]);
  v.epsilon = std::min<long long>(d[0] + 3LL * d[2], 3LL * d[1] + d[2]);
  v.epsilon_prime = std::min<long long>(d[0] + 3LL * d[2], 4LL * d[1]);
  Rat e(e0);
  v.necessary = e0 <= cap;
  v.exist_a = Rat(sum - 2LL * d[0]) <= e && e0 <= cap;
  v.exist_b = Rat(sum) - make_rat(Int(v.epsilon), 2) <= e && e0 <= 2 * d[0];
  v.sc_a = Rat(sum) - make_rat(Int(3LL * d[0] + d[1]), 2) <= e && e0 <= 2 * d[0];
  v.sc_b = Rat(sum) - make_rat(Int(v.epsilon_prime), 2) <= e && e0 == 2 * d[0];
  return v;
}

}  // namespace fibforge
