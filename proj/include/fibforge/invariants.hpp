// Closed-form surface invariants and the existence condition systems.
#pragma once

#include <array>

#include "fibforge/rat.hpp"

namespace fibforge {

struct InvariantReport {
  std::array<int, 3> d{0, 0, 0};
  int e0 = 0;
  int b = 0;  // base genus
  long long sum_d = 0;
  long long chi_O = 0;   // chi(O_S) = sum d + 2(b-1)
  long long c1sq = 0;    // 4 sum d - 2 e0 + 16(b-1)
  long long chi_f = 0;   // sum d
  long long Kfsq = 0;    // 4 sum d - 2 e0
  Rat slope;             // Kfsq / chi_f
  long long three_Kf2_minus_8chi = 0;
  // b = 0 only:
  long long pg = 0;            // sum max(d_l - 1, 0)
  long long q = 0;             // sum max(1 - d_l, 0)
  long long Kcsq = 0;          // 8 - (2 sum d - 3 e0), for a smooth conic
  long long blowup_count = 0;  // 2 sum d - 3 e0
};

// Requires sum d > 0. For b > 0 the b-only fields are left at zero.
InvariantReport invariants(const std::array<int, 3>& d, int e0, int b);

struct ConditionVerdict {
  bool necessary = false;  // e0 <= min(d0 + d2, 2 d1)
  bool exist_a = false;    // sum d - 2 d0 <= e0 <= min(d0 + d2, 2 d1)
  bool exist_b = false;    // sum d - eps/2 <= e0 <= 2 d0
  bool sc_a = false;       // sum d - (3 d0 + d1)/2 <= e0 <= 2 d0
  bool sc_b = false;       // sum d - eps'/2 <= e0 = 2 d0
  long long epsilon = 0;        // min(d0 + 3 d2, 3 d1 + d2)
  long long epsilon_prime = 0;  // min(d0 + 3 d2, 4 d1)
};

// Requires 0 <= d0 <= d1 <= d2 and sum d > 0; halved bounds are compared as
// exact rationals.
ConditionVerdict conditions(const std::array<int, 3>& d, int e0);

}  // namespace fibforge
