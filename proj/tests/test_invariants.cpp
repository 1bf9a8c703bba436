#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fibforge/scan.hpp"

using namespace fibforge;

TEST_CASE("reference invariant values") {
  InvariantReport r = invariants({1, 3, 3}, 2, 0);
  CHECK(r.chi_O == 5);
  CHECK(r.c1sq == 8);
  CHECK(r.pg == 4);
  CHECK(r.q == 0);
  CHECK(r.Kcsq == 0);
  CHECK(r.blowup_count == 8);
  CHECK(r.chi_f == 7);
  CHECK(r.Kfsq == 24);
  CHECK(r.slope == Rat(24, 7));

  for (int d = 1; d <= 3; ++d) {
    InvariantReport s = invariants({d, 4 * d, 5 * d}, 2 * d, 0);
    CHECK(s.slope == Rat(36, 10));
    CHECK(s.c1sq == 36 * d - 16);
    CHECK(s.chi_O == 10 * d - 2);
    InvariantReport t = invariants({d, 5 * d, 7 * d}, 2 * d, 0);
    CHECK(t.slope == Rat(48, 13));
    InvariantReport l = invariants({d, d, d}, 2 * d, 0);
    CHECK(l.slope == Rat(8, 3));
  }

  // q via h1 for degenerate d0 = 0 rows
  CHECK(invariants({0, 1, 2}, 1, 0).q == 1);
  CHECK(invariants({0, 0, 2}, 0, 0).q == 2);

  // general base genus: chi and c1^2 shift by the stated multiples
  InvariantReport b1 = invariants({1, 3, 3}, 2, 1);
  CHECK(b1.chi_O == 7);
  CHECK(b1.c1sq == 24);
  CHECK(b1.chi_f == 7);   // independent of b
  CHECK(b1.Kfsq == 24);
}

TEST_CASE("condition systems") {
  ConditionVerdict m0 = conditions({1, 3, 3}, 2);
  CHECK(m0.exist_b);  // 7 - 10/2 = 2 <= 2 <= 2
  CHECK(m0.sc_b);
  CHECK(!m0.exist_a);  // 7 - 2 = 5 > 2
  CHECK(m0.epsilon == 10);
  CHECK(m0.epsilon_prime == 10);

  for (int d = 1; d <= 4; ++d) {
    ConditionVerdict low = conditions({d, d, d}, 2 * d);
    CHECK(low.exist_a);
    CHECK(low.necessary);
  }

  ConditionVerdict s36 = conditions({1, 4, 5}, 2);
  CHECK(s36.sc_b);  // eps' = min(16,16) = 16; 10 - 8 = 2 <= 2 = 2 d0
  CHECK(s36.exist_b);

  ConditionVerdict s48 = conditions({1, 5, 7}, 2);
  CHECK(s48.exist_b);
  CHECK(!s48.sc_b);  // eps' = min(22,20) = 20; 13 - 10 = 3 > 2

  // necessary bound violation
  CHECK(!conditions({1, 1, 1}, 3).necessary);
  // exist_a implies necessary on a small sweep
  for (int d0 = 0; d0 <= 3; ++d0)
    for (int d1 = d0; d1 <= 3; ++d1)
      for (int d2 = d1; d2 <= 3; ++d2)
        for (int e0 = -3; e0 <= 6; ++e0) {
          if (d0 + d1 + d2 <= 0) continue;
          ConditionVerdict v = conditions({d0, d1, d2}, e0);
          if (v.exist_a) CHECK(v.necessary);
        }
}

TEST_CASE("scan rows satisfy the slope identity") {
  ScanParams p = ScanParams::with_defaults(4);
  auto rows = scan_serial(p);
  CHECK(static_cast<long long>(rows.size()) == scan_box_size(p));
  for (const auto& r : rows) {
    long long lhs = 3 * r.inv.Kfsq - 8 * r.inv.chi_f;
    long long rhs = 2 * (2 * (r.d[0] + r.d[2] - r.e0) + (2 * r.d[1] - r.e0));
    CHECK(lhs == rhs);
    if (lhs == 0 && r.cond.necessary) {
      // lowest-slope pattern (d-m, d, d+m) with e0 = 2d
      CHECK(r.d[0] + r.d[2] == r.e0);
      CHECK(2 * r.d[1] == r.e0);
      CHECK(r.d[1] - r.d[0] == r.d[2] - r.d[1]);
    }
    if (r.d[0] >= 1) CHECK(r.inv.q == 0);
  }
}

TEST_CASE("scan box size matches the closed-form count") {
  // multisets of size 3 from {0..dmax} minus the zero triple, times e-range
  for (int dmax = 1; dmax <= 5; ++dmax) {
    ScanParams p = ScanParams::with_defaults(dmax);
    long long m = dmax + 1;
    long long triples = m * (m + 1) * (m + 2) / 6 - 1;
    CHECK(scan_box_size(p) == triples * (3 * dmax + 1));
  }
}

TEST_CASE("parallel scan equals the serial reference") {
  ScanParams p = ScanParams::with_defaults(6);
  auto serial = scan_serial(p);
  auto parallel = scan_parallel(p);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].d == parallel[i].d);
    CHECK(serial[i].e0 == parallel[i].e0);
    CHECK(serial[i].inv.slope == parallel[i].inv.slope);
    CHECK(serial[i].cond.exist_a == parallel[i].cond.exist_a);
  }
  // byte-identical sinks
  std::ostringstream a, b;
  write_scan_csv(a, serial);
  write_scan_csv(b, parallel);
  CHECK(a.str() == b.str());
}

TEST_CASE("filters") {
  ScanParams p = ScanParams::with_defaults(3);
  p.filter = RowFilter::parse("exA|exB");
  for (const auto& r : scan_parallel(p)) CHECK(r.cond.necessary);

  ScanParams q = ScanParams::with_defaults(4);
  q.filter = RowFilter::parse("slope=8/3 & nec51");
  auto rows = scan_serial(q);
  CHECK(!rows.empty());
  for (const auto& r : rows) {
    CHECK(r.inv.slope == Rat(8, 3));
    CHECK(r.inv.three_Kf2_minus_8chi == 0);
    CHECK(r.d[0] + r.d[2] == r.e0);
    CHECK(2 * r.d[1] == r.e0);
  }
  CHECK_THROWS(RowFilter::parse("bogus"));

  // slope families hit their exact slopes at suitable d
  for (const Rat& s : {Rat(8, 3), Rat(17, 6), Rat(3), Rat(19, 6), Rat(10, 3)}) {
    // d = 2*denom(s) makes (4-s)*3d/2 integral for every rational slope
    int d = 2 * static_cast<int>(denom(s).convert_to<long long>());
    Rat e0 = (Rat(4) - s) * 3 * d / 2;
    REQUIRE(denom(e0) == 1);
    InvariantReport r =
        invariants({d, d, d}, static_cast<int>(numer(e0).convert_to<long long>()), 0);
    CHECK(r.slope == s);
  }
}

TEST_CASE("csv header is the documented column list") {
  std::ostringstream os;
  write_scan_csv(os, {});
  CHECK(os.str() ==
        "d0,d1,d2,e0,chi_f,Kf2,slope_num,slope_den,chi_O,c1sq,pg,q,nec51,exA,exB,scA,scB,"
        "threeK8chi\n");
}
