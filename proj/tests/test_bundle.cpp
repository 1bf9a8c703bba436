#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fibforge/bundle.hpp"

using namespace fibforge;

namespace {

// test-only oracle: enumerate degree multisets of Sym^n by brute force
std::multiset<int> sym_degrees_oracle(const std::vector<int>& degs, int n) {
  std::multiset<int> out;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  for (;;) {
    int s = 0;
    for (int i : idx) s += degs[static_cast<std::size_t>(i)];
    out.insert(s);
    int pos = n - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == static_cast<int>(degs.size()) - 1)
      --pos;
    if (pos < 0) break;
    int v = ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < n; ++j) idx[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("sym power degrees") {
  SplitBundle v({1, 3, 3});
  SplitBundle s2 = sym_power(v, 2);
  CHECK(s2.degrees() == std::vector<int>{2, 4, 4, 6, 6, 6});
  CHECK(s2.degree() == 28);  // 4 * 7
  SplitBundle line({5});
  CHECK(sym_power(line, 4).degrees() == std::vector<int>{20});
  SplitBundle s4 = sym_power(v, 4);
  CHECK(s4.rank() == 15);
  CHECK(s4.degree() == 140);  // 20 * 7
  // cross-check against the brute-force multiset oracle
  auto oracle = sym_degrees_oracle({1, 3, 3}, 4);
  std::multiset<int> got(s4.degrees().begin(), s4.degrees().end());
  CHECK(got == oracle);
  // rank identity C(rank + n - 1, n)
  for (int n = 1; n <= 6; ++n)
    CHECK(sym_power(v, n).rank() == binom(3 + n - 1, n));
}

TEST_CASE("rank difference matches the 2n+1 pattern") {
  SplitBundle v({0, 2, 7});
  for (int n = 2; n <= 10; ++n) {
    int full = sym_power(v, n).rank();
    int sub = n == 2 ? 1 : sym_power(v, n - 2).rank();
    CHECK(full - sub == 2 * n + 1);
  }
}

TEST_CASE("cohomology of O(n) on the line") {
  CHECK(h0(2) == 3);
  CHECK(h1(2) == 0);
  CHECK(h0(-1) == 0);
  CHECK(h1(-1) == 0);
  CHECK(h0(-3) == 0);
  CHECK(h1(-3) == 2);
  for (int n = -20; n <= 20; ++n) CHECK(h0(n) - h1(n) == n + 1);
}

TEST_CASE("sections satisfy the transition rule") {
  Section s(3, UniPoly{1, 0, 2});  // 1 + 2u^2 in O(3)
  // chart1(v) = v^3 (1 + 2/v^2) = v^3 + 2v
  CHECK(s.chart1() == UniPoly{0, 2, 0, 1});
  CHECK_THROWS(Section(1, UniPoly{1, 2, 3}));   // degree too big
  CHECK_THROWS(Section(-2, UniPoly{1}));        // negative bundle degree

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int n1 = static_cast<int>(rng() % 5), n2 = static_cast<int>(rng() % 5);
    std::vector<Rat> c1(static_cast<std::size_t>(n1) + 1), c2(static_cast<std::size_t>(n2) + 1);
    for (auto& x : c1) x = draw_small_int(rng);
    for (auto& x : c2) x = draw_small_int(rng);
    Section a(n1, UniPoly(c1)), b(n2, UniPoly(c2));
    // preserved by the ring operations
    auto check_transition = [](const Section& s) {
      if (s.is_zero()) return;
      CHECK(s.chart1() == s.chart0().reverse(s.bundle_degree()));
    };
    check_transition(a * b);
    if (n1 == n2) check_transition(a + b);
    check_transition(a * Rat(7));
    // evaluation at infinity is the top chart-0 coefficient
    if (!a.is_zero()) CHECK(a.eval_infinity() == a.chart1().eval(0));
  }
}

TEST_CASE("line ledger degrees") {
  LineLedger l = ledger(1, 3, 3, 2);
  CHECK(l.deg_V2minus == 5);
  CHECK(l.deg_V2plus == 26);
  CHECK(l.deg_M == 5);
  CHECK(l.deg_V2plus + l.deg_L == 28);  // deg Sym^2 V1

  for (int d = 1; d <= 5; ++d) {
    LineLedger e = ledger(d, d, d, 2 * d);
    CHECK(e.deg_V2minus == d);
  }

  LineLedger r = ledger(1, 4, 5, 2);
  CHECK(r.deg_V2minus == 8);
  CHECK(2 * r.deg_V2minus == 16);
}
