// Parameter-space enumeration over the (d0 <= d1 <= d2, e0) box with CSV and
// JSON sinks. The OpenMP kernel partitions the degree triples across threads;
// a serial reference implementation is kept for testing and benchmarking.
#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "fibforge/invariants.hpp"

namespace fibforge {

struct ScanRow {
  std::array<int, 3> d{0, 0, 0};
  int e0 = 0;
  InvariantReport inv;
  ConditionVerdict cond;
};

// Conjunctions of flag tests joined by '|'; '&' binds tighter. Terms:
// all, nec51, exA, exB, scA, scB, zero38, slope=<rational>.
class RowFilter {
 public:
  static RowFilter parse(const std::string& expr);  // throws on bad syntax
  bool matches(const ScanRow& row) const;

 private:
  // disjunctive normal form: outer OR over inner AND term lists
  struct Term {
    std::string name;
    Rat slope;  // for slope=...
  };
  std::vector<std::vector<Term>> clauses_;
};

struct ScanParams {
  int d_max = 4;
  int e_min = 0;       // overridden by with_default_e_range
  int e_max = 0;
  RowFilter filter = RowFilter::parse("all");

  // e0 in [-d_max, 2*d_max] unless explicitly set
  static ScanParams with_defaults(int d_max);
};

// Rows in lexicographic (d0, d1, d2, e0) order.
std::vector<ScanRow> scan_serial(const ScanParams& p);
// Same rows, same order; work split across threads. thread_cap = 0 reads
// FIBFORGE_THREADS, falling back to the OpenMP default.
std::vector<ScanRow> scan_parallel(const ScanParams& p, int thread_cap = 0);

// Number of (d, e0) lattice points the scan visits before filtering.
long long scan_box_size(const ScanParams& p);

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows);
void write_scan_json(std::ostream& os, const std::vector<ScanRow>& rows);

}  // namespace fibforge
