#include "fibforge/scan.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#ifdef FIBFORGE_HAVE_OPENMP
#include <omp.h>
#endif

namespace fibforge {

RowFilter RowFilter::parse(const std::string& expr) {
  RowFilter f;
  std::string clean;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) clean.push_back(c);
  if (clean.empty()) clean = "all";
  std::vector<std::string> ors;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= clean.size(); ++i) {
    if (i == clean.size() || clean[i] == '|') {
      ors.push_back(clean.substr(start, i - start));
      start = i + 1;
    }
  }
  for (const auto& clause : ors) {
    std::vector<Term> terms;
    std::size_t s = 0;
    for (std::size_t i = 0; i <= clause.size(); ++i) {
      if (i == clause.size() || clause[i] == '&') {
        std::string term = clause.substr(s, i - s);
        s = i + 1;
        if (term.empty()) throw std::invalid_argument("filter: empty term");
        Term t;
        if (term.rfind("slope=", 0) == 0) {
          auto v = parse_rat(term.substr(6));
          if (!v) throw std::invalid_argument("filter: bad rational in " + term);
          t.name = "slope";
          t.slope = *v;
        } else if (term == "all" || term == "nec51" || term == "exA" || term == "exB" ||
                   term == "scA" || term == "scB" || term == "zero38") {
          t.name = term;
        } else {
          throw std::invalid_argument("filter: unknown term '" + term + "'");
        }
        terms.push_back(std::move(t));
      }
    }
    f.clauses_.push_back(std::move(terms));
  }
  return f;
}

bool RowFilter::matches(const ScanRow& row) const {
  for (const auto& clause : clauses_) {
    bool ok = true;
    for (const auto& t : clause) {
      bool hit;
      if (t.name == "all") hit = true;
      else if (t.name == "nec51") hit = row.cond.necessary;
      else if (t.name == "exA") hit = row.cond.exist_a;
      else if (t.name == "exB") hit = row.cond.exist_b;
      else if (t.name == "scA") hit = row.cond.sc_a;
      else if (t.name == "scB") hit = row.cond.sc_b;
      else if (t.name == "zero38") hit = row.inv.three_Kf2_minus_8chi == 0;
      else hit = row.inv.slope == t.slope;
      if (!hit) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

ScanParams ScanParams::with_defaults(int d_max) {
  ScanParams p;
  p.d_max = d_max;
  p.e_min = -d_max;
  p.e_max = 2 * d_max;
  return p;
}

namespace {

struct TripleList {
  std::vector<std::array<int, 3>> triples;  // lexicographic
};

TripleList make_triples(int d_max) {
  TripleList t;
  for (int d0 = 0; d0 <= d_max; ++d0)
    for (int d1 = d0; d1 <= d_max; ++d1)
      for (int d2 = d1; d2 <= d_max; ++d2) {
        if (d0 + d1 + d2 <= 0) continue;
        t.triples.push_back({d0, d1, d2});
      }
  return t;
}

void emit_rows(const ScanParams& p, const std::array<int, 3>& d, std::vector<ScanRow>& out) {
  for (int e0 = p.e_min; e0 <= p.e_max; ++e0) {
    ScanRow row;
    row.d = d;
    row.e0 = e0;
    row.inv = invariants(d, e0, 0);
    row.cond = conditions(d, e0);
    if (p.filter.matches(row)) out.push_back(std::move(row));
  }
}

}  // namespace

std::vector<ScanRow> scan_serial(const ScanParams& p) {
  std::vector<ScanRow> rows;
  for (const auto& d : make_triples(p.d_max).triples) emit_rows(p, d, rows);
  return rows;
}

std::vector<ScanRow> scan_parallel(const ScanParams& p, int thread_cap) {
  TripleList triples = make_triples(p.d_max);
  std::size_t n = triples.triples.size();
  std::vector<std::vector<ScanRow>> buckets(n);
#ifdef FIBFORGE_HAVE_OPENMP
  if (thread_cap <= 0) {
    if (const char* env = std::getenv("FIBFORGE_THREADS")) {
      int v = std::atoi(env);
      if (v > 0) thread_cap = v;
    }
  }
  int threads = thread_cap > 0 ? thread_cap : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    emit_rows(p, triples.triples[static_cast<std::size_t>(i)], buckets[static_cast<std::size_t>(i)]);
#else
  (void)thread_cap;
  for (std::size_t i = 0; i < n; ++i) emit_rows(p, triples.triples[i], buckets[i]);
#endif
  // deterministic merge in triple order
  std::vector<ScanRow> rows;
  for (auto& b : buckets)
    for (auto& r : b) rows.push_back(std::move(r));
  return rows;
}

long long scan_box_size(const ScanParams& p) {
  long long triples = static_cast<long long>(make_triples(p.d_max).triples.size());
  long long evals = p.e_max >= p.e_min ? p.e_max - p.e_min + 1 : 0;
  return triples * evals;
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << "d0,d1,d2,e0,chi_f,Kf2,slope_num,slope_den,chi_O,c1sq,pg,q,nec51,exA,exB,scA,scB,threeK8chi\n";
  for (const auto& r : rows) {
    os << r.d[0] << ',' << r.d[1] << ',' << r.d[2] << ',' << r.e0 << ',' << r.inv.chi_f << ','
       << r.inv.Kfsq << ',' << numer(r.inv.slope) << ',' << denom(r.inv.slope) << ','
       << r.inv.chi_O << ',' << r.inv.c1sq << ',' << r.inv.pg << ',' << r.inv.q << ','
       << int(r.cond.necessary) << ',' << int(r.cond.exist_a) << ',' << int(r.cond.exist_b) << ','
       << int(r.cond.sc_a) << ',' << int(r.cond.sc_b) << ',' << r.inv.three_Kf2_minus_8chi
       << '\n';
  }
}

void write_scan_json(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << "[\n";
  bool first = true;
  for (const auto& r : rows) {
    if (!first) os << ",\n";
    first = false;
    os << "  {\"d0\":" << r.d[0] << ",\"d1\":" << r.d[1] << ",\"d2\":" << r.d[2]
       << ",\"e0\":" << r.e0 << ",\"chi_f\":" << r.inv.chi_f << ",\"Kf2\":" << r.inv.Kfsq
       << ",\"slope_num\":" << numer(r.inv.slope) << ",\"slope_den\":" << denom(r.inv.slope)
       << ",\"chi_O\":" << r.inv.chi_O << ",\"c1sq\":" << r.inv.c1sq << ",\"pg\":" << r.inv.pg
       << ",\"q\":" << r.inv.q << ",\"nec51\":" << int(r.cond.necessary)
       << ",\"exA\":" << int(r.cond.exist_a) << ",\"exB\":" << int(r.cond.exist_b)
       << ",\"scA\":" << int(r.cond.sc_a) << ",\"scB\":" << int(r.cond.sc_b)
       << ",\"threeK8chi\":" << r.inv.three_Kf2_minus_8chi << "}";
  }
  os << "\n]\n";
}

}  // namespace fibforge
