// The central input datum: degrees (d0,d1,d2), e0 and coefficient sections
// alpha (conic) and beta (quartic lift), with validation, named example
// families, deterministic random generation and JSON serialization.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibforge/bundle.hpp"

namespace fibforge {

using ExpTriple = std::array<int, 3>;

// all (i0,i1,i2) >= 0 with i0+i1+i2 = total, lexicographically ascending
std::vector<ExpTriple> exponent_triples(int total);
std::string triple_key(const ExpTriple& t);

struct FiveTuple {
  std::array<int, 3> d{0, 0, 0};  // 0 <= d0 <= d1 <= d2
  int e0 = 0;
  std::map<ExpTriple, Section> alpha;  // exponents of total degree 2
  std::map<ExpTriple, Section> beta;   // exponents of total degree 4

  long long sum_d() const { return static_cast<long long>(d[0]) + d[1] + d[2]; }
  int alpha_degree(const ExpTriple& i) const;
  int beta_degree(const ExpTriple& j) const;
  Section alpha_at(const ExpTriple& i) const;  // zero section when absent
  Section beta_at(const ExpTriple& j) const;
};

struct Violation {
  std::string code;  // "degree", "sum_d", "necessary_bound", "common_zero"
  std::string message;
};

// Empty result = no findings. Codes: degree mismatches, sum(d) <= 0, failure
// of the necessary inequality e0 <= min(d0+d2, 2 d1) ("cannot be admissible"),
// and a common zero of all alpha sections on either chart.
std::vector<Violation> validate(const FiveTuple& t);

enum class PhiFamily { General, Tilde };  // Tilde: only 101, 020, 011, 002
enum class PsiFamily { General, Tilde };  // Tilde: only 103 and 0,j1,j2 with j2 >= 1

// Deterministic coefficient draw (integers in [-9,9]) for the given families.
FiveTuple draw_tuple(const std::array<int, 3>& d, int e0, PhiFamily phi, PsiFamily psi,
                     std::uint64_t seed);

FiveTuple make_m0(std::uint64_t seed);
FiveTuple make_slope36(std::uint64_t seed, int d = 1);
FiveTuple make_slope4813(std::uint64_t seed, int d = 1);
FiveTuple make_lowslope(std::uint64_t seed, int d, int m);
FiveTuple make_slope_family(std::uint64_t seed, const Rat& s, int d);

// Dispatcher used by the CLI; throws std::invalid_argument on malformed
// family parameters.
FiveTuple make_example(const std::string& name, std::uint64_t seed,
                       const std::map<std::string, std::string>& params);

// beta + (conic) * (random quadric data); leaves the branch curve on the
// conic unchanged. Returns the perturbed tuple (identical when no quadric
// data of admissible degree exists).
FiveTuple perturb_beta_by_conic(const FiveTuple& t, std::uint64_t seed);

struct TupleParseError : std::runtime_error {
  TupleParseError(std::string path_in, const std::string& what_in)
      : std::runtime_error(path_in + ": " + what_in), path(std::move(path_in)) {}
  std::string path;
};

std::string to_json(const FiveTuple& t);
FiveTuple from_json(const std::string& text);  // throws TupleParseError

}  // namespace fibforge
