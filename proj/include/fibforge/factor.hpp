// Square-free and irreducible factorization over Q, vanishing orders.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fibforge/unipoly.hpp"

namespace fibforge {

struct Factorization {
  Rat unit = 1;  // f = unit * prod factor^mult, factors monic
  std::vector<std::pair<UniPoly, int>> factors;

  UniPoly expand() const;
};

// Yun's algorithm. Factors are monic, square-free and pairwise coprime.
// Throws std::invalid_argument on the zero polynomial.
Factorization squarefree_factor(const UniPoly& f);

// Full factorization into monic irreducibles over Q (square-free split,
// then Zassenhaus: factor mod p, Hensel lift, subset recombination).
// Deterministic output order. Throws on the zero polynomial.
Factorization irreducible_factor(const UniPoly& f);

bool is_irreducible(const UniPoly& f);

// Largest k with (u - p)^k | f; nullopt (= +infinity) iff f == 0.
std::optional<int> vanishing_order(const UniPoly& f, const Rat& p);

// Order along the conjugate roots of a monic irreducible q: the number of
// times q divides f.
std::optional<int> vanishing_order_at_factor(const UniPoly& f, const UniPoly& q);

// Order at u = infinity of a section with the given degree bound.
std::optional<int> vanishing_order_at_infinity(const UniPoly& f, int degree_bound);

// All rational roots of f (each listed once). f must be nonzero.
std::vector<Rat> rational_roots(const UniPoly& f);

}  // namespace fibforge
