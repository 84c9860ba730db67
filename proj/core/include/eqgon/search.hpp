#pragma once
// Zero-sum hunts over the unit-vector pool with denominators up to N.
// Two phases, both exact:
//
//   A. integer sides ascending: a primitive certificate with side s uses
//      unit vectors whose denominators all divide s, so for each s <= N the
//      candidates are the norm-s^2 lattice vectors and the hunt is an
//      integer subset-sum solved by a windowed hash join over two halves
//      (meet in the middle). The first s with solutions carries the
//      canonical-least certificate overall, because a primitive
//      certificate's side equals the lcm of its unit denominators.
//
//   B. only when phase A proves there is no side <= N: subsets of the pool
//      whose lcm exceeds N, enumerated exhaustively with exact rational
//      sums (branch and bound plus closing joins). Finding nothing here,
//      with phase A complete, is proof of emptiness within N.
//
// Symmetric mode fixes the ansatz: one axis vector (k, 0) plus (p-1)/2
// conjugate pairs (x, +-y); the x constraint is a one-dimensional subset
// sum. The axis is taken with positive x; negating a solution gives the
// mirrored family, so nothing is lost. General mode makes no assumption
// and works with two-dimensional sums split by hemisphere.

#include <optional>

#include "eqgon/certificate.hpp"

namespace eqgon {

enum class search_mode { symmetric, general };

struct search_budget {
    i64 N = 300;                      // denominator cap
    u64 max_nodes = 2'000'000'000ULL; // enumeration node cap
    search_mode mode = search_mode::symmetric;
    int jobs = 1;
};

enum class search_status { found, proven_empty_within_n, budget_exhausted };

struct search_result {
    search_status status;
    std::optional<certificate> cert; // set iff status == found
    u64 nodes_used = 0;
};

const char* to_string(search_status s);

// p odd >= 3. Deterministic: independent of budget.jobs whenever the run
// completes without hitting max_nodes.
search_result find_zero_sum_symmetric(i64 m, int p, const search_budget& budget);

// n >= 3, any parity, no ansatz.
search_result find_zero_sum_general(i64 m, int n, const search_budget& budget);

} // namespace eqgon
