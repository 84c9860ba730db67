#pragma once
// Factorization and square-free decomposition. Deterministic trial division
// with a 64-bit cap: every value this toolkit factors (lattice invariants,
// corpus parameters) is far below it.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eqgon/wide.hpp"

namespace eqgon {

struct prime_power {
    i64 p;
    int e;
};

// Prime factorization of N >= 1, ascending primes. Empty for N = 1.
std::vector<prime_power> factorize(i64 N);

// Flat multiset view, e.g. 15015 -> {3,5,7,11,13}.
std::vector<i64> prime_multiset(i64 N);

bool is_squarefree(i64 N);

// Largest prime factor; 1 for N = 1.
i64 largest_prime_factor(i64 N);

struct squarefree_decomp {
    i64 nu; // square-free
    i64 k;  // N = k^2 * nu
};

squarefree_decomp squarefree_part(i64 N);

} // namespace eqgon
