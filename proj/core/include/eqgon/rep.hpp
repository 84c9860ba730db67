#pragma once
// Enumeration of the norm-form solutions a^2 + m*b^2 = c^2 and the unit
// vector pools built from them. A primitive representation (a,b,c) is the
// unit vector (a/c, b*sqrt(m)/c); the pool with c <= N is the search space
// for every zero-sum hunt in this library.

#include <stdexcept>
#include <vector>

#include "eqgon/wide.hpp"

namespace eqgon {

struct m_not_squarefree : std::runtime_error {
    m_not_squarefree() : std::runtime_error("m must be square-free") {}
};

struct rep {
    i64 a, b, c; // a^2 + m b^2 = c^2, b >= 0, gcd(a,b) = 1 (hence gcd(a,b,c) = 1)
    bool operator==(const rep&) const = default;
};

// All primitive representations with 1 <= c <= N: b >= 0, both signs of a
// when a != 0, sorted by (c, a, b). Includes the axis pair (+-1, 0, 1).
// gcd(a,b) = 1 forces primitivity: any common prime of a and c would have
// its square divide m*b^2, impossible with m square-free and gcd(a,b) = 1.
std::vector<rep> enumerate_reps(i64 m, i64 N);

// Test oracle: same set by brute force over (a, b). Quadratic in N.
std::vector<rep> enumerate_reps_naive(i64 m, i64 N);

struct unit_vec {
    rep r;
    int sign_b; // +1 or -1; b = 0 forces +1
    bool operator==(const unit_vec& o) const {
        return r.a == o.r.a && r.c == o.r.c && sign_b * r.b == o.sign_b * o.r.b;
    }
};

// The unit-vector pool fully expanded with both b signs; closed under
// negation and conjugation.
std::vector<unit_vec> unit_set(i64 m, i64 N);

struct vec {
    i64 x, y; // the lattice point (x, y*sqrt(m))
    bool operator==(const vec&) const = default;
    bool operator<(const vec& o) const { return x != o.x ? x < o.x : y < o.y; }
};

// Complete list of lattice vectors of squared norm Q, all sign combinations,
// sorted lexicographically. Empty when Q is not represented.
std::vector<vec> reps_of_norm(i64 m, i128 Q);

} // namespace eqgon
