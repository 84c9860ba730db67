#pragma once
// From certificates to polygons and back through the proof machinery:
// convex assembly by exact angle sort, the similarity map that makes sides
// integral, prime descent, the +2-vertex extension, and the antipodal
// construction for even vertex counts.

#include "eqgon/certificate.hpp"
#include "eqgon/rep.hpp"

namespace eqgon {

struct not_divisible : std::runtime_error {
    explicit not_divisible(const std::string& what) : std::runtime_error(what) {}
};

struct budget_exhausted : std::runtime_error {
    explicit budget_exhausted(const std::string& what) : std::runtime_error(what) {}
};

struct duplicate_direction : std::runtime_error {
    duplicate_direction() : std::runtime_error("two edges share a direction") {}
};

struct polygon {
    i64 m;
    mpz_class side_sq;
    std::vector<bvec> vertices; // vertex 0 is the origin; closed implicitly
};

// Sort the certificate's vectors by exact angle and take prefix sums.
// The result is strictly convex: consecutive cross products all positive,
// total turning one revolution.
polygon assemble_convex(const certificate& c);

struct fmap_params {
    mpz_class s, t; // the map (x, y) -> (s x + t y m, -t x + s y); never both zero
    mpz_class scale_sq(i64 m) const { return s * s + t * t * m; }
};

// Lattice similarity: multiplies every squared norm by s^2 + t^2 m,
// preserves zero sums and distinctness.
std::vector<bvec> apply_fmap(const std::vector<bvec>& vs, const fmap_params& p, i64 m);

// Apply the similarity read off the canonical first edge (s, t); that edge
// maps to (side_sq, 0), so the result's side is the old side_sq, an integer.
certificate make_side_integral(const certificate& c);

// Divide everything by prime q; q must divide every coordinate.
certificate descend_by_prime(const certificate& c, const mpz_class& q);

// Multiply everything by t >= 1 (inverse of descent; test and tooling aid).
certificate scale_certificate(const certificate& c, const mpz_class& t);

// Divide out the gcd of all coordinates. For odd n the resulting integer
// side is coprime to every prime factor of m; the descent argument would
// otherwise contradict minimality.
certificate reduce_primitive(const certificate& c);

// Escalate t = 1, 2, ...: scale the edge set by t and adjoin the first
// (by (y, x) order) new vector w of matching norm with w and -w both fresh.
// The +-w pair keeps the sum zero, so the result is an (n+2)-certificate.
certificate extend_plus_two(const certificate& c, int t_budget = 64);

// Even n: scan squared norms upward from 1 + m until some norm carries at
// least n/2 antipodal classes; pair each chosen vector with its negation.
certificate even_gon(i64 m, int n, i64 norm_cap = 1000000);

} // namespace eqgon
