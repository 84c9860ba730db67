#pragma once
// A certificate is n distinct lattice vectors of one squared norm summing to
// zero: exactly the witness that the lattice contains a convex equilateral
// n-gon. Vectors carry arbitrary-precision coordinates so that corpus rows
// with 14-digit entries and every downstream construction verify exactly.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "eqgon/wide.hpp"

namespace eqgon {

struct invalid_certificate : std::runtime_error {
    explicit invalid_certificate(const std::string& what) : std::runtime_error(what) {}
};

struct bvec {
    mpz_class x, y; // the point (x, y*sqrt(m))
    bool operator==(const bvec&) const = default;
};

enum class provenance { Paper, Search, Constructed };

struct certificate {
    i64 m = 1;       // square-free context
    int n = 0;       // = vectors.size()
    mpz_class side_sq; // common squared norm x^2 + m y^2
    std::vector<bvec> vectors;
    provenance prov = provenance::Constructed;
};

certificate make_certificate(i64 m, std::vector<bvec> vectors, provenance prov);

struct verify_report {
    bool valid = true;
    std::vector<std::string> failures;
    std::vector<std::string> advisories; // context notes, never failures
};

// Report-style checker: distinctness, equal squared norms matching side_sq,
// zero coordinate sums, n consistency, m square-free. Advisory lines cover
// m mod 4 and how n relates to the largest prime factor of m.
verify_report verify_certificate(const certificate& c);

// Exact angle predicates shared with polygon assembly. Half-plane class:
// 0 for the positive x-axis, 1 for y > 0, 2 for the negative x-axis,
// 3 for y < 0. Within a half-plane the integer cross product orders angles
// because the sqrt(m) factors cancel in sign.
int halfplane_class(const mpz_class& x, const mpz_class& y);
int angle_compare(const bvec& u, const bvec& v); // -1 / 0 / +1

// Gcd-reduce all coordinates, sort by exact angle starting from the vector
// angularly closest to direction (1,0) (ties resolved toward positive y),
// recompute side_sq. Idempotent.
certificate canonicalize(const certificate& c);

// Total order used for deterministic search results: smaller side_sq first,
// then lexicographic on the canonical vector sequence.
int compare_canonical(const certificate& a, const certificate& b);

} // namespace eqgon
