#pragma once
// Lattices enter as rational Gram matrices (inner products of a basis).
// The square-free part of the Gram determinant is the similarity invariant
// that decides which equilateral polygons the lattice can host.

#include <gmpxx.h>

#include "eqgon/arith.hpp"

namespace eqgon {

struct not_positive_definite : std::runtime_error {
    not_positive_definite() : std::runtime_error("Gram matrix is not positive definite") {}
};

struct bad_n : std::runtime_error {
    bad_n() : std::runtime_error("polygon vertex count must be at least 3") {}
};

struct gram_matrix {
    mpq_class g11, g12, g22; // symmetric: (g11 g12; g12 g22)

    bool positive_definite() const {
        return g11 > 0 && g11 * g22 - g12 * g12 > 0;
    }
};

struct nu_invariant {
    i64 nu; // square-free
    i64 k;  // det of the primitive integer Gram = k^2 * nu
};

// Scale by the least positive rational making all entries integers with
// overall gcd 1; the determinant's square-free part is then well defined
// per similarity class.
nu_invariant nu_of_gram(const gram_matrix& G);

enum class verdict { Contains, NotContains, Unknown };
enum class verdict_reason { EvenAlways, ParityFail, PrimeBoundFail, PrimeBoundOk, OpenCase };

struct classification_result {
    verdict v;
    verdict_reason reason;
    nu_invariant nu;
};

// Decision procedure for "does the lattice contain a convex equilateral
// n-gon". Even n >= 4: always. Odd n: requires nu = 3 (mod 4) and every
// prime factor of nu at most n; sufficiency of those conditions is only
// established for n < 29, so larger odd n with both conditions met is
// reported Unknown rather than guessed.
classification_result classify_lattice(const gram_matrix& G, int n);

const char* to_string(verdict v);
const char* to_string(verdict_reason r);

} // namespace eqgon
