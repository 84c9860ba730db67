#pragma once
// Exact rationals in two widths. frac128 is the hot-path type: reduced
// numerator/denominator in i128 with every operation overflow-checked.
// On overflow the search engines rerun the affected computation with
// frac_big (GMP mpq) instead; results never depend on the width.

#include <gmpxx.h>

#include "eqgon/wide.hpp"

namespace eqgon {

struct frac128 {
    i128 num = 0;
    i128 den = 1; // > 0, gcd(num, den) = 1

    static frac128 make(i128 n, i128 d) {
        if (d == 0) throw std::invalid_argument("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = igcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        return {n, d};
    }

    frac128 operator+(const frac128& o) const {
        i128 g = igcd(den, o.den);
        i128 dl = den / g;
        i128 n = checked_add(checked_mul(num, o.den / g), checked_mul(o.num, dl));
        i128 d = checked_mul(dl, o.den);
        return make(n, d);
    }

    frac128 operator-() const { return {-num, den}; }
    bool operator==(const frac128& o) const { return num == o.num && den == o.den; }

    bool operator<(const frac128& o) const {
        // exact; operands stay well inside i128 for all pool denominators
        return checked_mul(num, o.den) < checked_mul(o.num, den);
    }

    bool is_zero() const { return num == 0; }
    double approx() const { return (double)num / (double)den; }
    u64 hash(u64 seed) const { return hash_i128(den, hash_i128(num, seed)); }
};

struct frac_big {
    mpq_class v;

    static frac_big make(i128 n, i128 d) {
        frac_big f{mpq_class(mpz_class(to_string_i128(n)), mpz_class(to_string_i128(d)))};
        f.v.canonicalize();
        return f;
    }

    frac_big operator+(const frac_big& o) const { return {v + o.v}; }
    frac_big operator-() const { return {-v}; }
    bool operator==(const frac_big& o) const { return v == o.v; }
    bool operator<(const frac_big& o) const { return v < o.v; }

    bool is_zero() const { return v == 0; }
    double approx() const { return v.get_d(); }

    u64 hash(u64 seed) const {
        const mpz_srcptr n = mpq_numref(v.get_mpq_t());
        const mpz_srcptr d = mpq_denref(v.get_mpq_t());
        seed = splitmix64(seed ^ (u64)mpz_sgn(n));
        for (size_t i = 0; i < mpz_size(n); ++i) seed = splitmix64(seed ^ mpz_getlimbn(n, i));
        for (size_t i = 0; i < mpz_size(d); ++i) seed = splitmix64(seed ^ mpz_getlimbn(d, i));
        return seed;
    }
};

inline mpq_class to_mpq(const frac128& f) {
    return mpq_class(mpz_class(to_string_i128(f.num)), mpz_class(to_string_i128(f.den)));
}

} // namespace eqgon
