#include "eqgon/gram.hpp"

namespace eqgon {

nu_invariant nu_of_gram(const gram_matrix& G) {
    if (!G.positive_definite()) throw not_positive_definite{};

    mpz_class L = lcm(lcm(G.g11.get_den(), G.g12.get_den()), G.g22.get_den());
    auto scaled = [&](const mpq_class& q) {
        mpq_class r = q * L;
        r.canonicalize();
        return r.get_num(); // r is integral: L clears every denominator
    };
    mpz_class a = scaled(G.g11), b = scaled(G.g12), c = scaled(G.g22);
    mpz_class g = gcd(gcd(a, b), c);
    a /= g;
    b /= g;
    c /= g;

    mpz_class det = a * c - b * b; // > 0 by definiteness
    if (!det.fits_slong_p())
        throw std::domain_error("Gram determinant exceeds the 64-bit factorization cap");
    auto [nu, k] = squarefree_part(det.get_si());
    return {nu, k};
}

classification_result classify_lattice(const gram_matrix& G, int n) {
    if (n < 3) throw bad_n{};
    nu_invariant inv = nu_of_gram(G); // validates definiteness first

    if (n % 2 == 0) return {verdict::Contains, verdict_reason::EvenAlways, inv};

    if (inv.nu % 4 != 3) return {verdict::NotContains, verdict_reason::ParityFail, inv};
    if (largest_prime_factor(inv.nu) > n)
        return {verdict::NotContains, verdict_reason::PrimeBoundFail, inv};
    if (n < 29) return {verdict::Contains, verdict_reason::PrimeBoundOk, inv};
    return {verdict::Unknown, verdict_reason::OpenCase, inv};
}

const char* to_string(verdict v) {
    switch (v) {
        case verdict::Contains: return "Contains";
        case verdict::NotContains: return "NotContains";
        default: return "Unknown";
    }
}

const char* to_string(verdict_reason r) {
    switch (r) {
        case verdict_reason::EvenAlways: return "EvenAlways";
        case verdict_reason::ParityFail: return "ParityFail";
        case verdict_reason::PrimeBoundFail: return "PrimeBoundFail";
        case verdict_reason::PrimeBoundOk: return "PrimeBoundOk";
        default: return "OpenCase";
    }
}

} // namespace eqgon
