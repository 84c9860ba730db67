#include "eqgon/arith.hpp"

namespace eqgon {

std::vector<prime_power> factorize(i64 N) {
    if (N < 1) throw std::domain_error("factorize: N must be positive");
    std::vector<prime_power> out;
    for (i64 p = 2; p * p <= N; p += (p == 2 ? 1 : 2)) {
        if (N % p) continue;
        int e = 0;
        while (N % p == 0) {
            N /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (N > 1) out.push_back({N, 1});
    return out;
}

std::vector<i64> prime_multiset(i64 N) {
    std::vector<i64> out;
    for (auto [p, e] : factorize(N))
        for (int i = 0; i < e; ++i) out.push_back(p);
    return out;
}

bool is_squarefree(i64 N) {
    if (N < 1) return false;
    for (auto [p, e] : factorize(N))
        if (e > 1) return false;
    return true;
}

i64 largest_prime_factor(i64 N) {
    auto f = factorize(N);
    return f.empty() ? 1 : f.back().p;
}

squarefree_decomp squarefree_part(i64 N) {
    i64 nu = 1, k = 1;
    for (auto [p, e] : factorize(N)) {
        if (e & 1) nu *= p;
        for (int i = 0; i < e / 2; ++i) k *= p;
    }
    return {nu, k};
}

} // namespace eqgon
