#include "eqgon/rep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eqgon/arith.hpp"

namespace eqgon {

namespace {

void require_squarefree(i64 m) {
    if (m < 1 || !is_squarefree(m)) throw m_not_squarefree{};
}

// Ascending divisors of m * b^2 given the factorizations of m and b.
// m is square-free and gcd considerations live with the caller.
std::vector<i64> divisors_of_m_bsq(const std::vector<prime_power>& fm, i64 b) {
    std::vector<prime_power> f = fm;
    for (auto [p, e] : factorize(b)) {
        bool merged = false;
        for (auto& q : f)
            if (q.p == p) {
                q.e += 2 * e;
                merged = true;
                break;
            }
        if (!merged) f.push_back({p, 2 * e});
    }
    std::vector<i64> divs{1};
    for (auto [p, e] : f) {
        size_t base = divs.size();
        i64 pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace

std::vector<rep> enumerate_reps(i64 m, i64 N) {
    require_squarefree(m);
    if (N < 1) throw std::domain_error("N must be positive");

    std::vector<rep> out;
    out.push_back({1, 0, 1});
    out.push_back({-1, 0, 1});

    auto fm = factorize(m);
    i64 bmax = (i64)std::sqrt((double)(N) * N / (double)m) + 2;
    while ((i128)m * bmax * bmax > (i128)N * N) --bmax;

    for (i64 b = 1; b <= bmax; ++b) {
        // (c-a)(c+a) = m b^2: walk divisor pairs d <= e of matching parity
        i64 mb, M;
        if (__builtin_mul_overflow(m, b, &mb) || __builtin_mul_overflow(mb, b, &M))
            throw overflow_error{};
        for (i64 d : divisors_of_m_bsq(fm, b)) {
            if ((i128)d * d > M) break;
            i64 e = M / d;
            if (((d ^ e) & 1) != 0) continue; // need same parity for integer a, c
            i64 c = (d + e) / 2, a = (e - d) / 2;
            if (c > N) continue;
            if (std::gcd(a, b) != 1) continue;
            out.push_back({a, b, c});
            if (a != 0) out.push_back({-a, b, c});
        }
    }

    std::sort(out.begin(), out.end(), [](const rep& l, const rep& r) {
        if (l.c != r.c) return l.c < r.c;
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    });
    return out;
}

std::vector<rep> enumerate_reps_naive(i64 m, i64 N) {
    require_squarefree(m);
    std::vector<rep> out;
    for (i64 b = 0; (i128)m * b * b <= (i128)N * N; ++b) {
        for (i64 a = 0; a <= N; ++a) {
            i128 s = (i128)a * a + (i128)m * b * b;
            u128 c;
            if (!is_square_u128((u128)s, &c)) continue;
            if ((i64)c > N || c == 0) continue;
            if (std::gcd(a, b) != 1) continue;
            out.push_back({a, b, (i64)c});
            if (a != 0) out.push_back({-a, b, (i64)c});
        }
    }
    std::sort(out.begin(), out.end(), [](const rep& l, const rep& r) {
        if (l.c != r.c) return l.c < r.c;
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    });
    return out;
}

std::vector<unit_vec> unit_set(i64 m, i64 N) {
    std::vector<unit_vec> out;
    for (const rep& r : enumerate_reps(m, N)) {
        out.push_back({r, +1});
        if (r.b != 0) out.push_back({r, -1});
    }
    return out;
}

std::vector<vec> reps_of_norm(i64 m, i128 Q) {
    if (Q < 1) return {};
    std::vector<vec> out;
    u128 ymax = isqrt_u128((u128)(Q / m));
    if (ymax > (u128)1 << 40) throw std::domain_error("norm too large to enumerate");
    for (i64 y = 0; (u128)y <= ymax; ++y) {
        i128 r = Q - (i128)m * y * y;
        u128 x;
        if (!is_square_u128((u128)r, &x)) continue;
        i64 xi = (i64)x;
        out.push_back({xi, y});
        if (xi != 0) out.push_back({-xi, y});
        if (y != 0) {
            out.push_back({xi, -y});
            if (xi != 0) out.push_back({-xi, -y});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace eqgon
