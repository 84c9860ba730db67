#pragma once
// Checked 128-bit integer arithmetic. Everything that multiplies lattice
// coordinates goes through these helpers; callers that can overflow i128
// switch to GMP at the certificate layer.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace eqgon {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u32 = std::uint32_t;
using i128 = __int128;
using u128 = unsigned __int128;

// GMP's C++ operators cover long but not long long; the LP64 assumption
// keeps i64-vs-mpz_class arithmetic direct.
static_assert(std::is_same_v<i64, long>, "LP64 platform expected");

struct overflow_error : std::runtime_error {
    overflow_error() : std::runtime_error("128-bit overflow") {}
};

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error{};
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error{};
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error{};
    return r;
}

// x^2 + m*y^2 for int64 inputs; always fits i128 when m*y^2 does.
inline i128 norm_sq(i64 x, i64 y, i64 m) {
    i128 xx = (i128)x * x;
    i128 yy = checked_mul((i128)y * y, m);
    return checked_add(xx, yy);
}

inline i128 iabs(i128 v) { return v < 0 ? -v : v; }

inline i128 igcd(i128 a, i128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Floor square root on u128 (Newton, exact).
inline u128 isqrt_u128(u128 n) {
    if (n == 0) return 0;
    u128 x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

inline bool is_square_u128(u128 n, u128* root = nullptr) {
    u128 r = isqrt_u128(n);
    if (root) *root = r;
    return r * r == n;
}

inline std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 u = neg ? (u128)(-(v + 1)) + 1 : (u128)v;
    std::string s;
    while (u) {
        s.push_back(char('0' + (int)(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

inline std::optional<i128> parse_i128(const std::string& s) {
    if (s.empty()) return std::nullopt;
    size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) return std::nullopt;
    i128 v = 0;
    const i128 lim = ~(u128)0 >> 1; // i128 max
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
        int d = s[i] - '0';
        if (v > (lim - d) / 10) return std::nullopt;
        v = v * 10 + d;
    }
    return neg ? -v : v;
}

inline u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline u64 hash_i128(i128 v, u64 seed) {
    u128 u = (u128)v;
    seed = splitmix64(seed ^ (u64)u);
    seed = splitmix64(seed ^ (u64)(u >> 64));
    return seed;
}

} // namespace eqgon
