#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqgon/arith.hpp"
#include "eqgon/rational.hpp"
#include "eqgon/wide.hpp"

using namespace eqgon;

TEST_CASE("factorize returns sorted prime powers") {
    auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0].p == 2);
    CHECK(f[0].e == 3);
    CHECK(f[1].p == 3);
    CHECK(f[1].e == 2);
    CHECK(f[2].p == 5);
    CHECK(f[2].e == 1);
    CHECK(factorize(1).empty());
    auto g = factorize(97);
    REQUIRE(g.size() == 1);
    CHECK(g[0].p == 97);
    CHECK(g[0].e == 1);
}

TEST_CASE("factorize recombines to the input") {
    for (i64 n : {2LL, 12LL, 97LL, 111546435LL, 4849845LL, 1LL << 40}) {
        i64 prod = 1;
        for (auto [p, e] : factorize(n))
            for (int i = 0; i < e; ++i) prod *= p;
        CHECK(prod == n);
    }
}

TEST_CASE("largest prime factor") {
    CHECK(largest_prime_factor(2) == 2);
    CHECK(largest_prime_factor(3) == 3);
    CHECK(largest_prime_factor(35) == 7);
    CHECK(largest_prime_factor(231) == 11);
    CHECK(largest_prime_factor(111546435) == 23);
    CHECK(largest_prime_factor(1616615) == 19);
}

TEST_CASE("square-free tests and decomposition") {
    CHECK(is_squarefree(1));
    CHECK(is_squarefree(2));
    CHECK(is_squarefree(15015));
    CHECK(!is_squarefree(4));
    CHECK(!is_squarefree(12));
    CHECK(!is_squarefree(45));

    auto d = squarefree_part(48); // 48 = 3 * 4^2
    CHECK(d.nu == 3);
    CHECK(d.k == 4);
    d = squarefree_part(1);
    CHECK(d.nu == 1);
    CHECK(d.k == 1);
    d = squarefree_part(225);
    CHECK(d.nu == 1);
    CHECK(d.k == 15);
    d = squarefree_part(111546435); // already square-free
    CHECK(d.nu == 111546435);
    CHECK(d.k == 1);
    // invariant nu * k^2 == input, nu square-free
    for (i64 n = 1; n <= 500; ++n) {
        auto s = squarefree_part(n);
        CHECK(s.nu * s.k * s.k == n);
        CHECK(is_squarefree(s.nu));
    }
}

TEST_CASE("prime multiset is the factorization with multiplicity") {
    auto ps = prime_multiset(360);
    REQUIRE(ps.size() == 6);
    CHECK(ps == std::vector<i64>{2, 2, 2, 3, 3, 5});
}

TEST_CASE("wide integer string round trips") {
    i128 big = (i128)1 << 100;
    CHECK(parse_i128(to_string_i128(big)) == big);
    CHECK(parse_i128(to_string_i128(-big)) == -big);
    CHECK(to_string_i128(0) == "0");
    CHECK(parse_i128("-1") == i128{-1});
    CHECK(to_string_i128(*parse_i128("46923183273602")) == "46923183273602");
    CHECK(!parse_i128("").has_value());
    CHECK(!parse_i128("12x").has_value());
    CHECK(!parse_i128("-").has_value());
    CHECK(!parse_i128("999999999999999999999999999999999999999999").has_value());
}

TEST_CASE("checked arithmetic throws on overflow") {
    i128 maxi = ~(i128)0 ^ ((i128)1 << 127); // i128 max
    CHECK_THROWS_AS((void)checked_add(maxi, (i128)1), overflow_error);
    CHECK_THROWS_AS((void)checked_mul(maxi, (i128)2), overflow_error);
    CHECK(checked_add((i128)2, (i128)3) == 5);
    CHECK(checked_mul((i128)-4, (i128)5) == -20);
    CHECK(checked_sub((i128)1, (i128)2) == -1);
}

TEST_CASE("integer square roots on u128") {
    CHECK(isqrt_u128(0) == 0);
    CHECK(isqrt_u128(1) == 1);
    CHECK(isqrt_u128(3) == 1);
    CHECK(isqrt_u128(4) == 2);
    u128 v = (u128)123456789 * 123456789;
    CHECK(isqrt_u128(v) == 123456789);
    CHECK(is_square_u128(v));
    CHECK(!is_square_u128(v + 1));
    // exhaustive near-square sweep
    for (u64 r = 1; r < 2000; ++r) {
        CHECK(is_square_u128((u128)r * r));
        CHECK(!is_square_u128((u128)r * r + 1));
        CHECK(isqrt_u128((u128)r * r - 1) == r - 1);
    }
}

TEST_CASE("frac128 reduces and orders exactly") {
    frac128 a = frac128::make(2, 4);
    CHECK(a.num == 1);
    CHECK(a.den == 2);
    frac128 b = frac128::make(-3, -6);
    CHECK(b == a);
    frac128 c = frac128::make(1, -2); // sign moves to the numerator
    CHECK(c.num == -1);
    CHECK(c.den == 2);
    CHECK((a + c).is_zero());
    CHECK(frac128::make(1, 3) < frac128::make(1, 2));
    CHECK(frac128::make(-1, 2) < frac128::make(-1, 3));
    CHECK_THROWS_AS(frac128::make(1, 0), std::invalid_argument);
}

TEST_CASE("frac128 addition overflow raises instead of wrapping") {
    i128 huge = (i128)1 << 125;
    frac128 a{huge, 3};
    frac128 b{huge, 5}; // cross-multiplication exceeds 128 bits
    CHECK_THROWS_AS((void)(a + b), overflow_error);
}

TEST_CASE("frac_big mirrors frac128 on shared range") {
    auto q = [](i128 n, i128 d) { return to_mpq(frac128::make(n, d)); };
    CHECK(q(2, 4) == mpq_class(1, 2));
    frac_big x = frac_big::make(7, -21);
    CHECK(x.v == mpq_class(-1, 3));
    CHECK((frac_big::make(1, 2) + frac_big::make(1, 3)).v == mpq_class(5, 6));
    // equal values hash equal in both widths
    frac128 f = frac128::make(10, 15);
    frac_big g = frac_big::make(2, 3);
    CHECK(f.hash(42) == frac128::make(2, 3).hash(42));
    CHECK(g.hash(42) == frac_big::make(10, 15).hash(42));
}

TEST_CASE("gcd helper handles negatives and zero") {
    CHECK(igcd(0, 0) == 0);
    CHECK(igcd(0, 7) == 7);
    CHECK(igcd(-4, 6) == 2);
    CHECK(igcd(-9, -12) == 3);
    CHECK(iabs((i128)-5) == 5);
}
