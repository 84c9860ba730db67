#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eqgon/arith.hpp"
#include "eqgon/certificate.hpp"
#include "eqgon/corpus.hpp"
#include "eqgon/serialize.hpp"

using namespace eqgon;

namespace {

u64 fnv1a(const char* s) {
    u64 h = 0xcbf29ce484222325ULL;
    for (; *s; ++s) {
        h ^= (unsigned char)*s;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

TEST_CASE("embedded table matches its recorded checksum") {
    // recompute with an independent FNV-1a implementation
    CHECK(fnv1a(corpus_text()) == 0x95d07296898cbd47ULL);
}

TEST_CASE("loader returns 22 verified rows, 16 small and 6 large") {
    const auto& rows = load_corpus();
    REQUIRE(rows.size() == 22);

    int small = 0, large = 0;
    for (const auto& row : rows) (row.source == 1 ? small : large)++;
    CHECK(small == 16);
    CHECK(large == 6);

    std::set<i64> ms;
    for (const auto& row : rows) ms.insert(row.m);
    CHECK(ms.size() == 22); // no lattice listed twice

    for (i64 m : {3LL, 15015LL, 51LL, 111546435LL}) CHECK(ms.count(m) == 1);
}

TEST_CASE("every row is an odd-gon witness for its own lattice") {
    for (const auto& row : load_corpus()) {
        CAPTURE(row.m);
        verify_report rep = verify_certificate(row.cert);
        CHECK(rep.valid);
        CHECK(rep.failures.empty());

        CHECK(row.cert.m == row.m);
        CHECK(row.cert.n == row.p);
        CHECK(row.p % 2 == 1);
        CHECK(row.p >= 3);

        // the vertex count is exactly the largest prime factor of m,
        // m is square-free and 3 mod 4: the tight odd cases
        CHECK(largest_prime_factor(row.m) == row.p);
        CHECK(is_squarefree(row.m));
        CHECK(row.m % 4 == 3);
        CHECK(row.cert.prov == provenance::Paper);
    }
}

TEST_CASE("small-m rows realize the minimal admissible vertex count") {
    // within source 1, each m appears with p = lpf(m), and p covers
    // every odd prime up to 13 at least once
    std::set<int> ps;
    for (const auto& row : load_corpus())
        if (row.source == 1) ps.insert(row.p);
    for (int p : {3, 5, 7, 11, 13}) CHECK(ps.count(p) == 1);
}

TEST_CASE("large-m rows include the deep search results") {
    const auto& rows = load_corpus();
    auto find_m = [&](i64 m) {
        auto it = std::find_if(rows.begin(), rows.end(),
                               [&](const corpus_row& r) { return r.m == m; });
        REQUIRE(it != rows.end());
        return *it;
    };

    CHECK(find_m(19).p == 19);
    CHECK(find_m(23).p == 23);
    CHECK(find_m(51).p == 17);
    CHECK(find_m(255255).p == 17);
    CHECK(find_m(1616615).p == 19);
    CHECK(find_m(111546435).p == 23);
    for (i64 m : {19LL, 23LL, 51LL, 255255LL, 1616615LL, 111546435LL})
        CHECK(find_m(m).source == 2);
}

TEST_CASE("loader output is stable across calls") {
    const auto& a = load_corpus();
    const auto& b = load_corpus();
    CHECK(&a == &b); // parsed and verified once, then cached
}

TEST_CASE("rows appear in the published order") {
    const auto& rows = load_corpus();
    CHECK(rows[0].m == 3);
    CHECK(rows[1].m == 15);
    CHECK(rows[2].m == 7);
    CHECK(rows.back().m == 111546435);

    // source-1 rows come before source-2 rows
    bool seen_large = false;
    for (const auto& row : rows) {
        if (row.source == 2) seen_large = true;
        if (seen_large) CHECK(row.source == 2);
    }
}

TEST_CASE("raw text and loaded rows agree") {
    const auto& rows = load_corpus();
    std::istringstream is(corpus_text());
    std::string line;
    size_t i = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        REQUIRE(i < rows.size());
        corpus_line cl = parse_corpus_line(line);
        CHECK(cl.m == rows[i].m);
        CHECK(cl.p == rows[i].p);
        CHECK(cl.source == rows[i].source);
        REQUIRE(cl.vectors.size() == rows[i].cert.vectors.size());
        for (size_t k = 0; k < cl.vectors.size(); ++k) {
            CHECK(cl.vectors[k].x == rows[i].cert.vectors[k].x);
            CHECK(cl.vectors[k].y == rows[i].cert.vectors[k].y);
        }
        ++i;
    }
    CHECK(i == rows.size());
}
