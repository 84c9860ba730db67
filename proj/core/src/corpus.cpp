#include "eqgon/corpus.hpp"

#include <sstream>

#include "eqgon/arith.hpp"
#include "eqgon/serialize.hpp"

namespace eqgon {

namespace detail {
extern const char* const kCorpusText;
extern const unsigned long long kCorpusChecksum;
} // namespace detail

namespace {

u64 fnv1a(const char* s) {
    u64 h = 0xcbf29ce484222325ULL;
    for (; *s; ++s) {
        h ^= (unsigned char)*s;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::vector<corpus_row> build() {
    if (fnv1a(detail::kCorpusText) != detail::kCorpusChecksum)
        throw corpus_corrupt("embedded table checksum mismatch");

    std::vector<corpus_row> rows;
    std::istringstream is(detail::kCorpusText);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        corpus_line cl;
        try {
            cl = parse_corpus_line(line);
        } catch (const parse_error& e) {
            throw corpus_corrupt(std::string("embedded table row malformed: ") + e.what());
        }
        corpus_row row;
        row.m = cl.m;
        row.p = cl.p;
        row.source = cl.source;
        row.cert = make_certificate(cl.m, std::move(cl.vectors), provenance::Paper);

        auto reject = [&](const std::string& why) {
            throw corpus_corrupt("corpus row m=" + std::to_string(row.m) + ": " + why);
        };
        verify_report rep = verify_certificate(row.cert);
        if (!rep.valid) reject("fails verification: " + rep.failures.front());
        if (row.cert.n != row.p) reject("vector count differs from p");
        if (largest_prime_factor(row.m) != row.p) reject("p is not the largest prime factor");
        if (row.m % 4 != 3) reject("m is not 3 mod 4");
        if (!is_squarefree(row.m)) reject("m is not square-free");
        rows.push_back(std::move(row));
    }
    if (rows.size() != 22) throw corpus_corrupt("expected 22 rows");
    return rows;
}

} // namespace

const std::vector<corpus_row>& load_corpus() {
    static const std::vector<corpus_row> rows = build();
    return rows;
}

const char* corpus_text() { return detail::kCorpusText; }

} // namespace eqgon
