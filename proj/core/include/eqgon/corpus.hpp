#pragma once

#include <stdexcept>
#include <vector>

#include "eqgon/certificate.hpp"

namespace eqgon {

// The embedded witness table failed its checksum or re-verification; the
// build is unusable and the caller should abort.
struct corpus_corrupt : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct corpus_row {
    i64 m = 0;
    int p = 0;      // odd prime, the polygon's vertex count
    int source = 0; // 1: small-m table, 2: large-m table
    certificate cert;
};

// The 22 published equilateral p-gon witnesses (16 small-m rows, 6 large-m
// rows), checksummed and re-verified certificate by certificate on first
// load. Throws corpus_corrupt if anything fails.
const std::vector<corpus_row>& load_corpus();

// The raw embedded table, one corpus line per row (exposed for the CLI's
// --corpus listing and for checksum tests).
const char* corpus_text();

} // namespace eqgon
