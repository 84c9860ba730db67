#pragma once

#include <stdexcept>
#include <string>

#include "eqgon/certificate.hpp"
#include "eqgon/polygon.hpp"

namespace eqgon {

// Malformed or inconsistent input text; the message carries field context.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Certificate documents are JSON objects
//   {"schema_version": "1", "m": ..., "n": ..., "side_sq": ..., "vectors":
//    [["x","y"], ...], "provenance": "Paper"|"Search"|"Constructed"}
// with every integer written as a decimal string, so consumers limited to
// 64-bit numbers survive the large corpus coordinates. parse rejects unknown
// fields and re-verifies the certificate, so a document that parses is
// always a genuine witness.
std::string emit_certificate(const certificate& c);
certificate parse_certificate(const std::string& text);

// Corpus rows travel as single lines:  m=<int> p=<int> src=<1|2> : x,y; x,y; ...
// with the vector list fully sign-expanded.
struct corpus_line {
    i64 m = 0;
    int p = 0;
    int source = 0; // 1 or 2
    std::vector<bvec> vectors;
};
std::string emit_corpus_line(const corpus_line& row);
corpus_line parse_corpus_line(const std::string& line);

// Stroke-only SVG 1.1 document with a single closed path through the
// polygon's vertices; the irrational y scale enters only here, as floating
// point, with the viewport padded 5% beyond the bounding box.
std::string emit_svg(const polygon& poly);

} // namespace eqgon
