#include "eqgon/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace eqgon {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* provenance_name(provenance p) {
    switch (p) {
        case provenance::Paper: return "Paper";
        case provenance::Search: return "Search";
        default: return "Constructed";
    }
}

provenance provenance_from(const std::string& s) {
    if (s == "Paper") return provenance::Paper;
    if (s == "Search") return provenance::Search;
    if (s == "Constructed") return provenance::Constructed;
    throw parse_error("provenance: expected Paper, Search or Constructed, got \"" + s + "\"");
}

// strict decimal-string integer: optional sign, digits only
mpz_class int_from_string(const std::string& s, const char* field) {
    if (s.empty()) throw parse_error(std::string(field) + ": empty integer string");
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw parse_error(std::string(field) + ": sign without digits");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw parse_error(std::string(field) + ": not a decimal integer: \"" + s + "\"");
    return mpz_class(s);
}

std::string string_field(const ordered_json& j, const char* field) {
    if (!j.contains(field)) throw parse_error(std::string(field) + ": missing");
    if (!j[field].is_string())
        throw parse_error(std::string(field) + ": expected a decimal string");
    return j[field].get<std::string>();
}

i64 i64_from(const mpz_class& z, const char* field) {
    if (!z.fits_slong_p()) throw parse_error(std::string(field) + ": out of 64-bit range");
    return (i64)z.get_si();
}

} // namespace

std::string emit_certificate(const certificate& c) {
    ordered_json j;
    j["schema_version"] = "1";
    j["m"] = std::to_string(c.m);
    j["n"] = std::to_string(c.n);
    j["side_sq"] = c.side_sq.get_str();
    ordered_json vs = ordered_json::array();
    for (const bvec& v : c.vectors) {
        ordered_json pair = ordered_json::array();
        pair.push_back(v.x.get_str());
        pair.push_back(v.y.get_str());
        vs.push_back(std::move(pair));
    }
    j["vectors"] = std::move(vs);
    j["provenance"] = provenance_name(c.prov);
    return j.dump(2) + "\n";
}

certificate parse_certificate(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("top level: expected a JSON object");

    static const char* known[] = {"schema_version", "m", "n", "side_sq", "vectors", "provenance"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) throw parse_error("unknown field \"" + it.key() + "\"");
    }

    if (string_field(j, "schema_version") != "1")
        throw parse_error("schema_version: expected \"1\"");

    certificate c;
    c.m = i64_from(int_from_string(string_field(j, "m"), "m"), "m");
    mpz_class n_z = int_from_string(string_field(j, "n"), "n");
    if (!n_z.fits_sint_p()) throw parse_error("n: out of range");
    c.n = (int)n_z.get_si();
    c.side_sq = int_from_string(string_field(j, "side_sq"), "side_sq");
    c.prov = provenance_from(string_field(j, "provenance"));

    if (!j.contains("vectors") || !j["vectors"].is_array())
        throw parse_error("vectors: missing or not an array");
    for (size_t i = 0; i < j["vectors"].size(); ++i) {
        const auto& pair = j["vectors"][i];
        std::string at = "vectors[" + std::to_string(i) + "]";
        if (!pair.is_array() || pair.size() != 2)
            throw parse_error(at + ": expected a [x, y] pair");
        if (!pair[0].is_string() || !pair[1].is_string())
            throw parse_error(at + ": coordinates must be decimal strings");
        c.vectors.push_back({int_from_string(pair[0].get<std::string>(), at.c_str()),
                             int_from_string(pair[1].get<std::string>(), at.c_str())});
    }
    if ((int)c.vectors.size() != c.n)
        throw parse_error("n: " + std::to_string(c.n) + " does not match " +
                          std::to_string(c.vectors.size()) + " vectors");

    verify_report rep = verify_certificate(c);
    if (!rep.valid) {
        std::string msg = "certificate does not verify:";
        for (const std::string& f : rep.failures) msg += " " + f + ";";
        throw parse_error(msg);
    }
    return c;
}

std::string emit_corpus_line(const corpus_line& row) {
    std::ostringstream os;
    os << "m=" << row.m << " p=" << row.p << " src=" << row.source << " :";
    for (size_t i = 0; i < row.vectors.size(); ++i)
        os << (i ? "; " : " ") << row.vectors[i].x.get_str() << ","
           << row.vectors[i].y.get_str();
    return os.str();
}

corpus_line parse_corpus_line(const std::string& line) {
    auto fail = [&](const std::string& why) {
        throw parse_error("corpus line: " + why + " in \"" + line + "\"");
    };
    auto expect_key = [&](std::istringstream& is, const std::string& key) -> std::string {
        std::string tok;
        if (!(is >> tok)) fail("missing " + key);
        if (tok.rfind(key + "=", 0) != 0) fail("expected " + key + "=...");
        return tok.substr(key.size() + 1);
    };

    size_t colon = line.find(" : ");
    if (colon == std::string::npos) fail("missing \" : \" separator");
    std::istringstream head(line.substr(0, colon));

    corpus_line row;
    row.m = i64_from(int_from_string(expect_key(head, "m"), "m"), "m");
    mpz_class p_z = int_from_string(expect_key(head, "p"), "p");
    if (!p_z.fits_sint_p()) fail("p out of range");
    row.p = (int)p_z.get_si();
    mpz_class s_z = int_from_string(expect_key(head, "src"), "src");
    if (s_z != 1 && s_z != 2) fail("src must be 1 or 2");
    row.source = (int)s_z.get_si();
    std::string trailing;
    if (head >> trailing) fail("unexpected token \"" + trailing + "\"");

    std::string body = line.substr(colon + 3);
    std::istringstream vs(body);
    std::string item;
    while (std::getline(vs, item, ';')) {
        size_t comma = item.find(',');
        if (comma == std::string::npos) fail("vector \"" + item + "\" lacks a comma");
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
        };
        row.vectors.push_back({int_from_string(trim(item.substr(0, comma)), "vector x"),
                               int_from_string(trim(item.substr(comma + 1)), "vector y")});
    }
    if (row.vectors.empty()) fail("no vectors");
    return row;
}

std::string emit_svg(const polygon& poly) {
    const double root_m = std::sqrt((double)poly.m);
    std::vector<std::pair<double, double>> pts;
    pts.reserve(poly.vertices.size());
    for (const bvec& v : poly.vertices)
        pts.push_back({v.x.get_d(), -v.y.get_d() * root_m}); // SVG's y axis points down

    double minx = pts[0].first, maxx = pts[0].first;
    double miny = pts[0].second, maxy = pts[0].second;
    for (const auto& [x, y] : pts) {
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    }
    double w = maxx - minx, h = maxy - miny;
    if (w <= 0) w = 1;
    if (h <= 0) h = 1;
    double mx = 0.05 * w, my = 0.05 * h;

    auto num = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.10g", v);
        return std::string(buf);
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
       << num(minx - mx) << " " << num(miny - my) << " " << num(w + 2 * mx) << " "
       << num(h + 2 * my) << "\">\n";
    os << "  <path d=\"";
    for (size_t i = 0; i < pts.size(); ++i)
        os << (i ? " L " : "M ") << num(pts[i].first) << " " << num(pts[i].second);
    os << " Z\" fill=\"none\" stroke=\"black\" stroke-width=\""
       << num(std::max(w, h) / 200.0) << "\"/>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace eqgon
