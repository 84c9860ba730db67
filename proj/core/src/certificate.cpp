#include "eqgon/certificate.hpp"

#include <algorithm>
#include <set>

#include "eqgon/arith.hpp"

namespace eqgon {

namespace {

mpz_class norm_sq_big(const bvec& v, i64 m) { return v.x * v.x + m * v.y * v.y; }

} // namespace

certificate make_certificate(i64 m, std::vector<bvec> vectors, provenance prov) {
    certificate c;
    c.m = m;
    c.n = (int)vectors.size();
    c.side_sq = vectors.empty() ? mpz_class(0) : norm_sq_big(vectors[0], m);
    c.vectors = std::move(vectors);
    c.prov = prov;
    return c;
}

verify_report verify_certificate(const certificate& c) {
    verify_report rep;
    auto fail = [&](std::string msg) {
        rep.valid = false;
        rep.failures.push_back(std::move(msg));
    };

    if (c.n != (int)c.vectors.size())
        fail("n field (" + std::to_string(c.n) + ") does not match vector count (" +
             std::to_string(c.vectors.size()) + ")");
    if ((int)c.vectors.size() < 3) fail("fewer than 3 vectors");
    if (c.m < 1 || !is_squarefree(c.m)) fail("m = " + std::to_string(c.m) + " is not square-free");

    std::set<std::pair<std::string, std::string>> seen;
    for (const bvec& v : c.vectors)
        if (!seen.insert({v.x.get_str(), v.y.get_str()}).second)
            fail("duplicate vector (" + v.x.get_str() + ", " + v.y.get_str() + ")");

    if (c.m >= 1) {
        for (const bvec& v : c.vectors) {
            mpz_class q = norm_sq_big(v, c.m);
            if (q != c.side_sq) {
                fail("vector (" + v.x.get_str() + ", " + v.y.get_str() + ") has squared norm " +
                     q.get_str() + ", expected " + c.side_sq.get_str());
                break;
            }
        }
    }
    if (c.side_sq <= 0) fail("side_sq must be positive");

    mpz_class sx = 0, sy = 0;
    for (const bvec& v : c.vectors) {
        sx += v.x;
        sy += v.y;
    }
    if (sx != 0 || sy != 0) fail("coordinate sums (" + sx.get_str() + ", " + sy.get_str() + ") are not zero");

    if (c.m % 4 == 3)
        rep.advisories.push_back("m = 3 (mod 4): odd polygon counts are admissible");
    else
        rep.advisories.push_back("m = " + std::to_string(((c.m % 4) + 4) % 4) +
                                 " (mod 4): only even polygon counts can exist");
    if (c.m >= 1) {
        i64 p = largest_prime_factor(c.m);
        rep.advisories.push_back("largest prime factor of m is " + std::to_string(p) +
                                 (c.n >= p ? ", at most n" : ", exceeding n"));
    }
    return rep;
}

int halfplane_class(const mpz_class& x, const mpz_class& y) {
    int sy = sgn(y);
    if (sy > 0) return 1;
    if (sy < 0) return 3;
    return sgn(x) > 0 ? 0 : 2;
}

int angle_compare(const bvec& u, const bvec& v) {
    int cu = halfplane_class(u.x, u.y), cv = halfplane_class(v.x, v.y);
    if (cu != cv) return cu < cv ? -1 : 1;
    mpz_class cross = u.x * v.y - v.x * u.y;
    int s = sgn(cross);
    return s > 0 ? -1 : (s < 0 ? 1 : 0);
}

namespace {

// Angular distance from direction (1,0): compare via the folded vectors
// (x, |y|), both of which live in the closed upper half-plane.
int axis_distance_compare(const bvec& u, const bvec& v) {
    bvec fu{u.x, abs(u.y)}, fv{v.x, abs(v.y)};
    int c = angle_compare(fu, fv);
    if (c != 0) return c;
    // same folded angle: prefer positive y
    int su = sgn(u.y), sv = sgn(v.y);
    if (su == sv) return 0;
    return su > sv ? -1 : 1;
}

} // namespace

certificate canonicalize(const certificate& c) {
    verify_report rep = verify_certificate(c);
    if (!rep.valid) throw invalid_certificate("canonicalize: " + rep.failures.front());

    certificate out = c;
    mpz_class g = 0;
    for (const bvec& v : out.vectors) g = gcd(gcd(g, v.x), v.y);
    if (g > 1)
        for (bvec& v : out.vectors) {
            v.x /= g;
            v.y /= g;
        }

    std::sort(out.vectors.begin(), out.vectors.end(),
              [](const bvec& a, const bvec& b) { return angle_compare(a, b) < 0; });

    size_t start = 0;
    for (size_t i = 1; i < out.vectors.size(); ++i)
        if (axis_distance_compare(out.vectors[i], out.vectors[start]) < 0) start = i;
    std::rotate(out.vectors.begin(), out.vectors.begin() + start, out.vectors.end());

    out.side_sq = out.vectors[0].x * out.vectors[0].x + out.m * out.vectors[0].y * out.vectors[0].y;
    return out;
}

int compare_canonical(const certificate& a, const certificate& b) {
    certificate ca = canonicalize(a), cb = canonicalize(b);
    int s = cmp(ca.side_sq, cb.side_sq);
    if (s != 0) return s < 0 ? -1 : 1;
    if (ca.n != cb.n) return ca.n < cb.n ? -1 : 1;
    for (int i = 0; i < ca.n; ++i) {
        int cx = cmp(ca.vectors[i].x, cb.vectors[i].x);
        if (cx != 0) return cx < 0 ? -1 : 1;
        int cy = cmp(ca.vectors[i].y, cb.vectors[i].y);
        if (cy != 0) return cy < 0 ? -1 : 1;
    }
    return 0;
}

} // namespace eqgon
