#include "eqgon/polygon.hpp"

#include <algorithm>
#include <set>

#include "eqgon/arith.hpp"

namespace eqgon {

polygon assemble_convex(const certificate& c) {
    certificate canon = canonicalize(c); // validates

    for (size_t i = 0; i + 1 < canon.vectors.size(); ++i)
        if (angle_compare(canon.vectors[i], canon.vectors[i + 1]) == 0)
            throw duplicate_direction{}; // impossible for distinct equal-norm vectors

    polygon poly;
    poly.m = canon.m;
    poly.side_sq = canon.side_sq;
    bvec at{0, 0};
    for (const bvec& e : canon.vectors) {
        poly.vertices.push_back(at);
        at.x += e.x;
        at.y += e.y;
    }
    // closure: the certificate sums to zero, so `at` is back at the origin
    if (!(at.x == 0 && at.y == 0)) throw invalid_certificate("edge cycle does not close");
    return poly;
}

std::vector<bvec> apply_fmap(const std::vector<bvec>& vs, const fmap_params& p, i64 m) {
    if (p.s == 0 && p.t == 0) throw std::invalid_argument("degenerate similarity");
    std::vector<bvec> out;
    out.reserve(vs.size());
    for (const bvec& v : vs)
        out.push_back({p.s * v.x + p.t * v.y * m, -(p.t * v.x) + p.s * v.y});
    return out;
}

certificate make_side_integral(const certificate& c) {
    certificate canon = canonicalize(c);
    fmap_params p{canon.vectors[0].x, canon.vectors[0].y};
    // scale_sq equals the norm of the chosen edge, i.e. side_sq itself:
    // new side_sq = side_sq^2, whose square root side_sq is integral.
    certificate out = make_certificate(canon.m, apply_fmap(canon.vectors, p, canon.m), c.prov);
    return canonicalize(out);
}

certificate descend_by_prime(const certificate& c, const mpz_class& q) {
    certificate out = c;
    for (bvec& v : out.vectors) {
        if (v.x % q != 0 || v.y % q != 0)
            throw not_divisible("(" + v.x.get_str() + ", " + v.y.get_str() +
                                ") is not divisible by " + q.get_str());
        v.x /= q;
        v.y /= q;
    }
    out.side_sq = c.side_sq / (q * q);
    return out;
}

certificate scale_certificate(const certificate& c, const mpz_class& t) {
    if (t < 1) throw std::invalid_argument("scale factor must be positive");
    certificate out = c;
    for (bvec& v : out.vectors) {
        v.x *= t;
        v.y *= t;
    }
    out.side_sq = c.side_sq * t * t;
    return out;
}

certificate reduce_primitive(const certificate& c) {
    verify_report rep = verify_certificate(c);
    if (!rep.valid) throw invalid_certificate("reduce_primitive: " + rep.failures.front());

    certificate out = c;
    mpz_class g = 0;
    for (const bvec& v : out.vectors) g = gcd(gcd(g, v.x), v.y);
    if (g > 1) {
        for (bvec& v : out.vectors) {
            v.x /= g;
            v.y /= g;
        }
        out.side_sq = c.side_sq / (g * g);
    }
    return out;
}

certificate extend_plus_two(const certificate& c, int t_budget) {
    verify_report rep = verify_certificate(c);
    if (!rep.valid) throw invalid_certificate("extend_plus_two: " + rep.failures.front());

    // The search below stays in 64-bit vector space; certificates that have
    // grown beyond it would need a norm enumeration past any sane budget.
    if (!c.side_sq.fits_slong_p())
        throw budget_exhausted("side too large for the extension scan");
    i64 side_sq = c.side_sq.get_si();

    for (int t = 1; t <= t_budget; ++t) {
        std::set<std::pair<mpz_class, mpz_class>> scaled;
        for (const bvec& v : c.vectors) scaled.insert({v.x * t, v.y * t});

        i128 Q = (i128)side_sq * t * t;
        vec best{0, 0};
        bool have = false;
        for (const vec& w : reps_of_norm(c.m, Q)) {
            if (scaled.count({w.x, w.y}) || scaled.count({-w.x, -w.y})) continue;
            if (!have || std::pair{w.y, w.x} < std::pair{best.y, best.x}) {
                best = w;
                have = true;
            }
        }
        if (!have) continue;

        std::vector<bvec> vs;
        for (const bvec& v : c.vectors) vs.push_back({v.x * t, v.y * t});
        vs.push_back({best.x, best.y});
        vs.push_back({-best.x, -best.y});
        return make_certificate(c.m, std::move(vs), provenance::Constructed);
    }
    throw budget_exhausted("no admissible vector pair up to scale " + std::to_string(t_budget));
}

certificate even_gon(i64 m, int n, i64 norm_cap) {
    if (m < 1 || !is_squarefree(m)) throw m_not_squarefree{};
    if (n < 4 || n % 2) throw std::invalid_argument("n must be even and at least 4");

    for (i64 Q = 1 + m; Q <= norm_cap; ++Q) {
        std::vector<vec> all = reps_of_norm(m, Q);
        if ((int)all.size() < n) continue;
        // one representative per antipodal class, lexicographically first
        std::set<std::pair<i64, i64>> chosen;
        for (const vec& v : all) {
            if (chosen.count({-v.x, -v.y})) continue;
            chosen.insert({v.x, v.y});
            if ((int)chosen.size() == n / 2) break;
        }
        if ((int)chosen.size() < n / 2) continue;

        std::vector<bvec> vs;
        for (auto& [x, y] : chosen) {
            vs.push_back({x, y});
            vs.push_back({-x, -y});
        }
        return make_certificate(m, std::move(vs), provenance::Constructed);
    }
    throw budget_exhausted("no squared norm below " + std::to_string(norm_cap) +
                           " carries " + std::to_string(n / 2) + " antipodal classes");
}

} // namespace eqgon
