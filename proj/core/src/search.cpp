#include "eqgon/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <vector>

#include "eqgon/arith.hpp"
#include "eqgon/polygon.hpp"
#include "eqgon/rational.hpp"
#include "eqgon/rep.hpp"

namespace eqgon {

const char* to_string(search_status s) {
    switch (s) {
        case search_status::found: return "Found";
        case search_status::proven_empty_within_n: return "ProvenEmptyWithinN";
        default: return "BudgetExhausted";
    }
}

namespace {

// ---------------------------------------------------------------- budget --

struct gate {
    std::atomic<u64> used{0};
    const u64 cap;
    std::atomic<bool> stop{false};
    explicit gate(u64 c) : cap(c) {}
    bool charge(u64 n) {
        if (stop.load(std::memory_order_relaxed)) return false;
        if (used.fetch_add(n, std::memory_order_relaxed) + n > cap) {
            stop.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
    bool ok() const { return !stop.load(std::memory_order_relaxed); }
};

// Worker-local tick batching keeps the shared atomic off the hot path.
struct meter {
    gate& g;
    u64 pending = 0;
    bool alive;
    explicit meter(gate& g_) : g(g_), alive(g_.ok()) {}
    meter(const meter&) = delete;
    bool tick() {
        if (++pending >= 1024) flush();
        return alive;
    }
    void flush() {
        if (pending) {
            alive = g.charge(pending) && alive;
            pending = 0;
        } else {
            alive = alive && g.ok();
        }
    }
    ~meter() {
        if (pending) g.charge(pending);
    }
};

// ------------------------------------------------------------ best certs --

int cmp_prepared(const certificate& a, const certificate& b) {
    int s = cmp(a.side_sq, b.side_sq);
    if (s != 0) return s < 0 ? -1 : 1;
    if (a.n != b.n) return a.n < b.n ? -1 : 1;
    for (int i = 0; i < a.n; ++i) {
        int cx = cmp(a.vectors[i].x, b.vectors[i].x);
        if (cx != 0) return cx < 0 ? -1 : 1;
        int cy = cmp(a.vectors[i].y, b.vectors[i].y);
        if (cy != 0) return cy < 0 ? -1 : 1;
    }
    return 0;
}

// Collects the minimum under the canonical order; inputs must already be
// canonical certificates.
struct best_tracker {
    std::optional<certificate> best;
    void offer(certificate c) {
        if (!best || cmp_prepared(c, *best) < 0) best = std::move(c);
    }
    void merge(best_tracker&& o) {
        if (o.best) offer(std::move(*o.best));
    }
};

certificate finish(i64 m, std::vector<bvec> vs, provenance pv) {
    return canonicalize(reduce_primitive(make_certificate(m, std::move(vs), pv)));
}

certificate cert_from_units(i64 m, const std::vector<std::array<i64, 3>>& units, provenance pv) {
    mpz_class L = 1;
    for (const auto& u : units) L = lcm(L, mpz_class(u[2]));
    std::vector<bvec> vs;
    vs.reserve(units.size());
    for (const auto& u : units) {
        mpz_class s = L / u[2];
        vs.push_back({u[0] * s, u[1] * s});
    }
    return finish(m, std::move(vs), pv);
}

// ------------------------------------------------- per-side candidate map --

// Primitive representations grouped by denominator. The vectors of squared
// norm k^2 are exactly the groups with c | k, scaled by k/c.
struct side_table {
    std::vector<i64> cs;                              // ascending denominators
    std::vector<std::vector<std::pair<i64, i64>>> ab; // (a, b >= 0) per denominator
    std::vector<std::vector<u32>> divisors;           // k -> group indices, built when N is small
    i64 N = 0;

    template <class Fn>
    void for_each_group_dividing(i64 k, Fn&& fn) const {
        if (!divisors.empty()) {
            for (u32 gi : divisors[(size_t)k]) fn(gi);
        } else {
            for (size_t gi = 0; gi < cs.size(); ++gi)
                if (k % cs[gi] == 0) fn((u32)gi);
        }
    }
};

side_table build_side_table(i64 m, i64 N) {
    side_table t;
    t.N = N;
    for (const rep& r : enumerate_reps(m, N)) {
        if (t.cs.empty() || t.cs.back() != r.c) {
            t.cs.push_back(r.c);
            t.ab.emplace_back();
        }
        t.ab.back().push_back({r.a, r.b});
    }
    if (N <= 2'000'000) {
        t.divisors.assign((size_t)N + 1, {});
        for (size_t gi = 0; gi < t.cs.size(); ++gi)
            for (i64 k = t.cs[gi]; k <= N; k += t.cs[gi]) t.divisors[(size_t)k].push_back((u32)gi);
    }
    return t;
}

// All lattice vectors of squared norm k^2 with y > 0 (conjugate-pair
// candidates), or the full circle including y <= 0 when `full` is set.
std::vector<vec> vectors_at_side(const side_table& tab, i64 k, bool full) {
    std::vector<vec> v;
    tab.for_each_group_dividing(k, [&](u32 gi) {
        i64 s = k / tab.cs[gi];
        for (auto [a, b] : tab.ab[gi]) {
            if (b > 0) {
                v.push_back({a * s, b * s});
                if (full) v.push_back({a * s, -b * s});
            } else if (full) {
                v.push_back({a * s, 0});
            }
        }
    });
    return v;
}

// ----------------------------------------------- windowed subset hash join --

// Enumerate t-subsets of ascending values xs with total in [lo, hi], pruning
// by exact prefix-sum windows; every qualifying subset reaches emit. Sums run
// in 128 bits so no side magnitude within i64 can wrap them.
template <class Emit>
bool subsets_in_window(const std::vector<i64>& xs, const std::vector<i128>& pre, int t, i128 lo,
                       i128 hi, meter& mt, std::vector<u32>& chosen, Emit&& emit, int i, i128 sum) {
    const int sz = (int)xs.size();
    if (t == 0) {
        if (sum >= lo && sum <= hi) emit(sum, chosen);
        return true;
    }
    for (int idx = i; idx <= sz - t; ++idx) {
        if (!mt.tick()) return false;
        i128 s1 = sum + xs[idx];
        // least completion: the t-1 entries right after idx
        if (s1 + (pre[idx + t] - pre[idx + 1]) > hi) break;
        // greatest completion: the last t-1 entries
        if (s1 + (pre[sz] - pre[sz - (t - 1)]) < lo) continue;
        chosen.push_back((u32)idx);
        bool go = subsets_in_window(xs, pre, t - 1, lo, hi, mt, chosen, emit, idx + 1, s1);
        chosen.pop_back();
        if (!go) return false;
    }
    return true;
}

std::vector<i128> prefix_of(const std::vector<i64>& xs) {
    std::vector<i128> pre(xs.size() + 1, 0);
    for (size_t i = 0; i < xs.size(); ++i) pre[i + 1] = pre[i] + xs[i];
    return pre;
}

i128 min_tail_sum(const std::vector<i128>& pre, int t) { return pre[(size_t)t]; }
i128 max_tail_sum(const std::vector<i128>& pre, int t) {
    return pre[pre.size() - 1] - pre[pre.size() - 1 - (size_t)t];
}

struct h128 {
    size_t operator()(u128 v) const { return splitmix64((u64)v) ^ splitmix64((u64)(v >> 64)); }
};

// Exhaustively solve sum(x_i) = target over `want` distinct entries of V,
// via a hash join over the two halves of the x-sorted list. Keys are the
// exact sums, so no false matches are possible.
bool solve_side_1d(const std::vector<vec>& V, int want, i64 target, gate& g,
                   const std::function<void(const std::vector<u32>&)>& on_solution) {
    const int v = (int)V.size();
    const int mid = v / 2;
    std::vector<i64> xl, xh;
    xl.reserve((size_t)mid);
    xh.reserve((size_t)(v - mid));
    for (int i = 0; i < v; ++i) (i < mid ? xl : xh).push_back(V[i].x);
    std::vector<i128> pl = prefix_of(xl), ph = prefix_of(xh);

    meter mt(g);
    std::vector<u32> chosen;
    for (int ka = 0; ka <= want; ++ka) {
        int kb = want - ka;
        if (ka > (int)xl.size() || kb > (int)xh.size()) continue;

        // a stored sum is useful only if kb picks from the high half can
        // still complete it to the target
        i128 lo = (i128)target - max_tail_sum(ph, kb);
        i128 hi = (i128)target - min_tail_sum(ph, kb);
        std::unordered_map<u128, std::vector<u32>, h128> stored;
        std::vector<u32> pool;
        bool go = subsets_in_window(
            xl, pl, ka, lo, hi, mt, chosen,
            [&](i128 sum, const std::vector<u32>& ch) {
                stored[(u128)sum].push_back((u32)pool.size());
                pool.insert(pool.end(), ch.begin(), ch.end());
            },
            0, 0);
        if (!go) return false;
        if (stored.empty()) continue;

        i128 lob = (i128)target - max_tail_sum(pl, ka);
        i128 hib = (i128)target - min_tail_sum(pl, ka);
        go = subsets_in_window(
            xh, ph, kb, lob, hib, mt, chosen,
            [&](i128 sum, const std::vector<u32>& ch) {
                auto it = stored.find((u128)((i128)target - sum));
                if (it == stored.end()) return;
                for (u32 off : it->second) {
                    std::vector<u32> sol(pool.begin() + off, pool.begin() + off + ka);
                    for (u32 hidx : ch) sol.push_back(hidx + (u32)mid);
                    on_solution(sol);
                }
            },
            0, 0);
        if (!go) return false;
    }
    mt.flush();
    return mt.alive;
}

// Two-coordinate variant: both sums must vanish. Windows act on x alone (the
// per-side lists are small); join keys are 64-bit hashes of the exact sum
// pair, and every hit is re-verified downstream, so a collision costs a
// check but cannot fabricate a solution.
bool solve_side_2d(const std::vector<vec>& V, int want, gate& g,
                   const std::function<void(const std::vector<u32>&)>& on_solution) {
    const int v = (int)V.size();
    const int mid = v / 2;
    std::vector<i64> xl, xh, yl, yh;
    for (int i = 0; i < v; ++i) {
        (i < mid ? xl : xh).push_back(V[i].x);
        (i < mid ? yl : yh).push_back(V[i].y);
    }
    std::vector<i128> pl = prefix_of(xl), ph = prefix_of(xh);
    auto pair_hash = [](i128 sx, i128 sy) { return hash_i128(sy, hash_i128(sx, 0)); };

    meter mt(g);
    std::vector<u32> chosen;
    for (int ka = 0; ka <= want; ++ka) {
        int kb = want - ka;
        if (ka > (int)xl.size() || kb > (int)xh.size()) continue;

        i128 lo = -max_tail_sum(ph, kb), hi = -min_tail_sum(ph, kb);
        std::unordered_map<u64, std::vector<u32>> stored;
        std::vector<u32> pool;
        bool go = subsets_in_window(
            xl, pl, ka, lo, hi, mt, chosen,
            [&](i128 sum, const std::vector<u32>& ch) {
                i128 sy = 0;
                for (u32 i : ch) sy += yl[i];
                stored[pair_hash(sum, sy)].push_back((u32)pool.size());
                pool.insert(pool.end(), ch.begin(), ch.end());
            },
            0, 0);
        if (!go) return false;
        if (stored.empty()) continue;

        i128 lob = -max_tail_sum(pl, ka), hib = -min_tail_sum(pl, ka);
        go = subsets_in_window(
            xh, ph, kb, lob, hib, mt, chosen,
            [&](i128 sum, const std::vector<u32>& ch) {
                i128 sy = 0;
                for (u32 i : ch) sy += yh[i];
                auto it = stored.find(pair_hash(-sum, -sy));
                if (it == stored.end()) return;
                for (u32 off : it->second) {
                    std::vector<u32> sol(pool.begin() + off, pool.begin() + off + ka);
                    for (u32 hidx : ch) sol.push_back(hidx + (u32)mid);
                    on_solution(sol);
                }
            },
            0, 0);
        if (!go) return false;
    }
    mt.flush();
    return mt.alive;
}

// -------------------------------------------------- phase A: integer scan --

// Ascending side scan. Workers pull sides from a shared counter, so every
// side below the least solved one gets fully processed before the scan ends;
// the merged result is then the canonical-least certificate regardless of
// the worker count. A budget trip voids only the minimality claim.
struct phase_a_outcome {
    std::optional<certificate> best;
    bool complete = true;
};

template <class SolveSide>
phase_a_outcome run_phase_a(i64 first, i64 step, i64 N, int jobs, gate& g, SolveSide&& solve) {
    std::atomic<i64> next{first};
    std::atomic<i64> best_k{std::numeric_limits<i64>::max()};
    std::mutex mx;
    std::map<i64, best_tracker> found;

    auto worker = [&] {
        for (;;) {
            i64 k = next.fetch_add(step, std::memory_order_relaxed);
            if (k > N || k > best_k.load(std::memory_order_relaxed)) break;
            best_tracker local;
            if (!solve(k, local)) break; // budget stop
            if (local.best) {
                i64 cur = best_k.load(std::memory_order_relaxed);
                while (k < cur && !best_k.compare_exchange_weak(cur, k)) {
                }
                std::lock_guard lk(mx);
                found[k].merge(std::move(local));
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> ts;
        ts.reserve((size_t)jobs);
        for (int i = 0; i < jobs; ++i) ts.emplace_back(worker);
        for (auto& t : ts) t.join();
    }

    phase_a_outcome out;
    out.complete = g.ok();
    if (!found.empty()) out.best = std::move(found.begin()->second.best);
    return out;
}

// ----------------------------------------------- phase B: rational hunts --

struct overflow_flag {
    std::atomic<bool> hit{false};
};

template <class Fr>
Fr lift(const frac128& f);
template <>
frac128 lift<frac128>(const frac128& f) {
    return f;
}
template <>
frac_big lift<frac_big>(const frac128& f) {
    return frac_big{to_mpq(f)};
}

// Symmetric hunt over unit ratios: choose `want` distinct conjugate-pair
// candidates whose x-ratios sum to exactly -1/2. Branch and bound on the
// ratio-sorted list with double windows (margins keep the pruning
// conservative), closing the last two levels exactly.
struct ratio_cand {
    i64 a, b, c; // b > 0, gcd(a, c) = 1
    double approx;
};

template <class Fr>
class sym_ratio_hunt {
  public:
    sym_ratio_hunt(const std::vector<ratio_cand>& c, int want, gate& g, overflow_flag& o)
        : cand_(c), want_(want), g_(g), ovf_(o) {
        exact_.reserve(cand_.size());
        for (const auto& r : cand_) exact_.push_back(frac128::make(r.a, r.c));
        pre_.assign(cand_.size() + 1, 0.0);
        for (size_t i = 0; i < cand_.size(); ++i) pre_[i + 1] = pre_[i] + cand_[i].approx;
    }

    // Emits index sets; the top level is strided by lane for workers.
    bool run(int lane, int lanes, const std::function<void(const std::vector<u32>&)>& emit) {
        meter mt(g_);
        std::vector<u32> chosen;
        bool go =
            pick(0, want_, lift<Fr>(frac128::make(-1, 2)), -0.5, lane, lanes, chosen, mt, emit);
        mt.flush();
        return go && mt.alive;
    }

  private:
    static constexpr double kEps = 1e-9;

    // choose t entries from indices >= i summing exactly to `need`
    bool pick(int i, int t, const Fr& need, double need_d, int lane, int lanes,
              std::vector<u32>& chosen, meter& mt,
              const std::function<void(const std::vector<u32>&)>& emit) {
        const int sz = (int)cand_.size();
        const bool top = chosen.empty() && lanes > 1;
        if (t == 0) {
            if (need.is_zero()) emit(chosen);
            return true;
        }
        if (t <= 2 && !top) {
            return t == 1 ? close_single(i, need, chosen, mt, emit)
                          : close_pair(i, need, chosen, mt, emit);
        }
        int idx0 = top ? i + lane : i;
        int step = top ? lanes : 1;
        for (int idx = idx0; idx <= sz - t; idx += step) {
            if (!mt.tick()) return false;
            // least completion rises with idx (ascending ratios): hard stop
            if (need_d < pre_[idx + t] - pre_[idx] - kEps) break;
            // greatest completion is the top t values, the same for all idx
            if (need_d > pre_[sz] - pre_[sz - t] + kEps) break;
            Fr need1;
            try {
                need1 = need + (-lift<Fr>(exact_[idx]));
            } catch (const overflow_error&) {
                ovf_.hit.store(true);
                return false;
            }
            chosen.push_back((u32)idx);
            bool go = pick(idx + 1, t - 1, need1, need_d - cand_[idx].approx, lane, lanes, chosen,
                           mt, emit);
            chosen.pop_back();
            if (!go) return false;
        }
        return true;
    }

    // exact lookup of a single ratio equal to `need` in the tail; ratios are
    // pairwise distinct (gcd(a, c) = 1 makes a/c already reduced), so at
    // most one index matches
    bool close_single(int from, const Fr& need, std::vector<u32>& chosen, meter& mt,
                      const std::function<void(const std::vector<u32>&)>& emit) {
        if (!mt.tick()) return false;
        int lo = from, hi = (int)cand_.size();
        try {
            while (lo < hi) {
                int mid = lo + (hi - lo) / 2;
                if (lift<Fr>(exact_[(size_t)mid]) < need)
                    lo = mid + 1;
                else
                    hi = mid;
            }
            if (lo < (int)cand_.size() && lift<Fr>(exact_[(size_t)lo]) == need) {
                chosen.push_back((u32)lo);
                emit(chosen);
                chosen.pop_back();
            }
        } catch (const overflow_error&) {
            ovf_.hit.store(true);
            return false;
        }
        return true;
    }

    // exact two-pointer for the final pair; distinct values make the
    // both-advance step on equality exhaustive
    bool close_pair(int from, const Fr& need, std::vector<u32>& chosen, meter& mt,
                    const std::function<void(const std::vector<u32>&)>& emit) {
        int lo = from, hi = (int)cand_.size() - 1;
        while (lo < hi) {
            if (!mt.tick()) return false;
            Fr psum;
            try {
                psum = lift<Fr>(exact_[(size_t)lo]) + lift<Fr>(exact_[(size_t)hi]);
            } catch (const overflow_error&) {
                ovf_.hit.store(true);
                return false;
            }
            if (psum == need) {
                chosen.push_back((u32)lo);
                chosen.push_back((u32)hi);
                emit(chosen);
                chosen.pop_back();
                chosen.pop_back();
                ++lo;
                --hi;
            } else if (psum < need) {
                ++lo;
            } else {
                --hi;
            }
        }
        return true;
    }

    const std::vector<ratio_cand>& cand_;
    std::vector<frac128> exact_;
    std::vector<double> pre_;
    int want_;
    gate& g_;
    overflow_flag& ovf_;
};

// General hunt: split the unit pool into half-planes. In a zero-sum n-subset
// with u vectors above the axis, each side's sum is the negation of the
// other's, a sum of min(u, n-u) unit vectors, so both coordinates stay
// within that radius; the window collapses the lopsided splits. One side is
// enumerated into a table keyed by a fingerprint of its exact sum, the other
// probes it; every hit is re-verified exactly, so fingerprint collisions
// cost a check but never fabricate a solution.

// The fingerprint of a rational is its value mod 2^61 - 1. Denominators are
// products of unit denominators, all far below the modulus, so they stay
// invertible, and equal sums always produce equal fingerprints.
constexpr u64 kFpMod = (1ULL << 61) - 1;

u64 fp_mul(u64 x, u64 y) { return (u64)((u128)x * y % kFpMod); }
u64 fp_add(u64 x, u64 y) {
    u64 s = x + y;
    return s >= kFpMod ? s - kFpMod : s;
}
u64 fp_neg(u64 x) { return x == 0 ? 0 : kFpMod - x; }
u64 fp_of(i64 v) {
    i64 r = v % (i64)kFpMod;
    return (u64)(r < 0 ? r + (i64)kFpMod : r);
}
u64 fp_inv(u64 x) {
    u64 r = 1, b = x;
    for (u64 e = kFpMod - 2; e; e >>= 1) {
        if (e & 1) r = fp_mul(r, b);
        b = fp_mul(b, b);
    }
    return r;
}

struct unit_entry {
    i64 a, sb, c;        // the unit (a/c, sb*sqrt(m)/c), sb carries the sign
    double xd, ayd;      // x and |y| as doubles, for the window prunes
    u64 am, bm, cm, cim; // residues mod 2^61-1, cim the inverse of c
};

// Per-suffix least and greatest t-term x sums, used as conservative windows.
class suffix_extrema {
  public:
    void build(const std::vector<unit_entry>& v, int tmax) {
        sz_ = (int)v.size();
        tmax_ = tmax;
        lo_.assign((size_t)(sz_ + 1) * (size_t)(tmax_ + 1), 0.0);
        hi_.assign((size_t)(sz_ + 1) * (size_t)(tmax_ + 1), 0.0);
        for (int i = sz_ - 1; i >= 0; --i)
            for (int t = 1; t <= tmax_; ++t) {
                double skip_lo = 1e300, skip_hi = -1e300;
                if (i + 1 + t <= sz_) {
                    skip_lo = at_lo(i + 1, t);
                    skip_hi = at_hi(i + 1, t);
                }
                if (i + t <= sz_) {
                    double take_lo = v[(size_t)i].xd + (t == 1 ? 0.0 : at_lo(i + 1, t - 1));
                    double take_hi = v[(size_t)i].xd + (t == 1 ? 0.0 : at_hi(i + 1, t - 1));
                    at_lo(i, t) = std::min(skip_lo, take_lo);
                    at_hi(i, t) = std::max(skip_hi, take_hi);
                } else {
                    at_lo(i, t) = skip_lo;
                    at_hi(i, t) = skip_hi;
                }
            }
    }
    double least(int i, int t) const {
        return t == 0 ? 0.0 : lo_[(size_t)i * (size_t)(tmax_ + 1) + (size_t)t];
    }
    double greatest(int i, int t) const {
        return t == 0 ? 0.0 : hi_[(size_t)i * (size_t)(tmax_ + 1) + (size_t)t];
    }

  private:
    double& at_lo(int i, int t) { return lo_[(size_t)i * (size_t)(tmax_ + 1) + (size_t)t]; }
    double& at_hi(int i, int t) { return hi_[(size_t)i * (size_t)(tmax_ + 1) + (size_t)t]; }
    std::vector<double> lo_, hi_;
    int sz_ = 0, tmax_ = 0;
};

class hemi_hunt {
  public:
    hemi_hunt(const std::vector<unit_entry>& up, const std::vector<unit_entry>& lo, int n)
        : up_(up), lo_(lo) {
        upx_.build(up_, n);
        lox_.build(lo_, n);
        prep(up_, upy_, uptail_, n);
        prep(lo_, loy_, lotail_, n);
    }

    static u64 key_hash(u64 fpx, u64 fpy) {
        return splitmix64(splitmix64(fpx ^ 0x9e3779b97f4a7c15ULL) ^ fpy);
    }

    // Enumerate t-subsets of one hemisphere whose coordinate sums can still
    // land inside [-w, w]; the sink gets the fingerprint of the exact sum
    // pair plus the picked indices.
    template <class Sink>
    bool enumerate(bool upper, int t, int w, int lane, int lanes, meter& mt, Sink&& sink) {
        std::vector<u32> chosen;
        chosen.reserve((size_t)std::max(t, 0));
        return walk(upper, t, (double)w + kEps, lane, lanes, 0, 0, 0, 1, 1, 0.0, 0.0, chosen, mt,
                    sink, t);
    }

  private:
    static constexpr double kEps = 1e-9;

    static void prep(const std::vector<unit_entry>& v, std::vector<double>& ay,
                     std::vector<double>& tail, int n) {
        ay.resize(v.size());
        for (size_t i = 0; i < v.size(); ++i) ay[i] = v[i].ayd;
        tail.assign((size_t)n + 1, 0.0);
        for (int k = 1; k <= n && k <= (int)v.size(); ++k)
            tail[(size_t)k] = tail[(size_t)k - 1] + ay[v.size() - (size_t)k];
    }

    // One hemisphere is one-signed in y, so a partial |y| sum only grows,
    // and the pick bound is monotone along the |y|-descending order: binary
    // search the first index whose lightest completion still fits. The
    // fingerprint state is the running sum nx/d, ny/d with d the product of
    // the chosen denominators and dim its inverse, all mod 2^61 - 1.
    template <class Sink>
    bool walk(bool upper, int t, double w, int lane, int lanes, int i, u64 nxm, u64 nym, u64 dm,
              u64 dim, double sxd, double syd, std::vector<u32>& chosen, meter& mt, Sink&& sink,
              int depth_total) {
        if (t == 0) return sink(fp_mul(nxm, dim), fp_mul(nym, dim), chosen);
        const std::vector<unit_entry>& side = upper ? up_ : lo_;
        const suffix_extrema& xt = upper ? upx_ : lox_;
        const std::vector<double>& ay = upper ? upy_ : loy_;
        const std::vector<double>& tail = upper ? uptail_ : lotail_;
        const int sz = (int)side.size();
        if (i > sz - t) return true;
        double room = w - syd - tail[(size_t)(t - 1)];
        if (room < 0) return true;
        int first = i;
        if (ay[(size_t)i] > room) {
            auto it = std::lower_bound(ay.begin() + i, ay.begin() + (sz - t + 1), room,
                                       std::greater<double>());
            first = (int)(it - ay.begin());
        }
        int step = 1;
        if (t == depth_total) {
            first += ((lane - first) % lanes + lanes) % lanes;
            step = lanes;
        }
        for (int idx = first; idx <= sz - t; idx += step) {
            if (!mt.tick()) return false;
            const unit_entry& e = side[(size_t)idx];
            double sx1 = sxd + e.xd;
            if (sx1 + xt.least(idx + 1, t - 1) > w) continue;
            if (sx1 + xt.greatest(idx + 1, t - 1) < -w) continue;
            chosen.push_back((u32)idx);
            bool go = walk(upper, t - 1, w, lane, lanes, idx + 1,
                           fp_add(fp_mul(nxm, e.cm), fp_mul(e.am, dm)),
                           fp_add(fp_mul(nym, e.cm), fp_mul(e.bm, dm)), fp_mul(dm, e.cm),
                           fp_mul(dim, e.cim), sx1, syd + e.ayd, chosen, mt, sink, depth_total);
            chosen.pop_back();
            if (!go) return false;
        }
        return true;
    }

    const std::vector<unit_entry>& up_;
    const std::vector<unit_entry>& lo_;
    suffix_extrema upx_, lox_;
    std::vector<double> upy_, loy_, uptail_, lotail_;
};

void validate_m(i64 m) {
    if (m < 1 || !is_squarefree(m)) throw m_not_squarefree{};
}

} // namespace

// ---------------------------------------------------------------- driver --

search_result find_zero_sum_symmetric(i64 m, int p, const search_budget& budget) {
    validate_m(m);
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be odd and at least 3");
    if (budget.N < 1) throw std::invalid_argument("N must be positive");
    const int j = (p - 1) / 2;
    const int jobs = std::max(1, budget.jobs);
    gate g(budget.max_nodes);

    side_table tab = build_side_table(m, budget.N);

    // phase A: integer sides ascending. The axis vector (k, 0) forces
    // 2 * sum(x_i) = -k over the chosen pairs, so odd sides cannot occur.
    auto solve = [&](i64 k, best_tracker& out) -> bool {
        std::vector<vec> V = vectors_at_side(tab, k, /*full=*/false);
        if ((int)V.size() < j) return g.ok();
        std::sort(V.begin(), V.end());
        return solve_side_1d(V, j, -k / 2, g, [&](const std::vector<u32>& sol) {
            std::vector<bvec> vs;
            vs.push_back({k, 0});
            for (u32 i : sol) {
                vs.push_back({V[i].x, V[i].y});
                vs.push_back({V[i].x, -V[i].y});
            }
            out.offer(finish(m, std::move(vs), provenance::Search));
        });
    };
    phase_a_outcome a = run_phase_a(2, 2, budget.N, jobs, g, solve);
    if (a.best) return {search_status::found, std::move(a.best), g.used.load()};
    if (!a.complete) return {search_status::budget_exhausted, std::nullopt, g.used.load()};

    // phase B: solutions whose unit denominators have lcm above N. One pair
    // candidate per representation with b > 0.
    std::vector<ratio_cand> cand;
    for (size_t gi = 0; gi < tab.cs.size(); ++gi)
        for (auto [aa, bb] : tab.ab[gi])
            if (bb > 0) cand.push_back({aa, bb, tab.cs[gi], (double)aa / (double)tab.cs[gi]});
    std::sort(cand.begin(), cand.end(), [](const ratio_cand& l, const ratio_cand& r) {
        return (i128)l.a * r.c < (i128)r.a * l.c;
    });

    auto run_b = [&]<class Fr>(std::type_identity<Fr>) -> std::pair<best_tracker, bool> {
        overflow_flag ovf;
        sym_ratio_hunt<Fr> hunt(cand, j, g, ovf);
        std::vector<best_tracker> per_lane((size_t)jobs);
        auto work = [&](int lane) {
            hunt.run(lane, jobs, [&](const std::vector<u32>& pick) {
                std::vector<std::array<i64, 3>> units{{1, 0, 1}}; // the axis
                for (u32 i : pick) {
                    units.push_back({cand[i].a, cand[i].b, cand[i].c});
                    units.push_back({cand[i].a, -cand[i].b, cand[i].c});
                }
                per_lane[(size_t)lane].offer(cert_from_units(m, units, provenance::Search));
            });
        };
        if (jobs <= 1) {
            work(0);
        } else {
            std::vector<std::thread> ts;
            ts.reserve((size_t)jobs);
            for (int i = 0; i < jobs; ++i) ts.emplace_back(work, i);
            for (auto& t : ts) t.join();
        }
        best_tracker best;
        for (auto& bt : per_lane) best.merge(std::move(bt));
        return {std::move(best), !ovf.hit.load()};
    };

    auto [bestb, exact_done] = run_b(std::type_identity<frac128>{});
    if (!exact_done && g.ok()) {
        // 128-bit fractions overflowed somewhere: redo the hunt in arbitrary
        // precision (recharging nodes only tightens the budget)
        auto [bigbest, big_done] = run_b(std::type_identity<frac_big>{});
        (void)big_done;
        bestb = std::move(bigbest);
    }
    if (bestb.best) return {search_status::found, std::move(bestb.best), g.used.load()};
    if (!g.ok()) return {search_status::budget_exhausted, std::nullopt, g.used.load()};
    return {search_status::proven_empty_within_n, std::nullopt, g.used.load()};
}

search_result find_zero_sum_general(i64 m, int n, const search_budget& budget) {
    validate_m(m);
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    if (budget.N < 1) throw std::invalid_argument("N must be positive");
    if (budget.N >= (i64)kFpMod) throw std::invalid_argument("N exceeds the supported range");
    const int jobs = std::max(1, budget.jobs);
    gate g(budget.max_nodes);

    side_table tab = build_side_table(m, budget.N);

    // phase A: integer sides ascending, full circle per side
    auto solve = [&](i64 k, best_tracker& out) -> bool {
        std::vector<vec> V = vectors_at_side(tab, k, /*full=*/true);
        if ((int)V.size() < n) return g.ok();
        std::sort(V.begin(), V.end());
        return solve_side_2d(V, n, g, [&](const std::vector<u32>& sol) {
            std::vector<bvec> vs;
            vs.reserve((size_t)n);
            for (u32 i : sol) vs.push_back({V[i].x, V[i].y});
            try {
                out.offer(finish(m, std::move(vs), provenance::Search));
            } catch (const invalid_certificate&) {
                // hash collision in the join: not a real solution
            }
        });
    };
    phase_a_outcome a = run_phase_a(1, 1, budget.N, jobs, g, solve);
    if (a.best) return {search_status::found, std::move(a.best), g.used.load()};
    if (!a.complete) return {search_status::budget_exhausted, std::nullopt, g.used.load()};

    // phase B: hemisphere join over the full unit pool
    const double root_m = std::sqrt((double)m);
    std::vector<unit_entry> upv, lov;
    for (const unit_vec& uv : unit_set(m, budget.N)) {
        i64 sb = uv.sign_b * uv.r.b;
        i64 a = uv.r.a, c = uv.r.c;
        unit_entry e{a,
                     sb,
                     c,
                     (double)a / (double)c,
                     (double)std::abs(sb) * root_m / (double)c,
                     fp_of(a),
                     fp_of(sb),
                     (u64)c,
                     fp_inv((u64)c)};
        if (sb > 0 || (sb == 0 && a > 0))
            upv.push_back(e);
        else
            lov.push_back(e);
    }
    auto by_abs_y_desc = [](const unit_entry& l, const unit_entry& r) {
        if (l.ayd != r.ayd) return l.ayd > r.ayd;
        if (l.c != r.c) return l.c < r.c;
        if (l.a != r.a) return l.a < r.a;
        return l.sb < r.sb;
    };
    std::sort(upv.begin(), upv.end(), by_abs_y_desc);
    std::sort(lov.begin(), lov.end(), by_abs_y_desc);

    auto log_choose = [](size_t nn, int kk) {
        return std::lgamma((double)nn + 1.0) - std::lgamma((double)kk + 1.0) -
               std::lgamma((double)(nn - (size_t)kk) + 1.0);
    };

    // Negating a solution flips both hemispheres, swapping the split u for
    // n - u, so scanning u <= n/2 and offering each hit with its negation
    // covers everything at half the cost.
    auto offer_both = [&](std::vector<std::array<i64, 3>> units, best_tracker& bt) {
        try {
            bt.offer(cert_from_units(m, units, provenance::Search));
        } catch (const invalid_certificate&) {
            return; // hash collision: the halves do not cancel
        }
        for (auto& t : units) {
            t[0] = -t[0];
            t[1] = -t[1];
        }
        bt.offer(cert_from_units(m, units, provenance::Search));
    };

    hemi_hunt hunt(upv, lov, n);
    best_tracker bestb;

    for (int u = 0; 2 * u <= n && g.ok(); ++u) {
        int l = n - u;
        if (u > (int)upv.size() || l > (int)lov.size()) continue;
        int w = std::min(u, l);
        bool hash_upper = log_choose(upv.size(), u) <= log_choose(lov.size(), l);
        const std::vector<unit_entry>& hash_side = hash_upper ? upv : lov;
        const std::vector<unit_entry>& probe_side = hash_upper ? lov : upv;
        int hash_t = hash_upper ? u : l;
        int probe_t = hash_upper ? l : u;

        std::vector<std::pair<u64, u32>> recs; // (key hash, pool offset)
        std::vector<u32> pool;
        {
            meter mt(g);
            bool go = hunt.enumerate(hash_upper, hash_t, w, 0, 1, mt,
                                     [&](u64 fpx, u64 fpy, const std::vector<u32>& ch) {
                                         recs.push_back(
                                             {hemi_hunt::key_hash(fpx, fpy), (u32)pool.size()});
                                         pool.insert(pool.end(), ch.begin(), ch.end());
                                         return true;
                                     });
            mt.flush();
            if (!go || !mt.alive) break;
        }
        if (recs.empty()) continue;
        std::sort(recs.begin(), recs.end());

        // small tables are cheap to probe directly; larger ones get a
        // one-bit filter in front so the common miss stays in cache
        u32 bloom_log = 0;
        std::vector<u64> bloom;
        if (recs.size() >= 4096) {
            bloom_log = 16;
            while (bloom_log < 28 && (size_t{1} << bloom_log) < recs.size() * 16) ++bloom_log;
            bloom.assign(size_t{1} << (bloom_log - 6), 0);
            for (const auto& r : recs) {
                u64 b = r.first & ((u64{1} << bloom_log) - 1);
                bloom[b >> 6] |= u64{1} << (b & 63);
            }
        }

        std::vector<best_tracker> per_lane((size_t)jobs);
        auto work = [&](int lane) {
            meter mt(g);
            hunt.enumerate(
                !hash_upper, probe_t, w, lane, jobs, mt,
                [&](u64 fpx, u64 fpy, const std::vector<u32>& ch) {
                    u64 want = hemi_hunt::key_hash(fp_neg(fpx), fp_neg(fpy));
                    if (!bloom.empty()) {
                        u64 b = want & ((u64{1} << bloom_log) - 1);
                        if (!(bloom[b >> 6] & (u64{1} << (b & 63)))) return true;
                    }
                    auto it = std::lower_bound(recs.begin(), recs.end(), std::pair{want, (u32)0});
                    for (; it != recs.end() && it->first == want; ++it) {
                        std::vector<std::array<i64, 3>> units;
                        units.reserve((size_t)n);
                        for (int q = 0; q < hash_t; ++q) {
                            const unit_entry& e = hash_side[pool[it->second + (u32)q]];
                            units.push_back({e.a, e.sb, e.c});
                        }
                        for (u32 iu : ch) {
                            const unit_entry& e = probe_side[iu];
                            units.push_back({e.a, e.sb, e.c});
                        }
                        offer_both(std::move(units), per_lane[(size_t)lane]);
                    }
                    return true;
                });
            mt.flush();
        };
        if (jobs <= 1) {
            work(0);
        } else {
            std::vector<std::thread> ts;
            ts.reserve((size_t)jobs);
            for (int i = 0; i < jobs; ++i) ts.emplace_back(work, i);
            for (auto& t : ts) t.join();
        }
        for (auto& bt : per_lane) bestb.merge(std::move(bt));
    }

    if (bestb.best) return {search_status::found, std::move(bestb.best), g.used.load()};
    if (!g.ok()) return {search_status::budget_exhausted, std::nullopt, g.used.load()};
    return {search_status::proven_empty_within_n, std::nullopt, g.used.load()};
}

} // namespace eqgon
