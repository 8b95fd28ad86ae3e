#pragma once
// pairing_engine: Floer pairing of the lifted alpha curves with the lifted
// beta curve of the pattern.  One planar lift of the essential alpha curve
// (plus one translate of each closed box component per column) is intersected
// with one connected lift of beta; the intersection points are the generators
// and embedded bigons with convex corners, weighted by the punctures they
// cover, give the differential.  Alexander gradings are read off the beta
// curve's delta-arc labels, anchored by rank symmetry; Maslov gradings come
// from bigon indices, anchored through the localized homologies and the
// grading symmetry where possible.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "qsat/alpha.hpp"
#include "qsat/beta.hpp"
#include "qsat/complex.hpp"
#include "qsat/library.hpp"
#include "qsat/simplify.hpp"

namespace qsat {

namespace pairing_detail {

// Global conventions.  A bigon from src to dst has its disk on the left of
// the beta arc traversed src -> dst; U-powers count w punctures, V-powers
// count z punctures; intersection Alexander labels equal the beta arc labels.
inline constexpr int kBetaSign = 1;
inline constexpr bool kSrcBetaCCW = true;
inline constexpr bool kUCountsW = true;

struct FBox {
    double lox, loy, hix, hiy;
};

inline FBox fbox(const Pt& a, const Pt& b) {
    double ax = a.x.to_double(), ay = a.y.to_double();
    double bx = b.x.to_double(), by = b.y.to_double();
    const double pad = 1e-9;
    return {std::min(ax, bx) - pad, std::min(ay, by) - pad,
            std::max(ax, bx) + pad, std::max(ay, by) + pad};
}

inline bool fbox_overlap(const FBox& a, const FBox& b) {
    return !(a.hix < b.lox || b.hix < a.lox || a.hiy < b.loy || b.hiy < a.loy);
}

// Signed progress of p along segment a->b, comparable within the segment.
inline Rat along(const Pt& a, const Pt& b, const Pt& p) {
    return (b.x - a.x).sign() != 0 ? (p.x - a.x) * Rat((b.x - a.x).sign())
                                   : (p.y - a.y) * Rat((b.y - a.y).sign());
}

}  // namespace pairing_detail

struct Crossing {
    size_t bseg = 0;  // beta segment and progress along it
    Rat bpos;
    int curve = -1;  // index into the alpha curve list
    size_t aseg = 0;
    Rat apos;
    Pt p;
    int lbeta = 0;    // beta arc label at this point
    int beta_rank = 0;
    int a_index = 0;  // index in the per-curve list (alpha order)
};

// One geometric bigon, recorded at crossing level for grading constraints.
struct BigonRecord {
    int src = 0, dst = 0;  // crossing indices
    int n_w = 0, n_z = 0;
};

struct PairingStats {
    int crossings = 0;
    int components = 0;
    int bigons = 0;
    int mixed_bigons = 0;
    int reduced_rank = 0;
    int rows_used = 0;
};

struct PairingDiagram {
    BetaLift beta;
    std::vector<LiftedCurve> alpha;  // single-lift configuration
    Window window;
    std::vector<Crossing> xs;                // sorted along beta
    std::vector<std::vector<int>> on_curve;  // per curve, alpha order
    // odd-parity arrows: (src crossing, dst crossing, var, exp)
    std::map<std::tuple<int, int, Var, int>, int> arrow_parity;
    std::vector<BigonRecord> bigons;  // every found bigon, for gradings
    long long mixed_bigons = 0;
};

// The single-lift alpha configuration paired against one lift of beta: the
// b=0 translate of the essential curve spanning the beta curve's columns,
// plus, for each closed box component, one translate per column at the row
// the essential period dictates there.
inline std::vector<LiftedCurve> single_lift_alpha(const Multicurve& m, int j) {
    std::vector<LiftedCurve> out;
    Window cols{-1, j + 3, 0, 1};
    out.push_back(instantiate_gamma0(m.gamma0, cols, 0));
    for (size_t bx = 0; bx < m.boxes.size(); ++bx)
        for (int L = 0; L <= j + 2; ++L) {
            LiftedCurve c;
            c.closed = true;
            c.translate_col = L;
            c.translate_row = -m.n * L;
            for (const auto& p : m.boxes[bx].loop)
                c.pts.push_back({p.x + Rat(L), p.y - Rat(m.n) * L});
            out.push_back(c);
        }
    return out;
}

// Optional override for the beta-lift construction (used by geometry
// experiments and tests); the default builds the standard pattern curve.
using BetaBuilder = std::function<BetaLift(const RSParams&, const Window&)>;

inline PairingDiagram build_pairing(const Multicurve& mc, const RSParams& rs, int pad,
                                    const BetaBuilder& bb = {}) {
    using namespace pairing_detail;
    PairingDiagram d;
    d.alpha = single_lift_alpha(mc, rs.s);

    // beta rows: cover the alpha configuration's vertical extent plus margin
    Rat ymin = d.alpha[0].pts.front().y, ymax = ymin;
    for (const auto& c : d.alpha)
        for (const auto& q : c.pts) {
            if (q.y < ymin) ymin = q.y;
            if (q.y > ymax) ymax = q.y;
        }
    d.window = Window{-1, rs.s + 3, (int)ymin.floor() - pad, (int)ymax.floor() + 1 + pad};
    d.beta = bb ? bb(rs, d.window) : build_beta_lift(rs, d.window);

    // --- intersection points ---------------------------------------------
    const auto& BP = d.beta.polyline;
    std::vector<FBox> bboxes(BP.size() - 1);
    for (size_t s = 0; s + 1 < BP.size(); ++s) bboxes[s] = fbox(BP[s], BP[s + 1]);
    for (size_t c = 0; c < d.alpha.size(); ++c) {
        const auto& curve = d.alpha[c];
        const auto& AP = curve.pts;
        size_t n = AP.size();
        size_t limit = curve.closed ? n : n - 1;
        for (size_t s = 0; s < limit; ++s) {
            const Pt& a = AP[s];
            const Pt& b = AP[(s + 1) % n];
            if (a == b) continue;
            FBox ab = fbox(a, b);
            for (size_t t = 0; t + 1 < BP.size(); ++t) {
                if (!fbox_overlap(ab, bboxes[t])) continue;
                auto hit = seg_intersect(BP[t], BP[t + 1], a, b);
                if (!hit) continue;
                if (hit->degenerate)
                    throw std::runtime_error("non-generic alpha-beta intersection");
                Crossing x;
                x.bseg = t;
                x.bpos = along(BP[t], BP[t + 1], hit->p);
                x.curve = (int)c;
                x.aseg = s;
                x.apos = along(a, b, hit->p);
                x.p = hit->p;
                d.xs.push_back(x);
            }
        }
    }
    std::sort(d.xs.begin(), d.xs.end(), [](const Crossing& l, const Crossing& r) {
        if (l.bseg != r.bseg) return l.bseg < r.bseg;
        if (l.bpos != r.bpos) return l.bpos < r.bpos;
        return std::make_pair(l.curve, l.aseg) < std::make_pair(r.curve, r.aseg);
    });
    for (size_t k = 0; k < d.xs.size(); ++k) d.xs[k].beta_rank = (int)k;

    // per-curve lists in alpha order
    d.on_curve.assign(d.alpha.size(), {});
    for (size_t k = 0; k < d.xs.size(); ++k) d.on_curve[d.xs[k].curve].push_back((int)k);
    for (auto& lst : d.on_curve)
        std::sort(lst.begin(), lst.end(), [&](int l, int r) {
            const Crossing& a = d.xs[l];
            const Crossing& b = d.xs[r];
            if (a.aseg != b.aseg) return a.aseg < b.aseg;
            return a.apos < b.apos;
        });
    for (auto& lst : d.on_curve)
        for (size_t k = 0; k < lst.size(); ++k) d.xs[lst[k]].a_index = (int)k;

    // --- Alexander labels from the beta arcs -------------------------------
    auto labels = alexander_arc_labels(d.beta);
    for (auto& x : d.xs) x.lbeta = labels.at(d.beta.arc_of(x.bseg, x.p));
    return d;
}

namespace pairing_detail {

inline void append_open_arc(const std::vector<Pt>& pts, const Crossing& u, const Crossing& v,
                            std::vector<Pt>& out) {
    if (std::make_pair(u.aseg, u.apos) < std::make_pair(v.aseg, v.apos)) {
        for (size_t s = u.aseg + 1; s <= v.aseg; ++s) out.push_back(pts[s]);
    } else {
        for (size_t s = u.aseg; s > v.aseg; --s) out.push_back(pts[s]);
    }
}

inline void append_beta_arc(const std::vector<Pt>& pts, const Crossing& u, const Crossing& v,
                            std::vector<Pt>& out) {
    if (std::make_pair(u.bseg, u.bpos) < std::make_pair(v.bseg, v.bpos)) {
        for (size_t s = u.bseg + 1; s <= v.bseg; ++s) out.push_back(pts[s]);
    } else {
        for (size_t s = u.bseg; s > v.bseg; --s) out.push_back(pts[s]);
    }
}

// Closed-curve arc from u to v; forward follows increasing segment index.
inline void append_closed_arc(const std::vector<Pt>& pts, const Crossing& u, const Crossing& v,
                              bool forward, std::vector<Pt>& out) {
    size_t m = pts.size();
    if (forward) {
        if (u.aseg == v.aseg && u.apos < v.apos) return;
        size_t s = (u.aseg + 1) % m;
        while (true) {
            out.push_back(pts[s]);
            if (s == v.aseg) break;
            s = (s + 1) % m;
        }
    } else {
        if (u.aseg == v.aseg && u.apos > v.apos) return;
        size_t s = u.aseg;
        while (true) {
            out.push_back(pts[s]);
            if (s == (v.aseg + 1) % m) break;
            s = (s + m - 1) % m;
        }
    }
}

// Direction of segment s of a polyline (closed or open).
inline Pt seg_dir(const std::vector<Pt>& pts, size_t s, bool closed) {
    const Pt& a = pts[s];
    const Pt& b = pts[(s + 1) % pts.size()];
    (void)closed;
    return {b.x - a.x, b.y - a.y};
}

inline int cross_sign(const Pt& a, const Pt& b) { return (a.x * b.y - a.y * b.x).sign(); }

}  // namespace pairing_detail

// Enumerate embedded bigons with convex corners between same-curve crossing
// pairs, filling arrow parities and the bigon record list.
inline void enumerate_bigons(PairingDiagram& d) {
    using namespace pairing_detail;
    const auto& BP = d.beta.polyline;

    // puncture lookup boxes
    std::vector<FBox> wbox(d.beta.w_lifts.size()), zbox(d.beta.z_lifts.size());
    for (size_t k = 0; k < d.beta.w_lifts.size(); ++k) {
        const Pt& p = d.beta.w_lifts[k];
        double x = p.x.to_double(), y = p.y.to_double();
        wbox[k] = {x, y, x, y};
        const Pt& q = d.beta.z_lifts[k];
        double qx = q.x.to_double(), qy = q.y.to_double();
        zbox[k] = {qx, qy, qx, qy};
    }

    // per-curve sorted beta ranks, for the interval-parity prefilter
    std::vector<std::vector<int>> curve_ranks(d.alpha.size());
    for (size_t c = 0; c < d.alpha.size(); ++c) {
        for (int id : d.on_curve[c]) curve_ranks[c].push_back(d.xs[id].beta_rank);
        std::sort(curve_ranks[c].begin(), curve_ranks[c].end());
    }

    auto try_pair = [&](int x_id, int y_id, int closed_dir) {
        const Crossing& x = d.xs[x_id];
        const Crossing& y = d.xs[y_id];
        const auto& curve = d.alpha[x.curve];

        // parity of interior crossings along the beta arc with this curve
        {
            int lo = std::min(x.beta_rank, y.beta_rank);
            int hi = std::max(x.beta_rank, y.beta_rank);
            const auto& cr = curve_ranks[x.curve];
            auto a = std::upper_bound(cr.begin(), cr.end(), lo);
            auto b = std::lower_bound(cr.begin(), cr.end(), hi);
            if ((b - a) % 2 != 0) return;
        }
        // parity of interior crossings along the chosen alpha arc
        {
            int m = (int)d.on_curve[x.curve].size();
            int cnt;
            if (!curve.closed) {
                cnt = std::abs(x.a_index - y.a_index) - 1;
            } else if (closed_dir == 0) {
                cnt = (x.a_index - y.a_index - 1 + 2 * m) % m;  // forward arc y -> x
            } else {
                cnt = (y.a_index - x.a_index - 1 + 2 * m) % m;
            }
            if (cnt % 2 != 0) return;
        }

        // local corner convexity: both corner turns must have the same sign
        bool beta_fwd = y.beta_rank > x.beta_rank;
        bool alpha_fwd;  // travel direction of the arc y -> x along alpha
        if (!curve.closed)
            alpha_fwd = std::make_pair(y.aseg, y.apos) < std::make_pair(x.aseg, x.apos);
        else
            alpha_fwd = closed_dir == 0;
        Pt bdx = seg_dir(BP, x.bseg, false);
        Pt bdy = seg_dir(BP, y.bseg, false);
        Pt adx = seg_dir(curve.pts, x.aseg, curve.closed);
        Pt ady = seg_dir(curve.pts, y.aseg, curve.closed);
        auto flip = [](const Pt& v) { return Pt{Rat(0) - v.x, Rat(0) - v.y}; };
        Pt bout_x = beta_fwd ? bdx : flip(bdx);   // departing x along beta
        Pt bin_y = beta_fwd ? bdy : flip(bdy);    // arriving at y along beta
        Pt aout_y = alpha_fwd ? ady : flip(ady);  // departing y along alpha
        Pt ain_x = alpha_fwd ? adx : flip(adx);   // arriving at x along alpha
        int cx = cross_sign(ain_x, bout_x);
        int cy = cross_sign(bin_y, aout_y);
        if (cx == 0 || cx != cy) return;
        int o = cx;

        // build the candidate loop: x, beta arc to y, y, alpha arc back to x
        std::vector<Pt> loop;
        loop.push_back(x.p);
        append_beta_arc(BP, x, y, loop);
        size_t iy = loop.size();
        loop.push_back(y.p);
        if (!curve.closed)
            append_open_arc(curve.pts, y, x, loop);
        else
            append_closed_arc(curve.pts, y, x, closed_dir == 0, loop);

        if (signed_area2(loop).sign() != o) return;

        // simplicity: the two boundary arcs meet only at the corners
        size_t n = loop.size();
        {
            size_t bstart = 0, bend = iy;  // beta side: loop[0..iy]
            size_t astart = iy, aend = n;  // alpha side: loop[iy..n-1], wraps to loop[0]
            std::vector<FBox> bsegbox(bend - bstart);
            for (size_t s = bstart; s < bend; ++s) bsegbox[s] = fbox(loop[s], loop[s + 1]);
            for (size_t s = astart; s < aend; ++s) {
                const Pt& a0 = loop[s];
                const Pt& a1 = loop[(s + 1) % n];
                FBox ab = fbox(a0, a1);
                for (size_t t = bstart; t < bend; ++t) {
                    if (!fbox_overlap(ab, bsegbox[t])) continue;
                    auto hit = seg_intersect(loop[t], loop[t + 1], a0, a1);
                    if (!hit) continue;
                    if (hit->p == x.p || hit->p == y.p) continue;
                    return;  // extra contact: not an embedded bigon
                }
            }
        }

        // punctures covered
        FBox lb = fbox(loop[0], loop[0]);
        for (const Pt& p : loop) {
            double px = p.x.to_double(), py = p.y.to_double();
            lb.lox = std::min(lb.lox, px - 1e-9);
            lb.hix = std::max(lb.hix, px + 1e-9);
            lb.loy = std::min(lb.loy, py - 1e-9);
            lb.hiy = std::max(lb.hiy, py + 1e-9);
        }
        int n_w = 0, n_z = 0;
        for (size_t k = 0; k < d.beta.w_lifts.size(); ++k) {
            if (fbox_overlap(lb, wbox[k]) && point_in_polygon(loop, d.beta.w_lifts[k])) ++n_w;
            if (fbox_overlap(lb, zbox[k]) && point_in_polygon(loop, d.beta.z_lifts[k])) ++n_z;
        }

        // direction: the CCW boundary traverses beta from bfrom to bto
        int bfrom = o > 0 ? x_id : y_id;
        int bto = o > 0 ? y_id : x_id;
        int src = kSrcBetaCCW ? bfrom : bto;
        int dst = kSrcBetaCCW ? bto : bfrom;

        d.bigons.push_back({src, dst, n_w, n_z});
        int uexp = kUCountsW ? n_w : n_z;
        int vexp = kUCountsW ? n_z : n_w;
        if (uexp > 0 && vexp > 0) {
            ++d.mixed_bigons;
            return;  // vanishing coefficient in the UV-truncated ring
        }
        Var var = uexp > 0 ? Var::U : (vexp > 0 ? Var::V : Var::ONE);
        int exp = uexp > 0 ? uexp : vexp;
        d.arrow_parity[{src, dst, var, exp}] ^= 1;
    };

    for (size_t c = 0; c < d.alpha.size(); ++c) {
        const auto& lst = d.on_curve[c];
        bool closed = d.alpha[c].closed;
        for (size_t ii = 0; ii < lst.size(); ++ii)
            for (size_t kk = ii + 1; kk < lst.size(); ++kk) {
                if (!closed) {
                    try_pair(lst[ii], lst[kk], -1);
                } else {
                    try_pair(lst[ii], lst[kk], 0);
                    try_pair(lst[ii], lst[kk], 1);
                }
            }
    }
}

struct SatelliteOutput {
    BigradedComplex complex;
    PairingStats stats;
};

inline SatelliteOutput satellite_complex(const CompanionSpec& k, const PatternParams& p,
                                         int pad = 3, const BetaBuilder& bb = {}) {
    using namespace pairing_detail;
    RSParams rs = rs_parameters(p);
    Multicurve mc = curve_from_type_d(build_type_d(k, p.n));

    PairingDiagram d = build_pairing(mc, rs, pad, bb);
    enumerate_bigons(d);
    size_t N = d.xs.size();
    if (N == 0) throw std::runtime_error("empty pairing diagram");

    // --- Alexander gradings from the beta arc labels -----------------------
    std::vector<long long> A(N);
    for (size_t t = 0; t < N; ++t) A[t] = (long long)kBetaSign * d.xs[t].lbeta;
    for (const auto& b : d.bigons) {
        long long want = kUCountsW ? (long long)(b.n_z - b.n_w) : (long long)(b.n_w - b.n_z);
        if (A[b.src] - A[b.dst] != want)
            throw std::runtime_error("alexander grading inconsistency across a bigon");
    }

    // --- relative Maslov gradings over the bigon graph ---------------------
    std::vector<int> mcomp(N, -1);
    std::vector<long long> mrel(N, 0);
    int ncomp = 0;
    {
        struct MEdge {
            int to;
            long long diff;  // M[to] - M[from]
        };
        std::vector<std::vector<MEdge>> adj(N);
        for (const auto& b : d.bigons) {
            long long dm = 1 - 2 * (long long)(kUCountsW ? b.n_w : b.n_z);  // M(src)-M(dst)
            adj[b.src].push_back({b.dst, -dm});
            adj[b.dst].push_back({b.src, dm});
        }
        for (size_t s0 = 0; s0 < N; ++s0) {
            if (mcomp[s0] >= 0) continue;
            mcomp[s0] = ncomp;
            mrel[s0] = 0;
            std::vector<size_t> stack{s0};
            while (!stack.empty()) {
                size_t u = stack.back();
                stack.pop_back();
                for (const auto& e : adj[u]) {
                    long long val = mrel[u] + e.diff;
                    if (mcomp[e.to] < 0) {
                        mcomp[e.to] = ncomp;
                        mrel[e.to] = val;
                        stack.push_back((size_t)e.to);
                    } else if (mrel[e.to] != val) {
                        throw std::runtime_error("maslov grading inconsistency");
                    }
                }
            }
            ++ncomp;
        }
    }

    // canonical crossing order for deterministic cancellation
    std::vector<int> order(N);
    {
        std::vector<int> ids(N);
        for (size_t t = 0; t < N; ++t) ids[t] = (int)t;
        std::sort(ids.begin(), ids.end(), [&](int l, int r) {
            if (d.xs[l].p.x != d.xs[r].p.x) return d.xs[l].p.x < d.xs[r].p.x;
            return d.xs[l].p.y < d.xs[r].p.y;
        });
        for (size_t t = 0; t < N; ++t) order[ids[t]] = (int)t;
    }

    // --- arrows at crossing level, with grading verification ---------------
    std::map<std::pair<int, int>, Monomial> arrows;
    auto toggle = [&](int s, int t, const Monomial& m) {
        auto key = std::make_pair(s, t);
        auto it = arrows.find(key);
        if (it != arrows.end()) {
            if (!(it->second == m)) throw std::runtime_error("conflicting arrow coefficients");
            arrows.erase(it);
        } else {
            arrows.emplace(key, m);
        }
    };
    for (const auto& [key, parity] : d.arrow_parity) {
        if (!parity) continue;
        auto [s, t, var, exp] = key;
        Monomial m = var == Var::U ? Monomial::u(exp)
                                   : (var == Var::V ? Monomial::v(exp) : Monomial::one());
        toggle(s, t, m);
    }

    // --- cancel coefficient-1 arrows ---------------------------------------
    std::vector<bool> alive(N, true);
    while (true) {
        int bs = -1, bd = -1;
        for (const auto& [key, m] : arrows) {
            if (!m.is_one()) continue;
            if (bs < 0 || std::make_pair(order[key.first], order[key.second]) <
                              std::make_pair(order[bs], order[bd])) {
                bs = key.first;
                bd = key.second;
            }
        }
        if (bs < 0) break;
        std::vector<std::pair<int, Monomial>> ins, outs;
        for (const auto& [key, m] : arrows) {
            if (key.second == bd && key.first != bs) ins.push_back({key.first, m});
            if (key.first == bs && key.second != bd) outs.push_back({key.second, m});
        }
        arrows.erase({bs, bd});
        for (auto it = arrows.begin(); it != arrows.end();)
            if (it->first.first == bs || it->first.second == bs || it->first.first == bd ||
                it->first.second == bd)
                it = arrows.erase(it);
            else
                ++it;
        for (const auto& [w, m1] : ins)
            for (const auto& [z, m2] : outs) {
                if (w == bs || w == bd || z == bs || z == bd) continue;
                if (auto prod = m1.times(m2)) toggle(w, z, *prod);
            }
        alive[bs] = alive[bd] = false;
    }

    if (std::getenv("QSAT_DEBUG")) {
        std::ostringstream dbg;
        dbg << "[debug] crossings:\n";
        for (size_t t = 0; t < N; ++t)
            dbg << "  #" << t << " p=(" << d.xs[t].p.x.str() << "," << d.xs[t].p.y.str()
                << ") lb=" << d.xs[t].lbeta << " curve=" << d.xs[t].curve << " A=" << A[t]
                << " comp=" << mcomp[t] << " mrel=" << mrel[t]
                << " alive=" << (alive[t] ? 1 : 0) << "\n";
        dbg << "[debug] surviving arrows:\n";
        for (const auto& [key, m] : arrows)
            dbg << "  " << key.first << " -> " << key.second << " " << m.str() << "\n";
        std::fputs(dbg.str().c_str(), stderr);
    }

    // --- assemble, normalize Alexander by rank symmetry --------------------
    std::vector<int> survivors;
    for (size_t t = 0; t < N; ++t)
        if (alive[t]) survivors.push_back((int)t);
    if (survivors.empty()) throw std::runtime_error("empty reduced complex");
    long long amin = A[survivors[0]], amax = amin;
    for (int t : survivors) {
        amin = std::min(amin, A[t]);
        amax = std::max(amax, A[t]);
    }
    if ((amin + amax) % 2 != 0)
        throw std::runtime_error("symmetry-normalization-impossible: odd grading span");
    long long shift = -(amin + amax) / 2;
    {
        std::map<long long, int> ranks;
        for (int t : survivors) ranks[A[t] + shift]++;
        for (const auto& [a, r] : ranks)
            if (ranks.count(-a) == 0 || ranks.at(-a) != r) {
                std::ostringstream msg;
                msg << "symmetry-normalization-impossible: ranks";
                for (const auto& [aa, rr] : ranks) msg << " " << aa << ":" << rr;
                throw std::runtime_error(msg.str());
            }
    }

    // canonical generator names in (A, position) order
    std::vector<int> surv_sorted = survivors;
    std::sort(surv_sorted.begin(), surv_sorted.end(), [&](int l, int r) {
        if (A[l] != A[r]) return A[l] < A[r];
        return order[l] < order[r];
    });
    std::map<int, std::string> name;
    for (size_t t = 0; t < surv_sorted.size(); ++t)
        name[surv_sorted[t]] = "g" + std::to_string(t);

    BigradedComplex out;
    out.label = k.name + "_Q_" + std::to_string(p.i) + "_" + std::to_string(p.j) + "_n" +
                std::to_string(p.n);
    for (int t : surv_sorted) {
        Generator g;
        g.id = name[t];
        g.alexander = (int)(A[t] + shift);
        out.generators.push_back(g);
    }
    for (const auto& [key, m] : arrows)
        out.arrows.push_back({name.at(key.first), name.at(key.second), m});
    out.sort_canonical();

    // --- absolute Maslov ----------------------------------------------------
    // The V-localized free generator sits at M = 0 and the U-localized one at
    // M = 2A; components reachable from neither are pinned by the
    // (A, M) -> (-A, M - 2A) symmetry when that determines them uniquely.
    {
        std::map<int, long long> comp_off;  // component -> additive M offset
        auto crossing_of = [&](const std::string& id) {
            for (int t : survivors)
                if (name[t] == id) return t;
            throw std::runtime_error("internal: unknown generator id");
        };
        {
            SimpComplex s(out);
            s.simplify_phase(Var::V);
            auto free_v = s.singletons(Var::V);
            if (free_v.size() != 1)
                throw std::runtime_error("satellite complex is not a knot complex");
            int t = crossing_of(s.gens()[free_v[0]].id);
            comp_off[mcomp[t]] = -mrel[t];  // M = 0
        }
        {
            SimpComplex s(out);
            s.simplify_phase(Var::U);
            auto free_u = s.singletons(Var::U);
            if (free_u.size() == 1) {
                int t = crossing_of(s.gens()[free_u[0]].id);
                long long want = 2 * (A[t] + shift) - mrel[t];
                auto it = comp_off.find(mcomp[t]);
                if (it == comp_off.end())
                    comp_off[mcomp[t]] = want;
                else if (it->second != want)
                    throw std::runtime_error("maslov anchor inconsistency");
            }
        }
        std::set<int> floating;
        for (int t : survivors)
            if (!comp_off.count(mcomp[t])) floating.insert(mcomp[t]);
        if (floating.size() == 1) {
            // unique-fit search against the grading symmetry
            int fc = *floating.begin();
            long long span = 0;
            for (int t : survivors)
                span = std::max({span, std::llabs(A[t] + shift), std::llabs(mrel[t])});
            std::vector<long long> fits;
            for (long long c = -4 * span - 8; c <= 4 * span + 8; ++c) {
                std::map<std::pair<long long, long long>, int> cnt;
                for (int t : survivors) {
                    long long a = A[t] + shift;
                    long long m = mcomp[t] == fc ? mrel[t] + c : mrel[t] + comp_off.at(mcomp[t]);
                    cnt[{a, m}]++;
                }
                bool sym = true;
                for (const auto& [am, r] : cnt) {
                    auto it = cnt.find({-am.first, am.second - 2 * am.first});
                    if (it == cnt.end() || it->second != r) {
                        sym = false;
                        break;
                    }
                }
                if (sym) fits.push_back(c);
            }
            if (fits.size() == 1) comp_off[fc] = fits[0];
        }
        for (int t : survivors)
            if (comp_off.count(mcomp[t]))
                out.find(name[t])->maslov = (int)(mrel[t] + comp_off.at(mcomp[t]));
        // other components keep unset Maslov gradings
    }

    SatelliteOutput res;
    res.complex = out;
    res.stats.crossings = (int)N;
    res.stats.components = ncomp;
    res.stats.bigons = (int)d.bigons.size();
    res.stats.mixed_bigons = (int)d.mixed_bigons;
    res.stats.reduced_rank = (int)survivors.size();
    res.stats.rows_used = d.window.r_max - d.window.r_min + 1;
    return res;
}

}  // namespace qsat
