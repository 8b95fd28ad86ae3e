#pragma once
// beta_curve: lifted beta curves of the (1,1) satellite patterns, generated
// procedurally from the (r,s) parameters, together with the puncture lifts
// and the delta arcs joining each w to the z of its cell.
//
// One fundamental period of the lift (period vector (0,-1)) consists of, in
// order: a high return strand crossing the whole width; a descent at the left
// margin; a low feed running under the column-0 cell; a hook rising through
// the column-0 delta arc (the one label gain per period) capped over z_0; a
// descent to the advance level; then j+1 waves, one per column 1..j+1, each
// capped over its w and dropping one label through its delta arc; finally a
// seam descent at the right margin into the next period.  Twisting a wave up
// i times threads the plunge back and forth through the delta arc with 2i
// additional crossings (alternating drop/gain, net unchanged), adding two
// turn-back arcs per twist and nothing else.
//
// All coordinates are dyadic constants chosen to stay clear of the puncture
// levels, of the alpha curve's horizontal levels (f = 87/128 + tiny), of the
// alpha bulge verticals (x = 3/8 and 5/8 mod 1), of the box-curve verticals
// (x = 11/32 and 21/32 mod 1, shifted by b/128), and of the alpha connector
// verticals (x = 5/64 and 59/64 mod 1).

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsat/alpha.hpp"
#include "qsat/geom.hpp"

namespace qsat {

struct RSParams {
    int r = 3;  // rainbow parameter
    int s = 1;  // stripe parameter
};

struct PatternParams {
    int i = 0;  // clasp twists
    int j = 1;  // winding number
    int n = 0;  // meridional twists (consumed by alpha_curve)
};

inline RSParams rs_parameters(const PatternParams& p) {
    if (p.i < 0 || p.j < 1) throw std::runtime_error("invalid pattern parameters");
    RSParams rs{2 + p.j + 2 * (p.j + 1) * p.i, p.j};
    if (std::gcd(2 * rs.r - 1, rs.s + 1) != 1)
        throw std::runtime_error("rs parameter invariant violated");
    return rs;
}

// A transversal crossing of the beta polyline with a delta arc, in order of
// occurrence along the polyline. `delta` is the label change (+1 or -1) when
// traversing the crossing in the polyline's direction.
struct DeltaCrossing {
    size_t seg = 0;  // polyline segment index containing the crossing
    Pt pos;
    int delta = 0;
};

struct BetaLift {
    std::vector<Pt> polyline;  // single connected lift, consecutive periods
    std::vector<Pt> w_lifts, z_lifts;
    std::vector<std::pair<Pt, Pt>> delta_arcs;
    std::vector<DeltaCrossing> crossings;  // sorted along the polyline
    Window window;
    int i = 0, j = 1;
    int periods = 0;
    size_t period_segments = 0;  // segments contributed by one period

    // Arc index (0-based along the polyline, arcs separated by crossings) of
    // a point lying on segment `seg` of the polyline.
    int arc_of(size_t seg, const Pt& p) const {
        int arc = 0;
        for (const auto& c : crossings) {
            if (c.seg < seg) { ++arc; continue; }
            if (c.seg > seg) break;
            // same segment: compare positions along the segment direction
            const Pt& a = polyline[seg];
            const Pt& b = polyline[seg + 1];
            Rat tp = (b.x - a.x).sign() != 0 ? (p.x - a.x) * (b.x - a.x).sign()
                                             : (p.y - a.y) * (b.y - a.y).sign();
            Rat tc = (b.x - a.x).sign() != 0 ? (c.pos.x - a.x) * (b.x - a.x).sign()
                                             : (c.pos.y - a.y) * (b.y - a.y).sign();
            if (tc < tp) ++arc;
        }
        return arc;
    }
};

namespace beta_detail {

// x positions (in 128ths, cell-relative) of the delta crossings of one wave
// with i twists: 2i+1 strictly decreasing values, alternating down/up
// starting and ending with a downward crossing.  They stay inside the delta
// arc's x range (32..96)/128 and avoid the bulge verticals 48 and 80 and
// the box verticals 44 and 84.
inline std::vector<int> crossing_xs(int i) {
    static const int right[] = {89, 83, 77, 71};
    static const int left[] = {50, 47, 41, 38, 35};
    std::vector<int> xs;
    for (int c = 0; c < 2 * i + 1; ++c) {
        if (c < 4) xs.push_back(right[c]);
        else if (c < 9) xs.push_back(left[c - 4]);
        else throw std::runtime_error("twist parameter too large for crossing schedule");
    }
    return xs;
}

// Append the waypoints of one period at base row `row`, starting from the
// seam point ((j+2)+26/128, row+92/128) which the caller has already pushed.
inline void append_period(std::vector<Pt>& P, int j, int i, int row) {
    Rat Y = Rat(row);
    auto pt = [&](Rat x, int y128) { P.push_back({x, Y + Rat(y128, 128)}); };
    Rat XL = Rat(-26, 128), XH = Rat(77, 128), XC = Rat(109, 128);
    Rat XS = Rat(j + 2) + Rat(26, 128);
    pt(XL, 92);   // return
    pt(XL, 13);   // entry descent
    pt(XH, 13);   // feed
    pt(XH, 90);   // hook rise (gains one label through delta_0)
    pt(XC, 90);   // tall cap over z_0
    pt(XC, 26);   // cap descent
    auto xs = crossing_xs(i);
    for (int k = 1; k <= j + 1; ++k) {
        Rat K = Rat(k);
        auto cpt = [&](int x128, int y128) { P.push_back({K + Rat(x128, 128), Y + Rat(y128, 128)}); };
        cpt(19, 26);  // advance
        cpt(19, 84);  // rise, left of w_k
        cpt(89, 84);  // cap over w_k
        if (i == 0) {
            cpt(89, 30);  // plunge, dropping one label through delta_k
        } else {
            cpt(89, 40);  // plunge (drop)
            for (int t = 1; t <= i; ++t) {
                cpt(xs[2 * t - 1], 40);                  // under-pass left
                cpt(xs[2 * t - 1], 78);                  // up leg (gain)
                cpt(xs[2 * t], 78);                      // over-pass left
                cpt(xs[2 * t], t == i ? 30 : 40);        // down leg (drop)
            }
        }
        cpt(91, 30);  // exit pass
        cpt(91, 26);  // descend to the advance level
    }
    pt(XS, 26);       // exit advance
    pt(XS, 92 - 128); // seam descent into the next period
}

}  // namespace beta_detail

// Assemble a lift from one fundamental period of waypoints.  `period` runs
// from a start point P0 to P0 - (0,1); consecutive periods are chained by
// vertical translation, rows r_max down to r_min.  The delta crossings are
// located exactly and the per-period label balance is verified.
inline BetaLift build_beta_lift_from_period(const std::vector<Pt>& period, int i, int j,
                                            const Window& w) {
    if (period.size() < 2) throw std::runtime_error("empty beta period");
    if (!(period.back().x == period.front().x) ||
        !(period.back().y == period.front().y - Rat(1)))
        throw std::runtime_error("beta period does not close up vertically");
    if (w.r_min >= w.r_max) throw std::runtime_error("window-too-small");

    BetaLift b;
    b.window = w;
    b.i = i;
    b.j = j;

    b.polyline.push_back({period.front().x, period.front().y + Rat(w.r_max)});
    for (int row = w.r_max; row >= w.r_min; --row) {
        for (size_t t = 1; t < period.size(); ++t)
            b.polyline.push_back({period[t].x, period[t].y + Rat(row)});
        ++b.periods;
    }
    b.period_segments = (b.polyline.size() - 1) / b.periods;

    for (int c = w.c_min; c <= w.c_max; ++c)
        for (int r = w.r_min - 2; r <= w.r_max + 2; ++r) {
            Pt wp{Rat(c) + Rat(1, 4), Rat(r) + Rat(3, 8)};
            Pt zp{Rat(c) + Rat(3, 4), Rat(r) + Rat(5, 8)};
            b.w_lifts.push_back(wp);
            b.z_lifts.push_back(zp);
            b.delta_arcs.push_back({wp, zp});
        }

    // locate the delta crossings exactly, in order along the polyline
    for (size_t t = 0; t + 1 < b.polyline.size(); ++t) {
        const Pt& a = b.polyline[t];
        const Pt& c = b.polyline[t + 1];
        std::vector<std::pair<Rat, Pt>> hits;  // (order along segment, point)
        for (const auto& [dw, dz] : b.delta_arcs) {
            // cheap reject on bounding boxes
            Rat lox = a.x < c.x ? a.x : c.x, hix = a.x < c.x ? c.x : a.x;
            Rat loy = a.y < c.y ? a.y : c.y, hiy = a.y < c.y ? c.y : a.y;
            if (hix < dw.x || dz.x < lox || hiy < dw.y || dz.y < loy) continue;
            auto hit = seg_intersect(a, c, dw, dz);
            if (!hit) continue;
            if (hit->degenerate)
                throw std::runtime_error("beta polyline touches a delta arc non-transversally");
            Rat along = (c.x - a.x).sign() != 0 ? (hit->p.x - a.x) * (c.x - a.x).sign()
                                                : (hit->p.y - a.y) * (c.y - a.y).sign();
            hits.push_back({along, hit->p});
        }
        std::sort(hits.begin(), hits.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        for (auto& [along, p] : hits) {
            // label change: sign of cross(delta direction, strand direction)
            Pt d{c.x - a.x, c.y - a.y};
            int delta = (Rat(2) * d.y - Rat(1) * d.x).sign();
            if (delta == 0) throw std::runtime_error("beta strand parallel to a delta arc");
            b.crossings.push_back({t, p, delta});
        }
    }

    // per-period label balance: labels must drop by j per row down
    long long total = 0;
    for (const auto& c : b.crossings) total += c.delta;
    if (total != -(long long)j * b.periods)
        throw std::runtime_error("beta label balance violated");
    return b;
}

inline BetaLift build_beta_lift(const RSParams& rs, const Window& w) {
    int j = rs.s;
    if (j < 1) throw std::runtime_error("invalid rs parameters");
    int denom = 2 * (j + 1);
    int num = rs.r - 2 - j;
    if (num < 0 || num % denom != 0) throw std::runtime_error("invalid rs parameters");
    int i = num / denom;

    if (w.c_min > -1 || w.c_max < j + 3 || w.r_min >= w.r_max)
        throw std::runtime_error("window-too-small");

    std::vector<Pt> period;
    period.push_back({Rat(j + 2) + Rat(26, 128), Rat(92, 128)});
    beta_detail::append_period(period, j, i, 0);
    return build_beta_lift_from_period(period, i, j, w);
}

inline std::map<int, int> alexander_arc_labels(const BetaLift& b) {
    std::map<int, int> labels;
    int label = 0;
    labels[0] = 0;
    for (size_t c = 0; c < b.crossings.size(); ++c) {
        label += b.crossings[c].delta;
        labels[(int)c + 1] = label;
    }
    return labels;
}

// O(N^2) embeddedness verification of the polyline (bounding-box filtered);
// intended for tests on moderate windows.
inline bool beta_embedded_check(const BetaLift& b) {
    const auto& P = b.polyline;
    for (size_t s = 0; s + 1 < P.size(); ++s)
        for (size_t t = s + 2; t + 1 < P.size(); ++t) {
            if (s == 0 && t + 2 == P.size()) { /* still disjoint ends */ }
            Rat slox = P[s].x < P[s + 1].x ? P[s].x : P[s + 1].x;
            Rat shix = P[s].x < P[s + 1].x ? P[s + 1].x : P[s].x;
            Rat tlox = P[t].x < P[t + 1].x ? P[t].x : P[t + 1].x;
            Rat thix = P[t].x < P[t + 1].x ? P[t + 1].x : P[t].x;
            if (shix < tlox || thix < slox) continue;
            Rat sloy = P[s].y < P[s + 1].y ? P[s].y : P[s + 1].y;
            Rat shiy = P[s].y < P[s + 1].y ? P[s + 1].y : P[s].y;
            Rat tloy = P[t].y < P[t + 1].y ? P[t].y : P[t + 1].y;
            Rat thiy = P[t].y < P[t + 1].y ? P[t + 1].y : P[t].y;
            if (shiy < tloy || thiy < sloy) continue;
            if (seg_intersect(P[s], P[s + 1], P[t], P[t + 1])) return false;
            // also reject collinear overlaps and shared interior points
            if (on_segment(P[s], P[s + 1], P[t]) || on_segment(P[s], P[s + 1], P[t + 1]))
                return false;
        }
    return true;
}

// The lift must also be disjoint from its own horizontal integer translates:
// on the torus the curve is embedded only if translating the lift by (k, 0)
// never meets the original.  Checks k = 1..kmax on the given lift.
inline bool beta_translates_disjoint(const BetaLift& b, int kmax) {
    const auto& P = b.polyline;
    for (int k = 1; k <= kmax; ++k) {
        Rat K{k};
        for (size_t s = 0; s + 1 < P.size(); ++s) {
            Pt a0{P[s].x + K, P[s].y}, a1{P[s + 1].x + K, P[s + 1].y};
            Rat slox = a0.x < a1.x ? a0.x : a1.x, shix = a0.x < a1.x ? a1.x : a0.x;
            Rat sloy = a0.y < a1.y ? a0.y : a1.y, shiy = a0.y < a1.y ? a1.y : a0.y;
            for (size_t t = 0; t + 1 < P.size(); ++t) {
                Rat tlox = P[t].x < P[t + 1].x ? P[t].x : P[t + 1].x;
                Rat thix = P[t].x < P[t + 1].x ? P[t + 1].x : P[t].x;
                if (shix < tlox || thix < slox) continue;
                Rat tloy = P[t].y < P[t + 1].y ? P[t].y : P[t + 1].y;
                Rat thiy = P[t].y < P[t + 1].y ? P[t + 1].y : P[t].y;
                if (shiy < tloy || thiy < sloy) continue;
                if (seg_intersect(a0, a1, P[t], P[t + 1])) return false;
                if (on_segment(P[t], P[t + 1], a0) || on_segment(P[t], P[t + 1], a1) ||
                    on_segment(a0, a1, P[t]) || on_segment(a0, a1, P[t + 1]))
                    return false;
            }
        }
    }
    return true;
}

}  // namespace qsat
