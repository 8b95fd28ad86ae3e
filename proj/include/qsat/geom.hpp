#pragma once
// Exact 2D computational geometry over rationals: segment intersection,
// simple-polygon tests and point-in-polygon counting.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsat/rational.hpp"

namespace qsat {

struct Pt {
    Rat x, y;
    Pt() {}
    Pt(Rat x_, Rat y_) : x(x_), y(y_) {}
    friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
    friend Pt operator+(const Pt& a, const Pt& b) { return Pt(a.x + b.x, a.y + b.y); }
    friend Pt operator-(const Pt& a, const Pt& b) { return Pt(a.x - b.x, a.y - b.y); }
    friend bool operator<(const Pt& a, const Pt& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

inline Rat cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}
inline Rat cross(const Pt& u, const Pt& v) { return u.x * v.y - u.y * v.x; }
inline int orient(const Pt& o, const Pt& a, const Pt& b) { return cross(o, a, b).sign(); }

inline bool on_segment(const Pt& a, const Pt& b, const Pt& p) {
    if (orient(a, b, p) != 0) return false;
    return !(p.x < std::min(a.x, b.x) || p.x > std::max(a.x, b.x) ||
             p.y < std::min(a.y, b.y) || p.y > std::max(a.y, b.y));
}

// Proper (interior) transverse intersection of open segments ab and cd.
// Degenerate contact (endpoint touching, collinear overlap) is reported via
// the `degenerate` flag so callers can reject non-generic configurations.
struct SegHit {
    Pt p;
    bool degenerate = false;
};

inline std::optional<SegHit> seg_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 == 0 && o2 == 0) {
        // collinear: overlap iff bounding boxes meet
        if (on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
            on_segment(c, d, b)) {
            SegHit h;
            h.p = c;
            h.degenerate = true;
            return h;
        }
        return std::nullopt;
    }
    bool touches = (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
                   (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
    if (touches) {
        SegHit h;
        h.p = o1 == 0 ? c : (o2 == 0 ? d : (o3 == 0 ? a : b));
        h.degenerate = true;
        return h;
    }
    if ((o1 > 0) == (o2 > 0) || (o3 > 0) == (o4 > 0)) return std::nullopt;
    Rat t = cross(c, d, a) / (cross(c, d, a) - cross(c, d, b));
    SegHit h;
    h.p = Pt(a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t);
    return h;
}

// Twice the signed area of a closed polygon (positive = counterclockwise).
inline Rat signed_area2(const std::vector<Pt>& poly) {
    Rat s(0);
    size_t n = poly.size();
    for (size_t k = 0; k + 1 < n; ++k) s += cross(poly[k], poly[k + 1]);
    s += cross(poly[n - 1], poly[0]);
    return s;
}

// Strict point-in-polygon (polygon given as vertex list, implicitly closed).
// Throws if the point lies on the boundary (non-generic configuration).
inline bool point_in_polygon(const std::vector<Pt>& poly, const Pt& p) {
    size_t n = poly.size();
    bool inside = false;
    for (size_t k = 0; k < n; ++k) {
        const Pt& a = poly[k];
        const Pt& b = poly[(k + 1) % n];
        if (a == b) continue;
        if (on_segment(a, b, p)) throw std::runtime_error("point_in_polygon: point on boundary");
        // ray cast towards +x
        bool ay = a.y > p.y, by = b.y > p.y;
        if (ay != by) {
            Rat xint = a.x + (b.x - a.x) * (p.y - a.y) / (b.y - a.y);
            if (xint > p.x) inside = !inside;
        }
    }
    return inside;
}

// Does the closed polygon (vertex list, consecutive duplicates allowed) have
// pairwise non-crossing edges (shared endpoints of adjacent edges allowed)?
inline bool polygon_is_simple(const std::vector<Pt>& poly_in) {
    std::vector<Pt> poly;
    for (const Pt& p : poly_in)
        if (poly.empty() || poly.back() != p) poly.push_back(p);
    if (poly.size() >= 2 && poly.front() == poly.back()) poly.pop_back();
    size_t n = poly.size();
    if (n < 3) return false;
    for (size_t k = 0; k < n; ++k) {
        Pt a = poly[k], b = poly[(k + 1) % n];
        for (size_t l = k + 1; l < n; ++l) {
            Pt c = poly[l], d = poly[(l + 1) % n];
            bool adjacent = (l == k + 1) || (k == 0 && l == n - 1);
            auto hit = seg_intersect(a, b, c, d);
            if (!hit) continue;
            if (adjacent) {
                // only the shared endpoint may touch
                if (!hit->degenerate) return false;
                // collinear overlap of adjacent edges => not simple unless a spike-free corner
                Pt shared = (l == k + 1) ? b : a;
                if (orient(a, b, l == k + 1 ? d : c) == 0) {
                    // collinear adjacent edges: allow straight continuation only
                    Pt prev = (l == k + 1) ? a : d;
                    Pt next = (l == k + 1) ? d : b;
                    if ((next.x - shared.x).sign() * (shared.x - prev.x).sign() < 0 ||
                        (next.y - shared.y).sign() * (shared.y - prev.y).sign() < 0)
                        return false;  // doubles back on itself
                }
                continue;
            }
            return false;
        }
    }
    return true;
}

}  // namespace qsat
