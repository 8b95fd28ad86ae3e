#pragma once
// alpha_curve: type-D structure of the n-framed companion complement and its
// immersed-multicurve realization, lifted to exact-coordinate polylines.
//
// Geometry conventions (shared with beta_curve / pairing_engine):
//  * fundamental cell [k,k+1) x [l,l+1) carries w at (k+1/4, l+3/8) and
//    z at (k+3/4, l+5/8); the delta arc is the straight segment w -> z.
//  * the essential curve crosses the vertical line x=L at heights
//    -n*L + A_m + f + m*sigma  (path index m along the staircase, f=87/128,
//    sigma tiny), so every crossing level lies strictly between the beta
//    curve's two topmost cap levels and all levels are distinct mod 1.
//  * staircase steps are realized as bulges hugging the line: U-steps bulge
//    right (around w's), V-steps bulge left (around z's); the curve then runs
//    to the next column with an unstable connector that climbs half of the
//    2tau-n rows beside the departing line (x = L + 5/64), runs across the
//    cell at a clear fractional level, and climbs the rest beside the next
//    line (x = L + 59/64); both verticals avoid every beta strand.

#include <string>
#include <vector>

#include "qsat/geom.hpp"
#include "qsat/library.hpp"

namespace qsat {

enum class Idem { I0, I1 };

struct TypeDGen {
    std::string id;
    Idem idempotent = Idem::I0;
};

// Reeb-chord labels of the torus algebra.
enum class Rho { R1, R2, R3, R12, R23, R123 };

inline const char* rho_name(Rho r) {
    switch (r) {
        case Rho::R1: return "rho1";
        case Rho::R2: return "rho2";
        case Rho::R3: return "rho3";
        case Rho::R12: return "rho12";
        case Rho::R23: return "rho23";
        default: return "rho123";
    }
}

struct TypeDEdge {
    std::string src, dst;
    Rho rho;
};

struct TypeDStructure {
    std::vector<TypeDGen> generators;
    std::vector<TypeDEdge> edges;
    // Construction payload carried along so the curve builder can verify the
    // chain patterns and emit the matching shape templates.
    CompanionSpec companion;
    int n = 0;
};

inline TypeDStructure build_type_d(const CompanionSpec& k, int n) {
    TypeDStructure d;
    d.companion = k;
    d.n = n;
    auto add_gen = [&](const std::string& id, Idem i) { d.generators.push_back({id, i}); };
    auto add_edge = [&](const std::string& s, const std::string& t, Rho r) {
        d.edges.push_back({s, t, r});
    };

    for (const auto& id : k.stair_ids) add_gen("xi." + id, Idem::I0);

    int chain_id = 0;
    // chain for one arrow src -> dst with the given variable and length
    auto emit_arrow = [&](const std::string& src, const std::string& dst, Var var, int len) {
        std::string tag = std::to_string(chain_id++);
        if (var == Var::V) {
            // vertical: xi(src) -rho1-> k1 <-rho23- k2 ... <-rho123- xi(dst)
            std::vector<std::string> ks;
            for (int m = 1; m <= len; ++m) {
                ks.push_back("kappa." + tag + "." + std::to_string(m));
                add_gen(ks.back(), Idem::I1);
            }
            add_edge("xi." + src, ks[0], Rho::R1);
            for (int m = 1; m < len; ++m) add_edge(ks[m], ks[m - 1], Rho::R23);
            add_edge("xi." + dst, ks[len - 1], Rho::R123);
        } else {
            // horizontal: eta(src) -rho3-> l1 -rho23-> ... -rho2-> eta(dst)
            std::vector<std::string> ls;
            for (int m = 1; m <= len; ++m) {
                ls.push_back("lambda." + tag + "." + std::to_string(m));
                add_gen(ls.back(), Idem::I1);
            }
            add_edge("xi." + src, ls[0], Rho::R3);
            for (int m = 0; m + 1 < len; ++m) add_edge(ls[m], ls[m + 1], Rho::R23);
            add_edge(ls[len - 1], "xi." + dst, Rho::R2);
        }
    };

    for (size_t t = 0; t < k.stair_steps.size(); ++t) {
        const auto& st = k.stair_steps[t];
        const std::string& a = k.stair_ids[t];
        const std::string& b = k.stair_ids[t + 1];
        if (st.forward)
            emit_arrow(a, b, st.variable, st.length);
        else
            emit_arrow(b, a, st.variable, st.length);
    }

    // box components
    for (size_t bx = 0; bx < k.boxes.size(); ++bx) {
        std::string base = "box" + std::to_string(bx) + ".";
        for (const char* g : {"p", "q", "r", "s"}) add_gen("xi." + base + g, Idem::I0);
        const auto& b = k.boxes[bx];
        emit_arrow(base + "p", base + "q", Var::U, b.u_exp);
        emit_arrow(base + "p", base + "r", Var::V, b.v_exp);
        emit_arrow(base + "q", base + "s", Var::V, b.v_exp);
        emit_arrow(base + "r", base + "s", Var::U, b.u_exp);
    }

    // unstable chain between xi0 (front of the path) and eta0 (back)
    std::string xi0 = "xi." + k.stair_ids.front();
    std::string eta0 = "xi." + k.stair_ids.back();
    int m = 2 * k.tau - n;
    if (m == 0) {
        add_edge(xi0, eta0, Rho::R12);
    } else if (m > 0) {
        std::vector<std::string> mus;
        for (int t = 1; t <= m; ++t) {
            mus.push_back("mu." + std::to_string(t));
            add_gen(mus.back(), Idem::I1);
        }
        add_edge(xi0, mus[0], Rho::R1);
        for (int t = 1; t < m; ++t) add_edge(mus[t], mus[t - 1], Rho::R23);
        add_edge(eta0, mus[m - 1], Rho::R3);
    } else {
        m = -m;
        std::vector<std::string> mus;
        for (int t = 1; t <= m; ++t) {
            mus.push_back("mu." + std::to_string(t));
            add_gen(mus.back(), Idem::I1);
        }
        add_edge(xi0, mus[0], Rho::R123);
        for (int t = 0; t + 1 < m; ++t) add_edge(mus[t], mus[t + 1], Rho::R23);
        add_edge(mus[m - 1], eta0, Rho::R2);
    }
    return d;
}

// ---------------------------------------------------------------------------

struct EssentialCurve {
    // waypoints of one fundamental period, from the xi0-crossing on x=0 to
    // the xi0-crossing on x=1 (shifted down by n); period vector is (1,-n).
    std::vector<Pt> period;
    int n = 0;
    int crossings = 1;  // meridian crossings per column (= hat_rank)
};

struct BoxCurve {
    std::vector<Pt> loop;  // closed, around column x=0, rows near 0
};

struct Multicurve {
    EssentialCurve gamma0;
    std::vector<BoxCurve> boxes;
    std::string companion;
    int n = 0;
};

namespace alpha_constants {
inline Rat f() { return Rat(87, 128); }           // base fractional level
inline Rat depth() { return Rat(3, 8); }          // staircase bulge depth
inline Rat bevel() { return Rat(1, 32); }         // bulge corner bevel
inline Rat box_depth(int b) { return Rat(11, 32) - Rat(b, 128); }
inline Rat box_bevel() { return Rat(1, 64); }
inline Rat conn_x() { return Rat(5, 64); }        // connector vertical offset
}  // namespace alpha_constants

inline Multicurve curve_from_type_d(const TypeDStructure& d) {
    const CompanionSpec& k = d.companion;
    int n = d.n;
    using namespace alpha_constants;

    // --- verification of the chain patterns -------------------------------
    // valence 2 everywhere (a curve, not a proper train track)
    {
        std::map<std::string, int> valence;
        for (const auto& g : d.generators) valence[g.id] = 0;
        for (const auto& e : d.edges) {
            valence.at(e.src) += 1;
            valence.at(e.dst) += 1;  // a self edge counts twice, as it should
        }
        for (const auto& [id, v] : valence)
            if (v != 2)
                throw std::runtime_error("train track is not a curve at generator " + id);
    }
    // unstable chain branch shape
    {
        int mu_count = 0;
        bool has_r12 = false, has_r1_from_xi0 = false, has_r123_from_xi0 = false;
        std::string xi0 = "xi." + k.stair_ids.front();
        for (const auto& g : d.generators)
            if (g.id.rfind("mu.", 0) == 0) ++mu_count;
        for (const auto& e : d.edges) {
            if (e.rho == Rho::R12) has_r12 = true;
            if (e.src == xi0 && e.dst.rfind("mu.", 0) == 0) {
                if (e.rho == Rho::R1) has_r1_from_xi0 = true;
                if (e.rho == Rho::R123) has_r123_from_xi0 = true;
            }
        }
        int m = 2 * k.tau - n;
        if (mu_count != std::abs(m))
            throw std::runtime_error("unstable chain length mismatch");
        if (m == 0 && !has_r12) throw std::runtime_error("missing rho12 unstable edge");
        if (m > 0 && !has_r1_from_xi0) throw std::runtime_error("unstable chain has wrong pattern");
        if (m < 0 && !has_r123_from_xi0) throw std::runtime_error("unstable chain has wrong pattern");
    }
    // staircase monotonicity and alternation (the supported curve templates)
    int R = (int)k.stair_a.size();
    for (size_t t = 0; t < k.stair_steps.size(); ++t) {
        Var expect = (t % 2 == 0) ? Var::U : Var::V;
        if (k.stair_steps[t].variable != expect)
            throw std::runtime_error("unsupported companion class: staircase steps do not alternate");
        int da = k.stair_a[t + 1] - k.stair_a[t];
        if (k.tau > 0 ? da >= 0 : (k.tau < 0 ? da <= 0 : true))
            throw std::runtime_error("unsupported companion class: staircase not monotone");
    }

    Multicurve mc;
    mc.companion = k.name;
    mc.n = n;
    mc.gamma0.n = n;
    mc.gamma0.crossings = R;

    Rat sigma = Rat(1, 4096 * R);
    auto h = [&](int m) { return Rat(k.stair_a[m]) + f() + sigma * m; };

    auto& pts = mc.gamma0.period;
    pts.push_back({Rat(0), h(0)});
    for (int m = 0; m + 1 < R; ++m) {
        Rat y1 = h(m), y2 = h(m + 1);
        Rat dir = y1 > y2 ? Rat(1) : Rat(-1);
        Rat s = k.stair_steps[m].variable == Var::U ? depth() : -depth();
        pts.push_back({s, y1 - dir * bevel()});
        pts.push_back({s, y2 + dir * bevel()});
        pts.push_back({Rat(0), y2});
    }
    // unstable connector to the next column: climb half the rows beside this
    // column's line, run across the cell at a clear level, climb the rest
    // beside the next line; every strand stays parallel to the grid.
    int mbar = k.stair_a[0] - n - k.stair_a[R - 1];
    int k1 = mbar >= 0 ? mbar / 2 : -((-mbar) / 2);
    if (R == 1 && mbar == 0) {
        pts.push_back({Rat(1), h(0)});  // straight horizontal line
    } else {
        Rat y_run = Rat(k.stair_a[R - 1] + k1) + f() + Rat(1, 8192 * R);
        pts.push_back({conn_x(), h(R - 1)});
        pts.push_back({conn_x(), y_run});
        pts.push_back({Rat(1) - conn_x(), y_run});
        pts.push_back({Rat(1) - conn_x(), h(0) - Rat(n)});
        pts.push_back({Rat(1), h(0) - Rat(n)});
    }

    for (size_t bx = 0; bx < k.boxes.size(); ++bx) {
        const auto& b = k.boxes[bx];
        Rat jb = Rat(1, 1024) * (int)(bx + 1);
        Rat split = (b.u_exp == b.v_exp) ? Rat(1, 8192) : Rat(0);
        Rat hp = Rat(b.a_top) + f() + jb + split;
        Rat hq = Rat(b.a_top + b.u_exp) + f() + jb;
        Rat hr = Rat(b.a_top - b.v_exp) + f() + jb;
        Rat hs = Rat(b.a_top + b.u_exp - b.v_exp) + f() + jb - split;
        Rat dep = box_depth((int)bx), bv = box_bevel();
        BoxCurve bc;
        auto bulge = [&](Rat ya, Rat yb, Rat sx) {
            Rat dir = ya > yb ? Rat(1) : Rat(-1);
            bc.loop.push_back({sx, ya - dir * bv});
            bc.loop.push_back({sx, yb + dir * bv});
            bc.loop.push_back({Rat(0), yb});
        };
        bc.loop.push_back({Rat(0), hq});
        bulge(hq, hp, dep);    // q -> p around w's (U edge)
        bulge(hp, hr, -dep);   // p -> r around z's (V edge)
        bulge(hr, hs, dep);    // r -> s around w's (U edge)
        bulge(hs, hq, -dep);   // s -> q around z's (V edge), closes the loop
        bc.loop.pop_back();    // drop the duplicate of the starting vertex
        mc.boxes.push_back(std::move(bc));
    }
    return mc;
}

// ---------------------------------------------------------------------------

struct Window {
    int c_min = 0, c_max = 1;  // column range (vertical lines x = c)
    int r_min = 0, r_max = 1;  // row range
};

struct LiftedCurve {
    std::vector<Pt> pts;
    bool closed = false;
    bool essential = false;
    int translate_col = 0, translate_row = 0;
};

struct LiftedCurves {
    std::vector<LiftedCurve> curves;
};

// Concatenate periods of gamma0 over the window's columns for translate row b.
inline LiftedCurve instantiate_gamma0(const EssentialCurve& g, const Window& w, int b) {
    LiftedCurve c;
    c.essential = true;
    c.translate_row = b;
    for (int L = w.c_min; L < w.c_max; ++L) {
        size_t start = (L == w.c_min) ? 0 : 1;  // period end == next period start
        for (size_t t = start; t < g.period.size(); ++t)
            c.pts.push_back({g.period[t].x + Rat(L), g.period[t].y - Rat(g.n) * L + Rat(b)});
    }
    return c;
}

inline LiftedCurves lift_alpha(const Multicurve& m, const Window& w) {
    if (w.c_min >= w.c_max || w.r_min >= w.r_max)
        throw std::runtime_error("window too small: empty column or row range");
    LiftedCurves out;
    // vertical extent of the b=0 essential translate over the window
    LiftedCurve base = instantiate_gamma0(m.gamma0, w, 0);
    Rat ymin = base.pts.front().y, ymax = ymin;
    for (const auto& p : base.pts) {
        if (p.y < ymin) ymin = p.y;
        if (p.y > ymax) ymax = p.y;
    }
    int b_lo = w.r_min - (int)ymax.floor() - 2;
    int b_hi = w.r_max - (int)ymin.floor() + 2;
    for (int b = b_lo; b <= b_hi; ++b)
        out.curves.push_back(instantiate_gamma0(m.gamma0, w, b));
    for (size_t bx = 0; bx < m.boxes.size(); ++bx)
        for (int L = w.c_min + 1; L < w.c_max; ++L)
            for (int b = w.r_min - 2; b <= w.r_max + 2; ++b) {
                LiftedCurve c;
                c.closed = true;
                c.translate_col = L;
                c.translate_row = b;
                for (const auto& p : m.boxes[bx].loop)
                    c.pts.push_back({p.x + Rat(L), p.y - Rat(m.n) * L + Rat(b)});
                out.curves.push_back(c);
            }
    return out;
}

// Count transversal crossings of the lifted curves with one vertical line.
inline int meridian_rank_check(const Multicurve& m) {
    // Count over a single fundamental period: crossings of x = 1 by gamma0
    // (the period runs from x=0 to x=1 and repeats), plus the crossings of
    // each box loop with its own column line x = 0.
    auto crossings_with = [](const std::vector<Pt>& pts, bool closed, const Rat& c) {
        int count = 0;
        size_t N = pts.size();
        size_t limit = closed ? N : N - 1;
        for (size_t t = 0; t < limit; ++t) {
            const Pt& a = pts[t];
            const Pt& b = pts[(t + 1) % N];
            int sa = (a.x - c).sign(), sb = (b.x - c).sign();
            if (sa == 0 || sb == 0) continue;  // handled at vertices below
            if (sa != sb) ++count;
        }
        // vertices exactly on the line: crossing iff neighbors on opposite sides
        for (size_t t = 0; t < N; ++t) {
            if ((pts[t].x - c).sign() != 0) continue;
            if (!closed && (t == 0 || t + 1 == N)) continue;
            const Pt& prv = pts[(t + N - 1) % N];
            const Pt& nxt = pts[(t + 1) % N];
            if ((prv.x - c).sign() * (nxt.x - c).sign() < 0) ++count;
        }
        return count;
    };
    Window w{0, 2, 0, 1};
    LiftedCurve g = instantiate_gamma0(m.gamma0, w, 0);
    int total = crossings_with(g.pts, false, Rat(1));
    for (const auto& b : m.boxes) total += crossings_with(b.loop, true, Rat(0));
    return total;
}

}  // namespace qsat
