#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "qsat/beta.hpp"

using namespace qsat;

static BetaLift make_lift(int i, int j, Window w) {
    return build_beta_lift(rs_parameters({i, j, 0}), w);
}

// local maxima of the polyline: horizontal strands entered from below and
// left downward (the rainbow caps)
static int count_caps(const BetaLift& b) {
    int caps = 0;
    const auto& P = b.polyline;
    for (size_t t = 1; t + 2 < P.size(); ++t) {
        if (P[t].y != P[t + 1].y) continue;      // not horizontal
        if (P[t].x == P[t + 1].x) continue;
        if (P[t - 1].y < P[t].y && P[t + 2].y < P[t + 1].y) ++caps;
    }
    return caps;
}

// upward turn-backs of the twist regions: horizontal under-pass strands at
// the under-pass level with both neighbours ascending
static int count_under_turns(const BetaLift& b) {
    int turns = 0;
    const auto& P = b.polyline;
    for (size_t t = 1; t + 2 < P.size(); ++t) {
        if (P[t].y != P[t + 1].y) continue;
        if (P[t].x == P[t + 1].x) continue;
        Rat fr = P[t].y - Rat(P[t].y.floor());
        if (fr != Rat(40, 128)) continue;
        if (P[t - 1].y > P[t].y && P[t + 2].y > P[t + 1].y) ++turns;
    }
    return turns;
}

TEST_CASE("rs parameters of the pattern family") {
    RSParams m = rs_parameters({0, 1, 0});
    CHECK(m.r == 3);
    CHECK(m.s == 1);
    RSParams a = rs_parameters({0, 2, 0});
    CHECK(a.r == 4);
    CHECK(a.s == 2);
    RSParams b = rs_parameters({1, 1, 0});
    CHECK(b.r == 7);
    CHECK(b.s == 1);
    for (int i = 0; i <= 4; ++i)
        for (int j = 1; j <= 5; ++j) {
            RSParams rs = rs_parameters({i, j, 0});
            CHECK(std::gcd(2 * rs.r - 1, rs.s + 1) == 1);
        }
    CHECK_THROWS(rs_parameters({-1, 1, 0}));
    CHECK_THROWS(rs_parameters({0, 0, 0}));
}

TEST_CASE("windows that cannot hold the curve are rejected") {
    CHECK_THROWS_WITH(make_lift(0, 1, Window{0, 4, -2, 2}), "window-too-small");
    CHECK_THROWS_WITH(make_lift(0, 1, Window{-1, 3, -2, 2}), "window-too-small");
    CHECK_THROWS_WITH(make_lift(0, 1, Window{-1, 4, 1, 1}), "window-too-small");
    CHECK_NOTHROW(make_lift(0, 1, Window{-1, 4, -2, 2}));
}

TEST_CASE("the lift is periodic with period vector (0,-1)") {
    for (int i : {0, 2})
        for (int j : {1, 3}) {
            auto b = make_lift(i, j, Window{-1, j + 3, -2, 2});
            const auto& P = b.polyline;
            size_t per = b.period_segments;
            REQUIRE(per > 0);
            for (size_t t = 0; t + per < P.size(); ++t) {
                CHECK(P[t + per].x == P[t].x);
                CHECK(P[t + per].y + Rat(1) == P[t].y);
            }
        }
}

TEST_CASE("Mazur lift: two waves, three label crossings per period") {
    auto b = make_lift(0, 1, Window{-1, 4, -2, 2});
    CHECK(b.periods == 5);
    // crossings per period: one gain at the hook, one drop per wave
    CHECK((int)b.crossings.size() == 3 * b.periods);
    int gains = 0, drops = 0;
    for (auto& c : b.crossings) (c.delta > 0 ? gains : drops)++;
    CHECK(gains == b.periods);
    CHECK(drops == 2 * b.periods);
    // rainbows: r-1 = 2 wave caps plus the end rainbow
    CHECK(count_caps(b) == 3 * b.periods);
}

TEST_CASE("wave and rainbow counts follow the rs parameters") {
    for (int i = 0; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            auto rs = rs_parameters({i, j, 0});
            auto b = make_lift(i, j, Window{-1, j + 3, 0, 2});
            CHECK((int)b.crossings.size() == ((j + 1) * (2 * i + 1) + 1) * b.periods);
            // each twist contributes one cap (over-turn) and one under-turn;
            // caps + under-turns = r per period (r-1 rainbows + end rainbow)
            CHECK(count_caps(b) == ((j + 1) * (i + 1) + 1) * b.periods);
            CHECK(count_under_turns(b) == (j + 1) * i * b.periods);
            CHECK(count_caps(b) + count_under_turns(b) == rs.r * b.periods);
            long long net = 0;
            for (auto& c : b.crossings) net += c.delta;
            CHECK(net == -(long long)j * b.periods);
        }
}

TEST_CASE("arc labels decrease rightward and drop by the winding number per row") {
    auto b = make_lift(0, 2, Window{-1, 5, -1, 2});
    auto labels = alexander_arc_labels(b);
    CHECK((int)labels.size() == (int)b.crossings.size() + 1);
    CHECK(labels.at(0) == 0);
    // per-period deltas: one gain then j+1 drops
    int per = 2 + 2;  // j + 2 crossings per period
    for (int p = 0; p < b.periods; ++p) {
        CHECK(b.crossings[p * per].delta == 1);
        for (int c = 1; c < per; ++c) CHECK(b.crossings[p * per + c].delta == -1);
        CHECK(labels.at((p + 1) * per) == -2 * (p + 1));  // j per row
    }
}

TEST_CASE("twisting up preserves the label set on each period") {
    for (int j : {1, 2}) {
        std::set<int> base;
        auto b0 = make_lift(0, j, Window{-1, j + 3, 0, 2});
        auto l0 = alexander_arc_labels(b0);
        int per0 = (int)b0.crossings.size() / b0.periods;
        for (int c = 0; c <= per0; ++c) base.insert(l0.at(c));
        for (int i : {1, 2, 3}) {
            auto b = make_lift(i, j, Window{-1, j + 3, 0, 2});
            auto l = alexander_arc_labels(b);
            int per = (int)b.crossings.size() / b.periods;
            std::set<int> got;
            for (int c = 0; c <= per; ++c) got.insert(l.at(c));
            CHECK(got == base);
        }
    }
}

TEST_CASE("the lifted curve is embedded") {
    for (int i = 0; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            auto b = make_lift(i, j, Window{-1, j + 3, 0, 2});
            CHECK(beta_embedded_check(b));
        }
}

TEST_CASE("puncture lifts and delta arcs cover the padded window") {
    auto b = make_lift(0, 1, Window{-1, 4, -2, 2});
    size_t cells = 6 * 9;  // columns -1..4, rows -4..4
    CHECK(b.w_lifts.size() == cells);
    CHECK(b.z_lifts.size() == cells);
    CHECK(b.delta_arcs.size() == cells);
    for (size_t t = 0; t < cells; ++t) {
        CHECK(b.delta_arcs[t].first == b.w_lifts[t]);
        CHECK(b.delta_arcs[t].second == b.z_lifts[t]);
        CHECK(b.z_lifts[t].x - b.w_lifts[t].x == Rat(1, 2));
        CHECK(b.z_lifts[t].y - b.w_lifts[t].y == Rat(1, 4));
    }
}
