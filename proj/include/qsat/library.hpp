#pragma once
// Companion knots: parsing into a validated CompanionSpec (invariants
// recomputed, never trusted), supported-class recognition (one staircase plus
// boxes), and the built-in library.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsat/complex.hpp"
#include "qsat/simplify.hpp"

namespace qsat {

struct BoxData {
    int v_exp = 1;   // vertical side length k
    int u_exp = 1;   // horizontal side length l
    int a_top = 0;   // Alexander grading of the corner generator p
};

// One step of the staircase path: the arrow between consecutive path
// generators. `forward` is true when the arrow points from the earlier path
// generator to the later one.
struct StairStep {
    Var variable = Var::U;
    int length = 1;
    bool forward = true;
};

struct CompanionSpec {
    std::string name;
    BigradedComplex complex;
    int tau = 0;
    int epsilon = 0;
    int genus = 0;
    int hat_rank = 1;
    bool trivial = false;
    // Staircase data in path order starting from the vertically free
    // generator: ids, Alexander gradings, and connecting arrows.
    std::vector<std::string> stair_ids;
    std::vector<int> stair_a;
    std::vector<StairStep> stair_steps;
    std::vector<BoxData> boxes;
};

namespace detail {

// Decompose the simplified complex into one staircase component (containing
// the vertically free generator) and box components; throws otherwise.
inline void recognize_class(const SimpComplex& s, CompanionSpec& spec) {
    int n = (int)s.gens().size();
    // adjacency in the matching graph
    std::vector<std::vector<std::pair<int, Monomial>>> adj(n);
    for (const auto& [k, m] : s.entries()) {
        adj[k.first].push_back({k.second, m});
        adj[k.second].push_back({k.first, m});
    }
    auto free_v = s.singletons(Var::V);
    if (free_v.size() != 1) throw std::runtime_error("unsupported class: vertical free rank != 1");
    int xi0 = free_v[0];

    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int k = 0; k < n; ++k) {
        if (comp[k] >= 0) continue;
        std::vector<int> stack{k};
        comp[k] = nc;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto& [v, m] : adj[u])
                if (comp[v] < 0) {
                    comp[v] = nc;
                    stack.push_back(v);
                }
        }
        ++nc;
    }
    for (int cid = 0; cid < nc; ++cid) {
        std::vector<int> members;
        for (int k = 0; k < n; ++k)
            if (comp[k] == cid) members.push_back(k);
        if (comp[xi0] == cid) {
            // staircase: a path; walk from xi0
            if (members.size() % 2 == 0)
                throw std::runtime_error("unsupported class: staircase has even generator count");
            int prev = -1, cur = xi0;
            std::vector<int> order;
            while (true) {
                order.push_back(cur);
                int next = -1;
                for (auto& [v, m] : adj[cur])
                    if (v != prev) {
                        if (next >= 0) throw std::runtime_error("unsupported class: staircase not a path");
                        next = v;
                    }
                if (next < 0) break;
                prev = cur;
                cur = next;
            }
            if (order.size() != members.size())
                throw std::runtime_error("unsupported class: staircase component not a path");
            for (int g : order) {
                spec.stair_ids.push_back(s.gens()[g].id);
                spec.stair_a.push_back(s.gens()[g].alexander);
            }
            for (size_t t = 0; t + 1 < order.size(); ++t) {
                auto fwd = s.entries().find({order[t], order[t + 1]});
                auto bwd = s.entries().find({order[t + 1], order[t]});
                if (fwd != s.entries().end())
                    spec.stair_steps.push_back({fwd->second.variable, fwd->second.exponent, true});
                else if (bwd != s.entries().end())
                    spec.stair_steps.push_back({bwd->second.variable, bwd->second.exponent, false});
                else
                    throw std::runtime_error("unsupported class: broken staircase step");
            }
        } else {
            // box: p,q,r,s with dp = U^l q + V^k r, dq = V^k s, dr = U^l s
            if (members.size() != 4) throw std::runtime_error("unsupported class: non-box closed component");
            int p = -1;
            for (int g : members) {
                int out_u = 0, out_v = 0;
                for (const auto& [key, m] : s.entries())
                    if (key.first == g) (m.variable == Var::U ? out_u : out_v)++;
                if (out_u == 1 && out_v == 1) p = g;
            }
            if (p < 0) throw std::runtime_error("unsupported class: box has no double-source corner");
            int q = -1, r = -1, l = 0, kv = 0;
            for (const auto& [key, m] : s.entries())
                if (key.first == p) {
                    if (m.variable == Var::U) { q = key.second; l = m.exponent; }
                    else { r = key.second; kv = m.exponent; }
                }
            int sq = -1, sr = -1;
            for (const auto& [key, m] : s.entries()) {
                if (key.first == q) {
                    if (m.variable != Var::V || m.exponent != kv)
                        throw std::runtime_error("unsupported class: box edge mismatch");
                    sq = key.second;
                }
                if (key.first == r) {
                    if (m.variable != Var::U || m.exponent != l)
                        throw std::runtime_error("unsupported class: box edge mismatch");
                    sr = key.second;
                }
            }
            if (sq < 0 || sr < 0 || sq != sr)
                throw std::runtime_error("unsupported class: box does not close up");
            spec.boxes.push_back({kv, l, s.gens()[p].alexander});
        }
    }
}

}  // namespace detail

inline CompanionSpec make_companion(const std::string& name, const BigradedComplex& c) {
    auto violations = validate_complex(c);
    if (!violations.empty())
        throw std::runtime_error("invalid companion complex: " + violations.front());
    CompanionSpec spec;
    spec.name = name;
    spec.complex = c;
    VerticalHomologyData vh = vertical_homology(c);
    spec.tau = vh.tau;
    spec.hat_rank = vh.hat_rank;
    spec.epsilon = epsilon_of(c);
    int g = c.generators.front().alexander;
    for (const auto& gen : c.generators) g = std::max(g, gen.alexander);
    spec.genus = g;
    spec.trivial = c.generators.size() == 1 && c.arrows.empty();
    SimpComplex s(c);
    s.simplify_both();
    detail::recognize_class(s, spec);
    return spec;
}

inline CompanionSpec parse_companion(const std::string& name, const std::string& text) {
    return make_companion(name, parse_complex_text(text));
}

// --- built-in library -------------------------------------------------------

inline const std::map<std::string, std::string>& builtin_companions() {
    static const std::map<std::string, std::string> lib = {
        {"unknot", "gen x0 A=0 M=0\n"},
        {"T23",
         "gen x0 A=1 M=0\n"
         "gen x1 A=0 M=-1\n"
         "gen x2 A=-1 M=-2\n"
         "arrow x1 x0 U^1\n"
         "arrow x1 x2 V^1\n"},
        {"mT23",
         "gen y0 A=-1 M=0\n"
         "gen y1 A=0 M=1\n"
         "gen y2 A=1 M=2\n"
         "arrow y0 y1 U^1\n"
         "arrow y2 y1 V^1\n"},
        {"fig8",
         "gen e A=0 M=0\n"
         "gen p A=0 M=0\n"
         "gen q A=1 M=1\n"
         "gen r A=-1 M=-1\n"
         "gen s A=0 M=0\n"
         "arrow p q U^1\n"
         "arrow p r V^1\n"
         "arrow q s V^1\n"
         "arrow r s U^1\n"},
        {"T25",
         "gen a A=2 M=0\n"
         "gen b A=1 M=-1\n"
         "gen c A=0 M=-2\n"
         "gen d A=-1 M=-3\n"
         "gen e A=-2 M=-4\n"
         "arrow b a U^1\n"
         "arrow b c V^1\n"
         "arrow d c U^1\n"
         "arrow d e V^1\n"},
    };
    return lib;
}

inline CompanionSpec builtin(const std::string& name) {
    auto it = builtin_companions().find(name);
    if (it == builtin_companions().end())
        throw std::runtime_error("unknown built-in companion: " + name);
    return parse_companion(name, it->second);
}

}  // namespace qsat
