#pragma once
// Base-change simplification of bigraded complexes, vertical homology over
// F2[V], epsilon extraction, and the invariant report.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsat/complex.hpp"

namespace qsat {

struct VerticalHomologyData {
    int tau = 0;
    std::multiset<int> torsion_orders;
    int hat_rank = 0;
    int ord_v() const { return torsion_orders.empty() ? 0 : *torsion_orders.rbegin(); }
};

enum class Thinness { THIN, NOT_THIN, UNDETERMINED };

struct RankRow {
    int rank = 0;
    std::optional<int> delta;
};

struct InvariantReport {
    int genus = 0;
    int tau = 0;
    int epsilon = 0;
    bool fibered = false;
    Thinness thin = Thinness::UNDETERMINED;
    int ord_v_lower = 0;
    std::map<int, RankRow> rank_table;  // Alexander grading -> (rank, delta)
};

// Working form: generators plus an arrow map keyed by (src index, dst index).
class SimpComplex {
public:
    explicit SimpComplex(const BigradedComplex& c) {
        gens_ = c.generators;
        for (size_t k = 0; k < gens_.size(); ++k) index_[gens_[k].id] = (int)k;
        for (const auto& a : c.arrows) {
            auto s = index_.find(a.src), d = index_.find(a.dst);
            if (s == index_.end() || d == index_.end())
                throw std::runtime_error("simplify: arrow references unknown generator");
            toggle(s->second, d->second, a.coeff);
        }
    }

    BigradedComplex to_complex(const std::string& label) const {
        BigradedComplex c;
        c.label = label;
        c.generators = gens_;
        for (const auto& [k, m] : entries_) c.arrows.push_back({gens_[k.first].id, gens_[k.second].id, m});
        c.sort_canonical();
        return c;
    }

    const std::vector<Generator>& gens() const { return gens_; }
    const std::map<std::pair<int, int>, Monomial>& entries() const { return entries_; }

    // Basis change b := b + m*a where m is the monomial forced by gradings.
    void add_multiple(int a, int b) {
        if (a == b) throw std::logic_error("add_multiple: a == b");
        Monomial m = connecting_monomial(a, b);
        std::vector<std::pair<int, Monomial>> outs, ins;
        for (const auto& [k, mono] : entries_) {
            if (k.first == a) outs.push_back({k.second, mono});
            if (k.second == b) ins.push_back({k.first, mono});
        }
        for (const auto& [y, mono] : outs)
            if (auto p = m.times(mono)) toggle(b, y, *p);
        for (const auto& [w, mono] : ins)
            if (auto p = mono.times(m)) toggle(w, a, *p);
    }

    // Monomial m with b ~ m*a by Alexander degree (V^k, U^k, or 1).
    Monomial connecting_monomial(int a, int b) const {
        int d = gens_[b].alexander - gens_[a].alexander;
        if (d > 0) return Monomial::v(d);
        if (d < 0) return Monomial::u(-d);
        return Monomial::one();
    }

    // Is b := b + m*a homogeneous in the Maslov grading too (when known)?
    bool maslov_compatible(int a, int b) const {
        if (!gens_[a].maslov || !gens_[b].maslov) return true;
        Monomial m = connecting_monomial(a, b);
        int dm = m.variable == Var::U ? -2 * m.exponent : 0;
        return *gens_[b].maslov == *gens_[a].maslov + dm;
    }

    // Make the X-part of the differential a disjoint matching by base changes.
    void simplify_phase(Var X) {
        for (int pass = 0; pass < 100; ++pass) {
            std::set<int> frozen;
            while (true) {
                // pick the globally minimal unfrozen X-arrow
                int bs = -1, bd = -1, be = 0;
                for (const auto& [k, m] : entries_) {
                    if (m.variable != X) continue;
                    if (frozen.count(k.first) || frozen.count(k.second)) continue;
                    if (bs < 0 || m.exponent < be ||
                        (m.exponent == be && std::make_pair(gens_[k.first].id, gens_[k.second].id) <
                                                 std::make_pair(gens_[bs].id, gens_[bd].id))) {
                        bs = k.first;
                        bd = k.second;
                        be = m.exponent;
                    }
                }
                if (bs < 0) break;
                // clear other X-arrows out of bs
                while (true) {
                    int y = -1, ye = 0;
                    for (const auto& [k, m] : entries_)
                        if (k.first == bs && m.variable == X && k.second != bd &&
                            (y < 0 || m.exponent < ye || (m.exponent == ye && gens_[k.second].id < gens_[y].id))) {
                            y = k.second;
                            ye = m.exponent;
                        }
                    if (y < 0) break;
                    add_multiple(y, bd);  // bd := bd + V^{..} y  kills (bs,y)
                }
                // clear other X-arrows into bd
                while (true) {
                    int z = -1, ze = 0;
                    for (const auto& [k, m] : entries_)
                        if (k.second == bd && m.variable == X && k.first != bs &&
                            (z < 0 || m.exponent < ze || (m.exponent == ze && gens_[k.first].id < gens_[z].id))) {
                            z = k.first;
                            ze = m.exponent;
                        }
                    if (z < 0) break;
                    add_multiple(bs, z);  // z := z + V^{..} bs  kills (z,bd)
                }
                frozen.insert(bs);
                frozen.insert(bd);
            }
            if (phase_simplified(X)) return;
        }
        throw std::runtime_error("simplify: phase failed to terminate");
    }

    bool phase_simplified(Var X) const {
        std::map<int, int> in, out;
        for (const auto& [k, m] : entries_) {
            if (m.variable != X) continue;
            if (++out[k.first] > 1) return false;
            if (++in[k.second] > 1) return false;
        }
        return true;
    }

    void simplify_both() {
        for (int round = 0; round < 100; ++round) {
            simplify_phase(Var::V);
            simplify_phase(Var::U);
            if (phase_simplified(Var::V) && phase_simplified(Var::U)) return;
        }
        throw std::runtime_error("simplify: alternation failed to terminate");
    }

    // Generators with no incoming or outgoing X-arrow.
    std::vector<int> singletons(Var X) const {
        std::set<int> touched;
        for (const auto& [k, m] : entries_)
            if (m.variable == X) {
                touched.insert(k.first);
                touched.insert(k.second);
            }
        std::vector<int> r;
        for (int k = 0; k < (int)gens_.size(); ++k)
            if (!touched.count(k)) r.push_back(k);
        return r;
    }

private:
    std::vector<Generator> gens_;
    std::map<std::string, int> index_;
    std::map<std::pair<int, int>, Monomial> entries_;

    void toggle(int s, int d, const Monomial& m) {
        if (m.is_one() && gens_[s].alexander != gens_[d].alexander)
            throw std::logic_error("toggle: inhomogeneous entry");
        auto key = std::make_pair(s, d);
        auto it = entries_.find(key);
        if (it != entries_.end()) {
            if (!(it->second == m)) throw std::logic_error("toggle: conflicting monomials");
            entries_.erase(it);
        } else {
            entries_.emplace(key, m);
        }
    }
};

// --- vertical homology ------------------------------------------------------

inline VerticalHomologyData vertical_homology(const BigradedComplex& c) {
    SimpComplex s(c);
    s.simplify_phase(Var::V);
    VerticalHomologyData d;
    d.hat_rank = (int)c.generators.size();
    for (const auto& [k, m] : s.entries())
        if (m.variable == Var::V) d.torsion_orders.insert(m.exponent);
    auto free_gens = s.singletons(Var::V);
    if (free_gens.size() != 1)
        throw std::runtime_error("vertical_homology: free rank is " +
                                 std::to_string(free_gens.size()) + ", not 1 (not a knot complex)");
    d.tau = s.gens()[free_gens[0]].alexander;
    return d;
}

// --- epsilon ----------------------------------------------------------------

inline int epsilon_of(const BigradedComplex& c) {
    SimpComplex s(c);
    s.simplify_both();
    auto free_v = s.singletons(Var::V);
    if (free_v.size() != 1) throw std::runtime_error("epsilon_of: vertical free rank != 1");
    int xi0 = free_v[0];
    for (const auto& [k, m] : s.entries()) {
        if (m.variable != Var::U) continue;
        if (k.second == xi0) return 1;
        if (k.first == xi0) return -1;
    }
    return 0;
}

// --- invariant report -------------------------------------------------------

inline InvariantReport invariant_report(const BigradedComplex& c) {
    InvariantReport r;
    VerticalHomologyData vh = vertical_homology(c);
    r.tau = vh.tau;
    r.ord_v_lower = vh.ord_v();
    r.epsilon = epsilon_of(c);

    std::map<int, std::set<std::optional<int>>> deltas_at;
    for (const auto& g : c.generators) {
        auto& row = r.rank_table[g.alexander];
        row.rank += 1;
        deltas_at[g.alexander].insert(g.maslov ? std::optional<int>(*g.maslov - g.alexander)
                                               : std::nullopt);
    }
    for (auto& [a, row] : r.rank_table) {
        const auto& ds = deltas_at[a];
        row.delta = (ds.size() == 1 && *ds.begin()) ? *ds.begin() : std::nullopt;
    }
    r.genus = r.rank_table.rbegin()->first;
    r.fibered = r.rank_table.rbegin()->second.rank == 1;

    SimpComplex s(c);
    s.simplify_both();
    bool long_arrow = false;
    for (const auto& [k, m] : s.entries())
        if (m.exponent >= 2) long_arrow = true;
    bool all_m = true;
    std::set<int> deltas;
    for (const auto& g : c.generators) {
        if (!g.maslov)
            all_m = false;
        else
            deltas.insert(*g.maslov - g.alexander);
    }
    if (long_arrow || deltas.size() >= 2)
        r.thin = Thinness::NOT_THIN;
    else if (all_m && deltas.size() <= 1)
        r.thin = Thinness::THIN;
    else
        r.thin = Thinness::UNDETERMINED;
    return r;
}

}  // namespace qsat
