#pragma once
// Bigraded chain complexes over F2[U,V]/(UV): representation, validation,
// parsing/serialization of the companion file format, and mirroring.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsat {

enum class Var { U, V, ONE };

struct Monomial {
    Var variable = Var::ONE;
    int exponent = 0;  // >= 1 when variable is U or V, 0 for ONE

    static Monomial one() { return {Var::ONE, 0}; }
    static Monomial u(int a) { return {Var::U, a}; }
    static Monomial v(int b) { return {Var::V, b}; }

    bool is_one() const { return variable == Var::ONE; }

    // Product in F2[U,V]/(UV); nullopt when it vanishes (mixed U*V).
    std::optional<Monomial> times(const Monomial& o) const {
        if (is_one()) return o;
        if (o.is_one()) return *this;
        if (variable != o.variable) return std::nullopt;
        return Monomial{variable, exponent + o.exponent};
    }

    std::string str() const {
        if (is_one()) return "1";
        return std::string(variable == Var::U ? "U^" : "V^") + std::to_string(exponent);
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.variable == b.variable && a.exponent == b.exponent;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.variable != b.variable) return a.variable < b.variable;
        return a.exponent < b.exponent;
    }
};

struct Generator {
    std::string id;
    int alexander = 0;
    std::optional<int> maslov;
};

struct Arrow {
    std::string src, dst;
    Monomial coeff;
};

struct BigradedComplex {
    std::vector<Generator> generators;
    std::vector<Arrow> arrows;
    std::string label;

    const Generator* find(const std::string& id) const {
        for (const auto& g : generators)
            if (g.id == id) return &g;
        return nullptr;
    }
    Generator* find(const std::string& id) {
        for (auto& g : generators)
            if (g.id == id) return &g;
        return nullptr;
    }

    void sort_canonical() {
        std::sort(generators.begin(), generators.end(),
                  [](const Generator& a, const Generator& b) { return a.id < b.id; });
        std::sort(arrows.begin(), arrows.end(), [](const Arrow& a, const Arrow& b) {
            if (a.src != b.src) return a.src < b.src;
            if (a.dst != b.dst) return a.dst < b.dst;
            return a.coeff < b.coeff;
        });
    }
};

// --- d^2 = 0 modulo UV ------------------------------------------------------

inline bool d_squared_zero(const BigradedComplex& c) {
    // parity of each composite (src, dst, monomial)
    std::map<std::string, std::vector<const Arrow*>> out;
    for (const auto& a : c.arrows) out[a.src].push_back(&a);
    std::map<std::tuple<std::string, std::string, Var, int>, int> parity;
    for (const auto& a : c.arrows) {
        auto it = out.find(a.dst);
        if (it == out.end()) continue;
        for (const Arrow* b : it->second) {
            auto m = a.coeff.times(b->coeff);
            if (!m) continue;  // UV = 0 truncation
            parity[{a.src, b->dst, m->variable, m->exponent}] ^= 1;
        }
    }
    for (const auto& [k, p] : parity)
        if (p) return false;
    return true;
}

// --- validate_complex -------------------------------------------------------

inline std::vector<std::string> validate_complex(const BigradedComplex& c) {
    std::vector<std::string> violations;
    std::set<std::string> ids;
    for (const auto& g : c.generators)
        if (!ids.insert(g.id).second) violations.push_back("duplicate generator id: " + g.id);
    for (const auto& a : c.arrows) {
        const Generator* s = c.find(a.src);
        const Generator* d = c.find(a.dst);
        if (!s || !d) {
            violations.push_back("arrow references unknown generator: " + a.src + "->" + a.dst);
            continue;
        }
        if (a.coeff.is_one()) {
            violations.push_back("coefficient-1 arrow in reduced complex: " + a.src + "->" + a.dst);
            continue;
        }
        int dA = s->alexander - d->alexander;
        if (a.coeff.variable == Var::U) {
            if (dA != -a.coeff.exponent)
                violations.push_back("U-arrow grading mismatch: " + a.src + "->" + a.dst);
            if (s->maslov && d->maslov && *s->maslov - *d->maslov != 1 - 2 * a.coeff.exponent)
                violations.push_back("U-arrow Maslov mismatch: " + a.src + "->" + a.dst);
        } else {
            if (dA != a.coeff.exponent)
                violations.push_back("V-arrow grading mismatch: " + a.src + "->" + a.dst);
            if (s->maslov && d->maslov && *s->maslov - *d->maslov != 1)
                violations.push_back("V-arrow Maslov mismatch: " + a.src + "->" + a.dst);
        }
    }
    if (!d_squared_zero(c)) violations.push_back("d^2 != 0");
    return violations;
}

// --- mirror -----------------------------------------------------------------

// Reverse all arrows keeping coefficients, negate Alexander gradings, negate
// Maslov gradings. Sends tau -> -tau and epsilon -> -epsilon.
inline BigradedComplex mirror_complex(const BigradedComplex& c) {
    BigradedComplex m;
    m.label = c.label + "_mirror";
    for (const auto& g : c.generators) {
        Generator h = g;
        h.alexander = -g.alexander;
        if (g.maslov) h.maslov = -*g.maslov;
        m.generators.push_back(h);
    }
    for (const auto& a : c.arrows) m.arrows.push_back({a.dst, a.src, a.coeff});
    m.sort_canonical();
    return m;
}

// --- companion file format --------------------------------------------------

struct ParseError : std::runtime_error {
    int line;
    ParseError(int ln, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

inline BigradedComplex parse_complex_text(const std::string& text) {
    BigradedComplex c;
    std::istringstream in(text);
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "gen") {
            std::string id, afield, mfield;
            if (!(ls >> id >> afield >> mfield)) throw ParseError(ln, "gen needs: id A=<int> M=<int>");
            if (afield.rfind("A=", 0) != 0 || mfield.rfind("M=", 0) != 0)
                throw ParseError(ln, "gen fields must be A=<int> M=<int>");
            Generator g;
            g.id = id;
            try {
                g.alexander = std::stoi(afield.substr(2));
                g.maslov = std::stoi(mfield.substr(2));
            } catch (...) {
                throw ParseError(ln, "bad integer in gen line");
            }
            c.generators.push_back(g);
        } else if (kw == "arrow") {
            std::string src, dst, mono;
            if (!(ls >> src >> dst >> mono)) throw ParseError(ln, "arrow needs: src dst U^<a>|V^<b>");
            Arrow a;
            a.src = src;
            a.dst = dst;
            if (mono.size() < 3 || mono[1] != '^' || (mono[0] != 'U' && mono[0] != 'V'))
                throw ParseError(ln, "bad monomial: " + mono);
            int e;
            try {
                e = std::stoi(mono.substr(2));
            } catch (...) {
                throw ParseError(ln, "bad exponent: " + mono);
            }
            if (e < 1) throw ParseError(ln, "exponent must be >= 1");
            a.coeff = mono[0] == 'U' ? Monomial::u(e) : Monomial::v(e);
            c.arrows.push_back(a);
        } else {
            throw ParseError(ln, "unknown keyword: " + kw);
        }
    }
    if (c.generators.empty()) throw ParseError(ln, "empty generator list");
    c.sort_canonical();
    return c;
}

inline std::string serialize_complex(const BigradedComplex& c) {
    std::ostringstream out;
    for (const auto& g : c.generators) {
        out << "gen " << g.id << " A=" << g.alexander << " M=";
        out << (g.maslov ? std::to_string(*g.maslov) : std::string("?")) << "\n";
    }
    for (const auto& a : c.arrows)
        out << "arrow " << a.src << " " << a.dst << " " << a.coeff.str() << "\n";
    return out.str();
}

}  // namespace qsat
