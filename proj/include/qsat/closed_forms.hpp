#pragma once
// Closed-form invariant values for the satellites Q^{i,j}_n(K), used as an
// independent oracle against the geometric engine.

#include <cstdlib>
#include <stdexcept>

#include "qsat/simplify.hpp"

namespace qsat {

struct CompanionMeta {
    int tau = 0;
    int epsilon = 0;
    int genus = 0;
    bool trivial = false;
    bool fibered = false;
};

inline int genus_formula(const CompanionMeta& m, int /*i*/, int j, int n) {
    if (m.trivial) {
        if (n > 0) return j * (j + 1) / 2 * n + 1;
        if (n == 0) return 0;
        return j * (j + 1) / 2 * (-n) + 1 - j;
    }
    if (n >= 0) return j * m.genus + j * (j + 1) / 2 * n + 1;
    return j * m.genus + j * (j + 1) / 2 * (-n) + (1 - j);
}

inline int pattern_genus_formula(int /*i*/, int j, int n) {
    return j * (j + 1) / 2 * std::abs(n) + (n >= 0 ? 1 : 1 - j);
}

inline int tau_formula(const CompanionMeta& m, int /*i*/, int j, int n) {
    if (m.epsilon == -1) return j * (m.tau + 1) + j * (j - 1) / 2 * n;
    if (m.epsilon == 1) {
        int base = j * m.tau + j * (j - 1) / 2 * n;
        return n < 2 * m.tau ? base + 1 : base;
    }
    return n >= 0 ? j * (j - 1) / 2 * n : j * (j - 1) / 2 * n + j;
}

inline int epsilon_formula(const CompanionMeta& m, int /*i*/, int /*j*/, int n) {
    return (m.trivial && n == 0) ? 0 : 1;
}

inline bool fibered_formula(const CompanionMeta& m, int i, int j, int n) {
    if (m.trivial || !m.fibered)
        throw std::runtime_error("fibered_formula: companion must be a nontrivial fibered knot");
    if (j >= 2) return i == 0 && n != 0;
    return i == 0 && n != -1 && n != 0;
}

inline Thinness thin_formula(const CompanionMeta& m, int /*i*/, int j, int n) {
    if (!m.trivial) return Thinness::NOT_THIN;
    if (n == 0 || (j == 1 && n == -1)) return Thinness::THIN;
    return Thinness::NOT_THIN;
}

// Top Alexander grading rank for companion T23.
inline int top_rank_formula(int i, int j, int n) {
    if (n == 0) return 2 * (i + 1);
    if (n == -1 && j == 1) return 2 * (i + 1);
    return i + 1;
}

inline int ordv_lower_bound(const CompanionMeta& m, int j, int n) {
    if (!m.trivial) return j + 1;
    if (n == 0) return 0;
    if (n == -1) return j;
    return j + 1;
}

}  // namespace qsat
