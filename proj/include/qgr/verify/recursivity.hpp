#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qgr/hyper/fixed_point.hpp"
#include "qgr/hyper/recursion_coeffs.hpp"

namespace qgr {

struct RecursivityEntry {
    int i = 0, j = 0, d = 0;
    bool pass = false;
    std::string remainder;  // on failure: the remainder, or why evaluation diverged
};

struct RecursivityReport {
    std::vector<RecursivityEntry> entries;

    bool pass() const {
        for (auto& e : entries)
            if (!e.pass) return false;
        return !entries.empty();
    }
    const RecursivityEntry* first_failure() const {
        for (auto& e : entries)
            if (!e.pass) return &e;
        return nullptr;
    }
};

// C(slot, i, j, k, d)
using CoeffFn = std::function<BigRational(Slot, int, int, int, int)>;

inline CoeffFn C_table(Kind kind, const CISpec& a, const std::vector<BigRational>& alpha) {
    return [kind, a, alpha](Slot s, int i, int j, int k, int d) { return C_coeff(kind, a, alpha, s, i, j, k, d); };
}

// Single-q recursivity: subtract the pole terms at (alpha_k - alpha_j)/d
// (evaluating at p_ik) and at (alpha_k - alpha_i)/d (evaluating at p_kj);
// what is left must have poles only at hbar = 0.
inline RecursivityReport check_recursive(const FixedSeries& F, const CoeffFn& C, const std::vector<BigRational>& alpha) {
    RecursivityReport rep;
    const int n = F.n;
    for (int D = 0; D <= F.D; ++D)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                RecursivityEntry e{i, j, D, false, {}};
                try {
                    UniRatFunc r = F(i, j, D);
                    for (int d = 1; d <= D; ++d)
                        for (int k = 0; k < n; ++k) {
                            if (k == i || k == j) continue;
                            BigRational z1 = C_pole(alpha, Slot::first, i, j, k, d);
                            BigRational c1 = C(Slot::first, i, j, k, d);
                            if (c1 != 0) r -= UniRatFunc::inverse_linear(z1) * UniRatFunc(c1 * F(i, k, D - d)(z1));
                            BigRational z2 = C_pole(alpha, Slot::second, i, j, k, d);
                            BigRational c2 = C(Slot::second, i, j, k, d);
                            if (c2 != 0) r -= UniRatFunc::inverse_linear(z2) * UniRatFunc(c2 * F(k, j, D - d)(z2));
                        }
                    e.pass = r.is_laurent_polynomial();
                    if (!e.pass) e.remainder = r.to_string();
                } catch (const PoleError& err) {
                    e.remainder = std::string("evaluation diverges: ") + err.what();
                }
                rep.entries.push_back(e);
            }
    return rep;
}

// Two-variable recursivity for A over all pairs (i1, i2): slot 2 carries
// q2^d and evaluates at (i1, k); slot 1 carries q1^d and evaluates at (k, i2).
// With equal weight lists only i1 != i2 is checked (the diagonal is still
// evaluated, but its own poles collide with the recursion poles).
inline RecursivityReport check_recursive2(const FixedSeries2& F, Kind kind, const AMatrixSpec& spec) {
    RecursivityReport rep;
    const int n = F.n;
    const bool same = spec.alpha1 == spec.alpha2;
    for (auto& [p, s] : F.at) {
        auto [i1, i2] = p;
        if (same && i1 == i2) continue;
        for (auto& [deg, val] : s.terms()) {
            auto [D1, D2] = deg;
            RecursivityEntry e{i1, i2, D1 + D2, false, {}};
            try {
                UniRatFunc r = val;
                for (int d = 1; d <= D2; ++d)
                    for (int k = 0; k < n; ++k) {
                        if (k == i2) continue;
                        BigRational z = (spec.alpha2[static_cast<std::size_t>(k)] - spec.alpha2[static_cast<std::size_t>(i2)]) / d;
                        BigRational c = scrC(kind, spec, i1, i2, k, 2, d);
                        if (c != 0) r -= UniRatFunc::inverse_linear(z) * UniRatFunc(c * F.at.at({i1, k})(D1, D2 - d)(z));
                    }
                for (int d = 1; d <= D1; ++d)
                    for (int k = 0; k < n; ++k) {
                        if (k == i1) continue;
                        BigRational z = (spec.alpha1[static_cast<std::size_t>(k)] - spec.alpha1[static_cast<std::size_t>(i1)]) / d;
                        BigRational c = scrC(kind, spec, i1, i2, k, 1, d);
                        if (c != 0) r -= UniRatFunc::inverse_linear(z) * UniRatFunc(c * F.at.at({k, i2})(D1 - d, D2)(z));
                    }
                e.pass = r.is_laurent_polynomial();
                if (!e.pass) e.remainder = r.to_string();
            } catch (const PoleError& err) {
                e.remainder = std::string("evaluation diverges: ") + err.what();
            }
            rep.entries.push_back(e);
        }
    }
    return rep;
}

}  // namespace qgr
