#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgr/cohomology/grassmannian.hpp"
#include "qgr/exact/xseries.hpp"
#include "qgr/hyper/fixed_point.hpp"
#include "qgr/hyper/symbolic.hpp"
#include "qgr/operators/series_matrix.hpp"

namespace qgr {

// Non-equivariant series: per q-degree, a class in H*(Gr) with Laurent
// polynomial coefficients in hbar.
struct ClassSeries {
    int D = 0;
    std::vector<ClassOf<LaurentQ>> c;

    ClassSeries() = default;
    explicit ClassSeries(int D_) : D(D_), c(static_cast<std::size_t>(D_ + 1)) {}

    LaurentQ at(int d, const Partition& p) const {
        auto& m = c.at(static_cast<std::size_t>(d));
        auto it = m.find(p);
        return it == m.end() ? LaurentQ() : it->second;
    }
    void add(int d, const Partition& p, const LaurentQ& v) {
        if (v.is_zero()) return;
        auto& m = c.at(static_cast<std::size_t>(d));
        auto it = m.find(p);
        if (it == m.end()) {
            m.emplace(p, v);
            return;
        }
        it->second += v;
        if (it->second.is_zero()) m.erase(it);
    }
    bool operator==(const ClassSeries& o) const {
        if (D != o.D) return false;
        for (int d = 0; d <= D; ++d) {
            auto& a = c[static_cast<std::size_t>(d)];
            auto& b = o.c[static_cast<std::size_t>(d)];
            if (a.size() != b.size()) return false;
            for (auto& [p, v] : a) {
                auto it = b.find(p);
                if (it == b.end() || !(it->second - v).is_zero()) return false;
            }
        }
        return true;
    }
};

inline LaurentQ shift_hbar(const LaurentQ& l, int m) {
    LaurentQ r;
    for (auto& [e, v] : l.terms()) r.set(e + m, v);
    return r;
}

// hbar -> -hbar
inline LaurentQ reflect_hbar(const LaurentQ& l) {
    LaurentQ r;
    for (auto& [e, v] : l.terms()) r.set(e, e % 2 ? BigRational(-v) : v);
    return r;
}

inline LaurentQ scale(const LaurentQ& l, const BigRational& s) {
    LaurentQ r;
    if (s == 0) return r;
    for (auto& [e, v] : l.terms()) r.set(e, v * s);
    return r;
}

// out += s(q) hbar^m F
inline void add_scaled(ClassSeries& out, const ClassSeries& F, const QS& s, int m) {
    for (int e = 0; e <= out.D; ++e) {
        if (s[e] == 0) continue;
        for (int d = 0; d + e <= out.D; ++d)
            for (auto& [p, v] : F.c[static_cast<std::size_t>(d)]) out.add(d + e, p, shift_hbar(scale(v, s[e]), m));
    }
}

// Expansion of a symmetric series in the Schur basis. F_d is homogeneous of
// degree deg(d) in (x, hbar), so x^v carries exactly hbar^{deg(d)-|v|}; any
// other power is an error. Classes outside the box are dropped.
inline ClassSeries class_series(const Series1& F, const SchurBasis& basis, const std::function<int(int)>& deg) {
    const int top = basis.top_degree();
    ClassSeries out(F.trunc());
    for (int d = 0; d <= F.trunc(); ++d) {
        if (F[d].is_zero()) continue;
        const int dd = deg(d);
        const int depth = std::max(1, top - dd + 1);
        XSeries xs = expand_series_in_x(F[d], top, depth);
        std::map<int, std::map<std::pair<int, int>, BigRational>> by_power;
        for (auto& [v, l] : xs)
            for (auto& [e, c] : l.terms()) {
                if (e != dd - v.first - v.second)
                    throw std::logic_error("series is not homogeneous of degree " + std::to_string(dd) + " at q^" + std::to_string(d));
                by_power[e][v] = c;
            }
        for (auto& [e, tab] : by_power)
            for (auto& [p, c] : truncate_to_box(schur_expand(tab), basis)) out.add(d, p, LaurentQ::monomial(e, c));
    }
    return out;
}

// ---- fixed-point series arithmetic ----

inline FixedSeries zero_fixed(const FixedSeries& like) {
    FixedSeries z{like.n, like.D, {}};
    for (auto& [p, s] : like.at) z.at[p] = PointSeries(s.size());
    return z;
}

// out += s(q) hbar^m F
inline void add_scaled(FixedSeries& out, const FixedSeries& F, const QS& s, int m) {
    UniRatFunc hm = m >= 0 ? UniRatFunc(UniPoly::t(static_cast<unsigned>(m))) : UniRatFunc(1) / UniRatFunc(UniPoly::t(static_cast<unsigned>(-m)));
    for (auto& [p, ser] : F.at) {
        auto& o = out.at.at(p);
        for (int e = 0; e <= out.D; ++e) {
            if (s[e] == 0) continue;
            for (int d = 0; d + e <= out.D; ++d) {
                const UniRatFunc& f = ser[static_cast<std::size_t>(d)];
                if (f.is_zero()) continue;
                o[static_cast<std::size_t>(d + e)] += f * hm * s[e];
            }
        }
    }
}

}  // namespace qgr
