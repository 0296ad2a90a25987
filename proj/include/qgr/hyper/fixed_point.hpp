#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qgr/exact/qseries.hpp"
#include "qgr/exact/uniratfunc.hpp"
#include "qgr/hyper/spec.hpp"

// The same generating functions restricted to torus fixed points: x1, x2
// are replaced by weights, leaving rational functions of hbar whose
// denominators split into linear factors.

namespace qgr {

using PointPair = std::pair<int, int>;
using PointSeries = std::vector<UniRatFunc>;  // q-degree -> value
using PointSeries2 = Q2Series<UniRatFunc>;

// Values at ordered pairs (i, j), i != j.
struct FixedSeries {
    int n = 0;
    int D = 0;
    std::map<PointPair, PointSeries> at;

    const UniRatFunc& operator()(int i, int j, int d) const { return at.at({i, j}).at(static_cast<std::size_t>(d)); }
};

// Values at all pairs (i1, i2) of the two weight lists.
struct FixedSeries2 {
    int n = 0;
    int D = 0;
    std::map<PointPair, PointSeries2> at;
};

namespace detail {

// c + l hbar as (scalar, root): l (hbar + c/l)
inline void mul_linear(UniPoly& num, BigRational& scale, std::map<BigRational, int>& roots, const BigRational& c, int l,
                       bool in_den) {
    if (l == 0) {
        if (in_den) {
            if (c == 0) throw PoleError("vanishing constant denominator factor");
            scale /= c;
        } else {
            num = num * UniPoly(c);
        }
        return;
    }
    if (in_den) {
        scale /= l;
        roots[-c / l] += 1;
    } else {
        num = num * UniPoly(std::vector<BigRational>{c, BigRational(l)});
    }
}

}  // namespace detail

// A_{d1,d2} at x1 = alpha_{1;i1}, x2 = alpha_{2;i2}
inline UniRatFunc A_at(Kind kind, const AMatrixSpec& s, int i1, int i2, int d1, int d2) {
    const BigRational& x1 = s.alpha1.at(static_cast<std::size_t>(i1));
    const BigRational& x2 = s.alpha2.at(static_cast<std::size_t>(i2));
    UniPoly num(1);
    BigRational scale = 1;
    std::map<BigRational, int> roots;
    for (auto& row : s.a) {
        int m = row[0] * d1 + row[1] * d2;
        int lo = kind == Kind::dot ? 1 : 0, hi = kind == Kind::dot ? m : m - 1;
        BigRational base = x1 * row[0] + x2 * row[1];
        for (int l = lo; l <= hi; ++l) detail::mul_linear(num, scale, roots, base, l, false);
    }
    // prod_j (x - alpha_j + l hbar) - prod_j (x - alpha_j) with x a weight:
    // the second product vanishes
    for (int l = 1; l <= d1; ++l)
        for (auto& w : s.alpha1) detail::mul_linear(num, scale, roots, x1 - w, l, true);
    for (int l = 1; l <= d2; ++l)
        for (auto& w : s.alpha2) detail::mul_linear(num, scale, roots, x2 - w, l, true);
    return UniRatFunc(num * scale, roots);
}

inline FixedSeries2 fixed_A(Kind kind, const AMatrixSpec& s, int D) {
    FixedSeries2 out{s.n(), D, {}};
    for (int i = 0; i < s.n(); ++i)
        for (int j = 0; j < s.n(); ++j) {
            PointSeries2 ps(D);
            for (auto& [e, c] : ps.terms()) {
                (void)c;
                ps(e.first, e.second) = A_at(kind, s, i, j, e.first, e.second);
            }
            out.at.emplace(PointPair{i, j}, std::move(ps));
        }
    return out;
}

// The specialized K at ordered pairs i != j. `flip` negates one (d1, d2)
// summand everywhere (mutation testing).
inline std::map<PointPair, PointSeries2> fixed_K(Kind kind, int n, const CISpec& a, const std::vector<BigRational>& alpha,
                                                 int D, std::optional<std::pair<int, int>> flip = std::nullopt) {
    AMatrixSpec s = AMatrixSpec::specialized(a, alpha);
    std::map<PointPair, PointSeries2> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            PointSeries2 ps(D);
            for (auto& [e, c] : ps.terms()) {
                (void)c;
                UniRatFunc v = A_at(kind, s, i, j, e.first, e.second);
                if (flip && *flip == e) v = -v;
                ps(e.first, e.second) = v;
            }
            out.emplace(PointPair{i, j}, std::move(ps));
        }
    return out;
}

// Bar transform at p_ij: q^d coefficient (-1)^d sum (1 + (d1-d2) hbar/(a_i-a_j)) F_{d1,d2}
inline PointSeries bar_at(const PointSeries2& F, const BigRational& ai, const BigRational& aj) {
    const int D = F.trunc();
    PointSeries out(static_cast<std::size_t>(D + 1));
    for (int d = 0; d <= D; ++d) {
        UniRatFunc s;
        for (int d1 = 0; d1 <= d; ++d1) {
            UniPoly w(std::vector<BigRational>{1, BigRational(2 * d1 - d) / (ai - aj)});
            s += F(d1, d - d1) * UniRatFunc(w);
        }
        out[static_cast<std::size_t>(d)] = (d % 2) ? -s : s;
    }
    return out;
}

inline FixedSeries fixed_bar(const std::map<PointPair, PointSeries2>& F, const std::vector<BigRational>& alpha) {
    FixedSeries out;
    out.n = static_cast<int>(alpha.size());
    for (auto& [p, s] : F) {
        out.D = s.trunc();
        out.at.emplace(p, bar_at(s, alpha[static_cast<std::size_t>(p.first)], alpha[static_cast<std::size_t>(p.second)]));
    }
    return out;
}

// Y = bar transform of K, at every ordered pair.
inline FixedSeries fixed_Y(Kind kind, int n, const CISpec& a, const std::vector<BigRational>& alpha, int D,
                           std::optional<std::pair<int, int>> flip = std::nullopt) {
    return fixed_bar(fixed_K(kind, n, a, alpha, D, flip), alpha);
}

}  // namespace qgr
