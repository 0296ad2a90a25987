#pragma once

#include <stdexcept>
#include <vector>

#include "qgr/exact/qseries.hpp"
#include "qgr/exact/ratfunc.hpp"
#include "qgr/exact/xseries.hpp"
#include "qgr/hyper/spec.hpp"

// Generating functions as rational functions in (x1, x2, hbar) with the
// torus weights fixed to concrete numbers (alpha = 0 for the closed forms).

namespace qgr {

using Series2 = Q2Series<RatFunc>;
using Series1 = QSeries<RatFunc>;

namespace detail {

// prod_j (x - alpha_j + l hbar) - prod_j (x - alpha_j)
inline SparsePoly shifted_difference(int v, const std::vector<BigRational>& alpha, int l) {
    SparsePoly x = SparsePoly::variable(v), a(1), b(1);
    for (auto& w : alpha) {
        a = a * (x - SparsePoly(w) + H() * BigRational(l));
        b = b * (x - SparsePoly(w));
    }
    return a - b;
}

// l range of the numerator: 1..m (dot) or 0..m-1 (ddot)
inline std::pair<int, int> l_range(Kind kind, int m) { return kind == Kind::dot ? std::make_pair(1, m) : std::make_pair(0, m - 1); }

}  // namespace detail

inline RatFunc A_coefficient(Kind kind, const AMatrixSpec& s, int d1, int d2) {
    SparsePoly num(1);
    for (auto& row : s.a) {
        auto [lo, hi] = detail::l_range(kind, row[0] * d1 + row[1] * d2);
        SparsePoly base = X1() * BigRational(row[0]) + X2() * BigRational(row[1]);
        for (int l = lo; l <= hi; ++l) num = num * (base + H() * BigRational(l));
    }
    RatFunc r(num);
    for (int l = 1; l <= d1; ++l) r.add_den_factor(detail::shifted_difference(var::x1, s.alpha1, l), 1);
    for (int l = 1; l <= d2; ++l) r.add_den_factor(detail::shifted_difference(var::x2, s.alpha2, l), 1);
    return r;
}

inline Series2 build_A(Kind kind, const AMatrixSpec& s, int D) {
    Series2 out(D);
    for (auto& [e, c] : out.terms()) {
        (void)c;
        out(e.first, e.second) = A_coefficient(kind, s, e.first, e.second);
    }
    return out;
}

inline Series2 build_K(Kind kind, int n, const CISpec& a, const std::vector<BigRational>& alpha, int D) {
    if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("need n weights");
    return build_A(kind, AMatrixSpec::specialized(a, alpha), D);
}

// F|_{q1=q2=-q} + hbar (q1 d/dq1 - q2 d/dq2) F|_{q1=q2=-q} / (x1 - x2)
inline Series1 bar_transform(const Series2& F) {
    const int D = F.trunc();
    Series1 out(D);
    const SparsePoly diff = X1() - X2();
    for (int d = 0; d <= D; ++d) {
        RatFunc S, T;
        for (int d1 = 0; d1 <= d; ++d1) {
            const RatFunc& f = F(d1, d - d1);
            S += f;
            if (2 * d1 != d) T += f * BigRational(2 * d1 - d);
        }
        if (!T.divide_numerator(diff))
            throw std::domain_error("bar transform: derivative term is not divisible by x1-x2 at q^" + std::to_string(d));
        RatFunc c = S + T * RatFunc(H());
        out[d] = (d % 2) ? -c : c;
    }
    return out;
}

// Closed forms at alpha = 0; the (d1, d2) and (d2, d1) summands are put
// over a common denominator before the exact division by x1 - x2.
inline Series1 build_Y_closed(Kind kind, int n, const CISpec& a, int D) {
    Series1 out(D);
    const SparsePoly diff = X1() - X2();
    auto zero = zero_alpha(n);
    for (int d = 0; d <= D; ++d) {
        SparsePoly num(1);
        for (int ak : a.a) {
            auto [lo, hi] = detail::l_range(kind, ak * d);
            for (int l = lo; l <= hi; ++l) num = num * ((X1() + X2()) * BigRational(ak) + H() * BigRational(l));
        }
        RatFunc sum;
        for (int d1 = 0; d1 <= d; ++d1) {
            const int d2 = d - d1;
            RatFunc t(num * (diff + H() * BigRational(d1 - d2)));
            for (int l = 1; l <= d1; ++l) t.add_den_factor(detail::shifted_difference(var::x1, zero, l), 1);
            for (int l = 1; l <= d2; ++l) t.add_den_factor(detail::shifted_difference(var::x2, zero, l), 1);
            sum += t;
        }
        if (!sum.divide_numerator(diff)) throw std::logic_error("closed form: pole at x1=x2 did not cancel");
        out[d] = (d % 2) ? -sum : sum;
    }
    return out;
}

// I(q): 1 unless kind = dot and |a| = n, in which case the constant term
// of the x-expansion of Y_d at hbar = 1.
inline QSeries<BigRational> normalization_I(Kind kind, int n, const CISpec& a, int D) {
    a.validate(n);
    QSeries<BigRational> I = QSeries<BigRational>::one(D);
    if (kind == Kind::ddot || a.total() < n) return I;
    Series1 Y = build_Y_closed(kind, n, a, D);
    for (int d = 1; d <= D; ++d) {
        XSeries xs = expand_series_in_x(Y[d], 0, 1);
        auto it = xs.find({0, 0});
        // degree-0 homogeneous: the constant term is c * hbar^0
        I[d] = it == xs.end() ? BigRational(0) : it->second[0];
    }
    return I;
}

// Y / I with I inverted in Q[[q]].
inline Series1 divide_by_I(const Series1& Y, const QSeries<BigRational>& I) {
    const int D = Y.trunc();
    std::vector<BigRational> inv(static_cast<std::size_t>(D + 1));
    inv[0] = 1 / I[0];
    for (int d = 1; d <= D; ++d) {
        BigRational s = 0;
        for (int e = 1; e <= d; ++e) s += I[e] * inv[static_cast<std::size_t>(d - e)];
        inv[static_cast<std::size_t>(d)] = -s * inv[0];
    }
    Series1 out(D);
    for (int d = 0; d <= D; ++d)
        for (int e = 0; e <= d; ++e)
            if (inv[static_cast<std::size_t>(e)] != 0) out[d] += Y[d - e] * inv[static_cast<std::size_t>(e)];
    return out;
}

}  // namespace qgr
