#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qgr/cohomology/grassmannian.hpp"
#include "qgr/exact/xseries.hpp"
#include "qgr/hyper/fixed_point.hpp"
#include "qgr/hyper/symbolic.hpp"
#include "qgr/operators/series_matrix.hpp"

// D^p = sum_{|r| <= |p|} c_{p,r}(q1, q2) hbar^{|p|-|r|} L^r, where L_i acts
// on the q^d coefficient as multiplication by x_i + d_i hbar. The c are
// fixed by requiring that the x^r hbar^{|p|-|r|} coefficient of D^p F be
// delta_{p,r} for every |r| <= |p|, all q-degrees, with F taken at zero
// weights. When F_d has negative degree for d != 0 this gives c = delta.

namespace qgr {

using Exp2 = std::pair<int, int>;
using OperatorCoeffs = std::map<Exp2, Q2S>;  // r -> coefficient series

// All r with |r| <= m, by degree then decreasing r1.
inline std::vector<Exp2> exponents_upto(int m) {
    std::vector<Exp2> out;
    for (int k = 0; k <= m; ++k)
        for (int a = k; a >= 0; --a) out.emplace_back(a, k - a);
    return out;
}

struct FrakD {
    int max_degree = 0;
    int D = 0;
    bool naive = false;
    std::map<Exp2, OperatorCoeffs> c;  // p -> (r -> c_{p,r})

    const OperatorCoeffs& of(const Exp2& p) const { return c.at(p); }
};

namespace detail {

inline BigRational binom(int n, int k) {
    BigRational r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline BigRational ipow(int b, int e) {
    BigRational r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace detail

inline FrakD naive_frakD(int max_degree, int D) {
    FrakD f{max_degree, D, true, {}};
    for (auto& p : exponents_upto(max_degree)) f.c[p][p] = Q2S::one(D);
    return f;
}

// F0: the two-variable series at zero weights (coefficients in x, hbar).
inline FrakD build_frakD(const Series2& F0, int max_degree) {
    const int D = F0.trunc();
    // kappa[d][v] = coefficient of x^v hbar^{-|v|} in F0_d
    std::map<Exp2, std::map<Exp2, BigRational>> kappa;
    for (auto& [d, f] : F0.terms()) {
        if (f.is_zero()) continue;
        XSeries xs = expand_series_in_x(f, max_degree, max_degree + 1);
        for (auto& [v, l] : xs) {
            BigRational c = l[-(v.first + v.second)];
            if (c != 0) kappa[d][v] = c;
        }
    }
    auto kap = [&](const Exp2& d, int v1, int v2) -> BigRational {
        auto it = kappa.find(d);
        if (it == kappa.end()) return 0;
        auto jt = it->second.find({v1, v2});
        return jt == it->second.end() ? BigRational(0) : jt->second;
    };
    FrakD out{max_degree, D, false, {}};
    for (int m = 0; m <= max_degree; ++m) {
        auto idx = exponents_upto(m);
        SeriesMatrix<Q2S> B(idx.size(), std::vector<Q2S>(idx.size(), Q2S(D)));
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) {
                auto [r1, r2] = idx[a];
                auto [s1, s2] = idx[b];
                for (auto& [d, unused] : F0.terms()) {
                    (void)unused;
                    BigRational v = 0;
                    for (int u1 = 0; u1 <= std::min(r1, s1); ++u1)
                        for (int u2 = 0; u2 <= std::min(r2, s2); ++u2) {
                            BigRational k = kap(d, s1 - u1, s2 - u2);
                            if (k == 0) continue;
                            v += detail::binom(r1, u1) * detail::binom(r2, u2) * detail::ipow(d.first, r1 - u1) *
                                 detail::ipow(d.second, r2 - u2) * k;
                        }
                    B[a][b](d.first, d.second) = v;
                }
            }
        auto Bi = neumann_inverse(B, D);
        for (std::size_t a = 0; a < idx.size(); ++a) {
            if (idx[a].first + idx[a].second != m) continue;
            for (std::size_t b = 0; b < idx.size(); ++b)
                if (!(Bi[a][b] == Q2S(D))) out.c[idx[a]][idx[b]] = Bi[a][b];
        }
    }
    return out;
}

// gamma(D): each monomial x^p of the Schur polynomial becomes D^p.
inline OperatorCoeffs gamma_operator(const Partition& lambda, const FrakD& fd) {
    if (lambda.size() > fd.max_degree) throw std::invalid_argument("class degree exceeds the operator table");
    OperatorCoeffs w;
    const auto s = schur_polynomial(lambda);
    for (auto& t : s.terms()) {
        Exp2 p{static_cast<int>(t.m[var::x1]), static_cast<int>(t.m[var::x2])};
        for (auto& [r, c] : fd.of(p)) {
            auto it = w.find(r);
            Q2S scaled(fd.D);
            for (auto& [e, v] : c.terms()) scaled(e.first, e.second) = v * t.c;
            if (it == w.end())
                w.emplace(r, scaled);
            else
                it->second = it->second + scaled;
        }
    }
    return w;
}

// sum_r w_r hbar^{k-|r|} L^r F
inline Series2 apply_operator(const OperatorCoeffs& w, int k, const Series2& F) {
    const int D = F.trunc();
    Series2 out(D);
    for (auto& [r, coef] : w) {
        const int e = k - r.first - r.second;
        if (e < 0) throw std::invalid_argument("operator term of degree above k");
        for (auto& [d, f] : F.terms()) {
            if (f.is_zero()) continue;
            SparsePoly m = (X1() + H() * BigRational(d.first)).pow(static_cast<unsigned>(r.first)) *
                           (X2() + H() * BigRational(d.second)).pow(static_cast<unsigned>(r.second)) * H().pow(static_cast<unsigned>(e));
            RatFunc g = f * RatFunc(m);
            for (auto& [e2, c] : coef.terms()) {
                if (c == 0) continue;
                int d1 = d.first + e2.first, d2 = d.second + e2.second;
                if (d1 + d2 > D) continue;
                out(d1, d2) += g * c;
            }
        }
    }
    return out;
}

// The same at one fixed point, x1 = w1 and x2 = w2.
inline PointSeries2 apply_operator_at(const OperatorCoeffs& w, int k, const PointSeries2& F, const BigRational& w1,
                                      const BigRational& w2) {
    const int D = F.trunc();
    PointSeries2 out(D);
    for (auto& [r, coef] : w) {
        const int e = k - r.first - r.second;
        if (e < 0) throw std::invalid_argument("operator term of degree above k");
        for (auto& [d, f] : F.terms()) {
            if (f.is_zero()) continue;
            UniPoly m = UniPoly::t(static_cast<unsigned>(e));
            UniPoly l1(std::vector<BigRational>{w1, BigRational(d.first)}), l2(std::vector<BigRational>{w2, BigRational(d.second)});
            for (int i = 0; i < r.first; ++i) m = m * l1;
            for (int i = 0; i < r.second; ++i) m = m * l2;
            UniRatFunc g = f * UniRatFunc(m);
            for (auto& [e2, c] : coef.terms()) {
                if (c == 0) continue;
                int d1 = d.first + e2.first, d2 = d.second + e2.second;
                if (d1 + d2 > D) continue;
                out(d1, d2) += g * c;
            }
        }
    }
    return out;
}

}  // namespace qgr
