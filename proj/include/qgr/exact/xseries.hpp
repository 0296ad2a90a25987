#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "qgr/exact/laurent.hpp"
#include "qgr/exact/ratfunc.hpp"

namespace qgr {

// Power series in (x1, x2) with Laurent-in-hbar^{-1} coefficients, keyed
// by the exponent pair and truncated above total x-degree K.
using XSeries = std::map<std::pair<int, int>, LaurentQ>;

namespace detail {

inline XSeries xs_mul(const XSeries& a, const XSeries& b, int K) {
    XSeries r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            if (ea.first + ea.second + eb.first + eb.second > K) continue;
            std::pair<int, int> e{ea.first + eb.first, ea.second + eb.second};
            auto it = r.find(e);
            if (it == r.end())
                r.emplace(e, ca * cb);
            else
                it->second += ca * cb;
        }
    return r;
}

inline XSeries xs_from_poly(const SparsePoly& p, int K) {
    std::map<std::pair<int, int>, std::map<int, BigRational>> parts;
    for (auto& t : p.terms()) {
        int a = static_cast<int>(t.m[var::x1]), b = static_cast<int>(t.m[var::x2]);
        if (a + b > K) continue;
        parts[{a, b}][static_cast<int>(t.m[var::hbar])] += t.c;
    }
    XSeries r;
    for (auto& [e, m] : parts) {
        LaurentQ l;
        for (auto& [k, c] : m) l.set(k, c);
        r.emplace(e, l);
    }
    return r;
}

inline XSeries xs_inverse(const SparsePoly& atom, int K, int depth) {
    std::vector<Term> base, rest;
    for (auto& t : atom.terms()) (t.m[var::x1] + t.m[var::x2] == 0 ? base : rest).push_back(t);
    SparsePoly a0 = SparsePoly::from_terms(base);
    if (a0.is_zero()) throw std::domain_error("denominator vanishes at x=0, expansion point invalid");
    UniRatFunc inv0 = UniRatFunc(1) / UniRatFunc(UniPoly::from_sparse(a0, var::hbar));
    LaurentQ l0 = inv0.laurent_at_infinity(depth);
    XSeries i0{{{0, 0}, l0}};
    XSeries u = xs_mul(xs_from_poly(-SparsePoly::from_terms(rest), K), i0, K);
    XSeries sum{{{0, 0}, LaurentQ::monomial(0, 1)}};
    XSeries pw = sum;
    for (int k = 1; k <= K; ++k) {
        pw = xs_mul(pw, u, K);
        for (auto& [e, c] : pw) {
            auto it = sum.find(e);
            if (it == sum.end())
                sum.emplace(e, c);
            else
                it->second += c;
        }
    }
    return xs_mul(sum, i0, K);
}

}  // namespace detail

// Expand f in (x1, x2) about 0 through total degree K, each coefficient
// expanded in hbar^{-1} and exact for exponents >= 1 - depth.
inline XSeries expand_series_in_x(const RatFunc& f, int K, int depth) {
    auto check = [](const SparsePoly& p) {
        if (!p.only_uses({var::x1, var::x2, var::hbar}))
            throw std::invalid_argument("x-expansion needs a function of x1, x2, hbar only");
    };
    check(f.num());
    int pad = static_cast<int>(f.num().degree_in(var::hbar)) + 2;
    for (auto& [a, m] : f.atoms()) {
        check(a);
        pad += m * static_cast<int>(a.degree_in(var::hbar)) * (K + 1);
    }
    const int work = depth + pad;
    XSeries r = detail::xs_from_poly(f.num(), K);
    for (auto& [a, m] : f.atoms()) {
        XSeries inv = detail::xs_inverse(a, K, work);
        for (int i = 0; i < m; ++i) r = detail::xs_mul(r, inv, K);
    }
    XSeries out;
    for (auto& [e, c] : r) {
        if (c.is_exact()) {
            if (!c.is_zero()) out.emplace(e, c);
            continue;
        }
        if (c.lo() > 1 - depth) throw std::logic_error("x-expansion lost precision; increase depth");
        out.emplace(e, c.truncated(1 - depth));
    }
    return out;
}

}  // namespace qgr
