#pragma once

#include <string>
#include <vector>

#include "qgr/exact/linalg.hpp"
#include "qgr/operators/frakD.hpp"

namespace qgr {

struct NormalizationAudit {
    int checked = 0;
    std::vector<std::string> failures;
    bool pass() const { return checked > 0 && failures.empty(); }
};

namespace detail {

inline std::string exp_str(const Exp2& e) { return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")"; }

}  // namespace detail

// At zero weights: q^0 of D^p F0 is x^p, and for |r| <= |p| the
// x^r hbar^{|p|-|r|} coefficient is delta_{p,r} in every q-degree.
inline NormalizationAudit audit_normalization(const FrakD& fd, const Series2& F0, int max_p) {
    NormalizationAudit a;
    for (auto& p : exponents_upto(max_p)) {
        const int k = p.first + p.second;
        Series2 G = apply_operator(fd.of(p), k, F0);
        ++a.checked;
        RatFunc xp(X1().pow(static_cast<unsigned>(p.first)) * X2().pow(static_cast<unsigned>(p.second)));
        if (!(G(0, 0) == xp)) a.failures.push_back("p=" + detail::exp_str(p) + ": q^0 term is " + G(0, 0).to_string());
        for (auto& [d, g] : G.terms()) {
            if (g.is_zero()) continue;
            XSeries xs = expand_series_in_x(g, k, 1);
            for (auto& r : exponents_upto(k)) {
                auto it = xs.find(r);
                BigRational v = it == xs.end() ? BigRational(0) : it->second[k - r.first - r.second];
                BigRational want = (r == p && d == Exp2{0, 0}) ? 1 : 0;
                if (v != want)
                    a.failures.push_back("p=" + detail::exp_str(p) + " r=" + detail::exp_str(r) + " q^" + detail::exp_str(d) +
                                         ": " + v.get_str());
            }
            for (auto& [v, l] : xs)
                if (!l.is_zero() && l.top() > k)
                    a.failures.push_back("p=" + detail::exp_str(p) + ": hbar power above |p| at q^" + detail::exp_str(d));
        }
    }
    return a;
}

// Equivariant version on P^{n-1} x P^{n-1}: restrictions to the n^2 fixed
// points are expanded at hbar = infinity and solved for the coefficients
// of x1^a x2^b (a, b < n); the hbar^{|p|-|r|} x^r entries must be delta.
inline NormalizationAudit audit_normalization_equivariant(const FrakD& fd, Kind kind, const AMatrixSpec& s, int D,
                                                          int max_p) {
    NormalizationAudit a;
    const int n = s.n();
    auto FA = fixed_A(kind, s, D);
    std::vector<Exp2> pts, mons;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pts.emplace_back(i, j);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) mons.emplace_back(x, y);
    Matrix M(pts.size(), std::vector<BigRational>(mons.size()));
    for (std::size_t u = 0; u < pts.size(); ++u)
        for (std::size_t v = 0; v < mons.size(); ++v)
            M[u][v] = qgr::pow(s.alpha1[static_cast<std::size_t>(pts[u].first)], static_cast<unsigned>(mons[v].first)) *
                      qgr::pow(s.alpha2[static_cast<std::size_t>(pts[u].second)], static_cast<unsigned>(mons[v].second));
    Matrix Mi = inverse(M);
    for (auto& p : exponents_upto(max_p)) {
        const int k = p.first + p.second;
        if (p.first >= n || p.second >= n) continue;
        std::vector<PointSeries2> G;
        for (auto& [i, j] : pts)
            G.push_back(apply_operator_at(fd.of(p), k, FA.at.at({i, j}), s.alpha1[static_cast<std::size_t>(i)],
                                          s.alpha2[static_cast<std::size_t>(j)]));
        ++a.checked;
        for (int dt = 0; dt <= D; ++dt)
            for (int d1 = 0; d1 <= dt; ++d1) {
                Exp2 d{d1, dt - d1};
                std::vector<LaurentQ> lau;
                for (auto& g : G) {
                    lau.push_back(g(d.first, d.second).laurent_at_infinity(1));
                    if (!lau.back().is_zero() && lau.back().top() > k)
                        a.failures.push_back("p=" + detail::exp_str(p) + ": hbar power above |p| at q^" + detail::exp_str(d));
                }
                for (int e = 0; e <= k; ++e) {
                    std::vector<BigRational> v(pts.size());
                    for (std::size_t u = 0; u < pts.size(); ++u) v[u] = lau[u][e];
                    for (std::size_t w = 0; w < mons.size(); ++w) {
                        const Exp2& r = mons[w];
                        if (r.first + r.second != k - e) continue;
                        BigRational c = 0;
                        for (std::size_t u = 0; u < pts.size(); ++u) c += Mi[w][u] * v[u];
                        BigRational want = (r == p && d == Exp2{0, 0}) ? 1 : 0;
                        if (c != want)
                            a.failures.push_back("p=" + detail::exp_str(p) + " r=" + detail::exp_str(r) + " q^" +
                                                 detail::exp_str(d) + ": " + c.get_str());
                    }
                }
            }
    }
    return a;
}

}  // namespace qgr
