// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "qgr/operators/normalization.hpp"
#include "qgr/operators/pipeline.hpp"
#include "qgr/verify/audit.hpp"
#include "qgr/verify/polynomiality.hpp"
#include "qgr/verify/recursivity.hpp"

using namespace qgr;

namespace {

struct Case {
    int n;
    CISpec a;
};

const std::vector<Case> kDualSet = {{3, {}}, {3, {{1, 1, 1}}}, {4, {{2}}}, {4, {{4}}}, {5, {{2, 3}}}};

// Collects failures; the first few are printed under the criterion line.
struct Log {
    std::vector<std::string> failures;
    void fail(const std::string& s) { failures.push_back(s); }
    void expect(bool ok, const std::string& s) {
        if (!ok) fail(s);
    }
};

std::string label(const Case& c) { return "n=" + std::to_string(c.n) + " a=" + c.a.to_string(); }

SparsePoly random_symmetric(int k, std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-9, 9);
    SparsePoly e1 = X1() + X2(), e2 = X1() * X2(), p;
    for (int b = 0; 2 * b <= k; ++b) p = p + SparsePoly(c(rng)) * e1.pow(static_cast<unsigned>(k - 2 * b)) * e2.pow(static_cast<unsigned>(b));
    return p;
}

void criterion1(Log& L) {
    std::mt19937 rng(20261017);
    for (int n = 3; n <= 6; ++n) {
        SchurBasis b(n);
        Matrix P = pairing_matrix(b);
        const auto& el = b.elements();
        for (std::size_t i = 0; i < el.size(); ++i)
            for (std::size_t j = 0; j < el.size(); ++j)
                L.expect(P[i][j] == (el[j] == b.complement(el[i]) ? 1 : 0), "n=" + std::to_string(n) + " pairing entry " + el[i].to_string() + "," + el[j].to_string());
        auto ctx = GrContext::generic(n);
        const Partition top{n - 2, n - 2};
        for (int t = 0; t < 10; ++t) {
            SparsePoly f = random_symmetric(b.top_degree(), rng);
            SparsePoly ab = ab_integrate(f, ctx);
            auto cls = schur_reduce(f, b);
            auto it = cls.find(top);
            SparsePoly via = it == cls.end() ? SparsePoly() : it->second;
            L.expect(ab == via, "n=" + std::to_string(n) + " localization integral " + ab.to_string() + " vs " + via.to_string());
        }
    }
}

void criterion2(Log& L) {
    for (auto& c : kDualSet)
        for (Kind kind : {Kind::dot, Kind::ddot}) {
            auto Y = bar_transform(build_K(kind, c.n, c.a, zero_alpha(c.n), 3));
            auto Yc = build_Y_closed(kind, c.n, c.a, 3);
            for (int d = 0; d <= 3; ++d) L.expect(Y[d] == Yc[d], label(c) + " " + kind_name(kind) + " q^" + std::to_string(d));
        }
}

void criterion3(Log& L) {
    for (auto& c : kDualSet) {
        if (c.n > 4) continue;
        auto alpha = default_alpha(c.n);
        for (Kind kind : {Kind::dot, Kind::ddot}) {
            auto r = check_recursive(fixed_Y(kind, c.n, c.a, alpha, 3), C_table(kind, c.a, alpha), alpha);
            L.expect(r.pass(), label(c) + " Y " + kind_name(kind) + " not recursive");
            auto s = AMatrixSpec::specialized(c.a, alpha);
            L.expect(check_recursive2(fixed_A(kind, s, 2), kind, s).pass(), label(c) + " A " + kind_name(kind) + " (equal weights)");
            AMatrixSpec g;
            for (int x : c.a.a) g.a.push_back({x, x});
            g.alpha1 = alpha;
            for (int m = 0; m < c.n; ++m) g.alpha2.push_back(BigRational(-2) * alpha[static_cast<std::size_t>(m)] + 3);
            L.expect(check_recursive2(fixed_A(kind, g, 2), kind, g).pass(), label(c) + " A " + kind_name(kind) + " (distinct weights)");
        }
    }
}

void criterion4(Log& L) {
    for (auto& c : kDualSet) {
        auto alpha = default_alpha(c.n);
        auto Y = fixed_Y(Kind::dot, c.n, c.a, alpha, 3);
        auto Z = fixed_Y(Kind::ddot, c.n, c.a, alpha, 3);
        auto s = check_mpc(build_phi(Y, Y, eta_ci(c.a), 3, 3, alpha));
        L.expect(s.pass, label(c) + " self pairing with eta");
        auto m = check_mpc(build_phi(Y, Z, eta_one(), 3, 3, alpha));
        L.expect(m.pass, label(c) + " mutual pairing");
    }
}

const std::vector<Case> kOperatorSet = {{3, {}}, {3, {{1}}}, {3, {{1, 1, 1}}}, {4, {{2}}}, {4, {{4}}}};

void criterion5(Log& L) {
    const int D = 3;
    for (auto& c : kOperatorSet)
        for (Kind kind : {Kind::dot, Kind::ddot}) {
            const std::string tag = label(c) + " " + kind_name(kind);
            auto P = build_pipeline(kind, c.n, c.a, D);
            const int top = P.basis.top_degree();
            auto a0 = audit_normalization(P.fd, P.K0, std::min(top, 2));
            L.expect(a0.pass(), tag + " normalization: " + (a0.failures.empty() ? "" : a0.failures.front()));
            auto ae = audit_normalization_equivariant(P.fd, kind, AMatrixSpec::specialized(c.a, default_alpha(c.n)), D, std::min(top, 2));
            L.expect(ae.pass(), tag + " equivariant normalization: " + (ae.failures.empty() ? "" : ae.failures.front()));
            for (auto& [lam, o] : P.opexp) {
                L.expect(check_opexp_q0(o).empty(), tag + " expansion q^0 for " + lam.to_string());
                L.expect(check_opexp_homogeneity(o, c.n, c.a).empty(), tag + " homogeneity for " + lam.to_string());
            }
            for (auto& [k, J] : P.J) {
                L.expect(constant_is_identity(J), tag + " J_" + std::to_string(k) + " q^0");
                L.expect(inverse_certificate(P, k), tag + " J_" + std::to_string(k) + " certificate");
            }
            for (auto& [lam, C] : P.Cdot) {
                L.expect(check_leading_structure(C, P.basis).empty(), tag + " leading structure for " + lam.to_string());
                L.expect(structure_residual(C, P.opexp, P.basis).empty(), tag + " residual for " + lam.to_string());
            }
        }
}

BigRational schur_at(const Partition& lam, const BigRational& x, const BigRational& y) {
    BigRational s = 0;
    for (int t = 0; t <= lam.a - lam.b; ++t) s += qgr::pow(x, static_cast<unsigned>(lam.b + t)) * qgr::pow(y, static_cast<unsigned>(lam.a - t));
    return s;
}

void criterion6(Log& L) {
    const int D = 2;
    for (auto& c : std::vector<Case>{{3, {}}, {3, {{1}}}, {3, {{1, 1, 1}}}, {4, {}}, {4, {{2}}}, {4, {{4}}}}) {
        auto alpha = default_alpha(c.n);
        auto P = build_pipeline(Kind::dot, c.n, c.a, D);
        auto Pd = build_pipeline(Kind::ddot, c.n, c.a, D);
        auto E = build_equivariant(P, alpha);
        auto Ed = build_equivariant(Pd, alpha);
        auto Cd = C_table(Kind::dot, c.a, alpha), Cdd = C_table(Kind::ddot, c.a, alpha);
        for (auto& lam : P.basis.elements()) {
            const std::string tag = label(c) + " " + lam.to_string();
            for (auto* Q : {&P, &Pd}) {
                const auto& y = Q->Ygamma.at(lam);
                L.expect(y.c[0].size() == 1 && y.at(0, lam) == LaurentQ::monomial(0, BigRational(1)), tag + " q^0 is not the class");
            }
            for (auto* F : {&E.Ygamma.at(lam), &Ed.Ygamma.at(lam)})
                for (auto& [p, s] : F->at)
                    L.expect(s[0] == UniRatFunc(schur_at(lam, alpha[static_cast<std::size_t>(p.first)], alpha[static_cast<std::size_t>(p.second)])),
                             tag + " equivariant q^0");
            auto u1 = audit_uniqueness_hypotheses(E.Y, E.Ygamma.at(lam), Cd, Cd, eta_ci(c.a), 2, D, alpha);
            L.expect(u1.all(), tag + " dot: " + (u1.notes.empty() ? "audit failed" : u1.notes.front()));
            auto u2 = audit_uniqueness_hypotheses(E.Y, Ed.Ygamma.at(lam), Cd, Cdd, eta_one(), 2, D, alpha);
            L.expect(u2.all(), tag + " ddot: " + (u2.notes.empty() ? "audit failed" : u2.notes.front()));
        }
    }
}

void criterion7(Log& L) {
    const int D = 3;
    for (auto& a : {CISpec{}, CISpec{{1}}}) {
        auto P = build_pipeline(Kind::dot, 3, a, D);
        auto Pd = build_pipeline(Kind::ddot, 3, a, D);
        auto delta = diagonal(P.basis);
        auto bad = check_orthogonality(double_pairing(P.Ygamma, Pd.Ygamma, delta, D), delta);
        L.expect(bad.empty(), "a=" + a.to_string() + " " + (bad.empty() ? "" : bad.front()));
        for (auto& alpha : {default_alpha(3), std::vector<BigRational>{BigRational(-5, 2), 13, 101}}) {
            auto E = build_equivariant(P, alpha);
            auto Ed = build_equivariant(Pd, alpha);
            auto be = check_orthogonality_equivariant(E.Ygamma, Ed.Ygamma, alpha, D);
            L.expect(be.empty(), "a=" + a.to_string() + " equivariant " + (be.empty() ? "" : be.front()));
            for (auto& [lam, o] : E.opexp) L.expect(compare_opexp(o, P.opexp.at(lam), 3, a).empty(), "a=" + a.to_string() + " weight-free part of " + lam.to_string());
        }
    }
}

void criterion8(Log& L) {
    for (auto& c : std::vector<Case>{{4, {}}, {5, {{2}}}}) {
        auto Y = build_Y_closed(Kind::dot, c.n, c.a, 3);
        const int top = 2 * (c.n - 2);
        for (int d = 1; d <= 3; ++d)
            for (auto& [v, l] : expand_series_in_x(Y[d], top, top + 2)) {
                L.expect(l[0] == 0 && l[-1] == 0, label(c) + " q^" + std::to_string(d) + " low hbar parts");
                L.expect(l.is_zero() || l.top() < 0, label(c) + " q^" + std::to_string(d) + " positive hbar power");
            }
        auto alpha = default_alpha(c.n);
        for (auto& [p, s] : fixed_Y(Kind::dot, c.n, c.a, alpha, 3).at)
            for (int d = 1; d <= 3; ++d) {
                auto l = s[static_cast<std::size_t>(d)].laurent_at_infinity(3);
                L.expect(l.is_zero() || l.top() <= -2, label(c) + " fixed point q^" + std::to_string(d));
            }
    }
}

// every single summand flip with d <= 3 must be caught by recursivity or polynomiality
void criterion9(Log& L) {
    for (auto& c : std::vector<Case>{{3, {}}, {3, {{1}}}, {4, {{2}}}}) {
        auto alpha = default_alpha(c.n);
        auto Z = fixed_Y(Kind::ddot, c.n, c.a, alpha, 3);
        for (int d = 1; d <= 3; ++d)
            for (int d1 = 0; d1 <= d; ++d1) {
                auto F = fixed_Y(Kind::dot, c.n, c.a, alpha, 3, std::make_pair(d1, d - d1));
                bool rec = check_recursive(F, C_table(Kind::dot, c.a, alpha), alpha).pass();
                bool mpc = check_mpc(build_phi(F, F, eta_ci(c.a), 3, 3, alpha)).pass && check_mpc(build_phi(F, Z, eta_one(), 3, 3, alpha)).pass;
                L.expect(!(rec && mpc), label(c) + " flip (" + std::to_string(d1) + "," + std::to_string(d - d1) + ") undetected");
            }
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string text;
        std::function<void(Log&)> run;
    };
    const std::vector<Criterion> all = {
        {1, "Schur pairing is the anti-diagonal permutation; localization integrals match (n=3..6)", criterion1},
        {2, "bar transform of K at zero weights equals the closed forms through q^3", criterion2},
        {3, "Y dot/ddot recursive through q^3 (n=3,4); two-variable A recursive through degree 2", criterion3},
        {4, "self and mutual polynomiality through z^3 q^3", criterion4},
        {5, "operator normalizations, J inverse certificates, structure coefficients through q^3", criterion5},
        {6, "Y_gamma: q^0 is the class, recursivity and polynomiality hypotheses hold (n=3,4)", criterion6},
        {7, "Y_gamma pairing at -hbar reduces to the diagonal through q^3 (n=3, a=() and (1))", criterion7},
        {8, "Y dot = 1 mod hbar^-2 through q^3 for (4,()) and (5,(2))", criterion8},
        {9, "single summand sign flips are detected", criterion9},
    };
    bool ok = true;
    const auto t0 = std::chrono::steady_clock::now();
    for (auto& c : all) {
        Log L;
        const auto t = std::chrono::steady_clock::now();
        try {
            c.run(L);
        } catch (const std::exception& e) {
            L.fail(std::string("exception: ") + e.what());
        }
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
        const bool pass = L.failures.empty();
        ok = ok && pass;
        std::printf("%s criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", c.id, c.text.c_str(), sec);
        for (std::size_t i = 0; i < L.failures.size() && i < 5; ++i) std::printf("    %s\n", L.failures[i].c_str());
        std::fflush(stdout);
    }
    std::printf("total %.2fs\n", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return ok ? 0 : 1;
}
