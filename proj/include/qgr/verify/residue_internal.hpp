#pragma once

#include <string>
#include <vector>

#include "qgr/hyper/symbolic.hpp"
#include "qgr/residue/residue.hpp"
#include "qgr/verify/polynomiality.hpp"

// The residue mechanics behind polynomiality of Phi, run on the
// integrand itself at a concrete hbar = h0: after Res_{x1 = alpha_i} the
// integrand is rational in x2 with poles at the weights, at the roots of
// the shifted differences, and at infinity.

namespace qgr {

struct ResidueInternalEntry {
    int p = 0, d = 0, i = 0;
    bool sum_vanishes = false;  // residue theorem in x2
    bool zero_regular = false;  // Res_{x2=0} = 0
};

struct ResidueInternalReport {
    std::vector<ResidueInternalEntry> entries;
    struct Match {
        int p, d;
        bool pass;
    };
    std::vector<Match> phi_matches;  // (1/2) sum Res_{alpha_i} Res_{alpha_j} = Phi(h0)

    bool pass() const {
        for (auto& e : entries)
            if (!e.sum_vanishes || !e.zero_regular) return false;
        for (auto& m : phi_matches)
            if (!m.pass) return false;
        return !entries.empty();
    }
};

// <a> (x1 + x2)^l as a polynomial
inline SparsePoly eta_ci_poly(const CISpec& a) {
    return (X1() + X2()).pow(static_cast<unsigned>(a.ell())) * BigRational(a.product());
}

// Y, Z: symbolic series at the concrete weights alpha; phi built from
// the same series at the fixed points.
inline ResidueInternalReport check_residue_internal(const Series1& Y, const Series1& Z, const SparsePoly& eta,
                                                    const std::vector<BigRational>& alpha, const PhiSeries& phi,
                                                    const BigRational& h0) {
    ResidueInternalReport rep;
    const int n = static_cast<int>(alpha.size());
    std::vector<BigRational> cands = alpha;
    cands.push_back(0);
    BigRational fact = 1;
    for (int p = 0; p <= phi.Nz; ++p) {
        if (p > 0) fact *= p;
        for (int d = 0; d <= phi.D; ++d) {
            BigRational total = 0;
            for (int i = 0; i < n; ++i) {
                const BigRational& ai = alpha[static_cast<std::size_t>(i)];
                auto at_i = [&](const RatFunc& f, const BigRational& h) {
                    return f.evaluate(var::x1, ai).evaluate(var::hbar, h).to_univariate(var::x2);
                };
                UniPoly x2 = UniPoly::t(1);
                UniRatFunc sum;
                for (int d1 = 0; d1 <= d; ++d1) {
                    UniRatFunc w = at_i(Y[d1], h0) * at_i(Z[d - d1], -h0);
                    UniPoly base = x2 + UniPoly(ai + d1 * h0), pw(1);
                    for (int e = 0; e < p; ++e) pw = pw * base;
                    sum += w * UniRatFunc(pw);
                }
                BigRational c = 1;
                for (int k = 0; k < n; ++k)
                    if (k != i) c /= ai - alpha[static_cast<std::size_t>(k)];
                std::map<BigRational, int> den;
                for (auto& w : alpha) den[w] += 1;
                UniPoly lin = x2 - UniPoly(ai);
                UniRatFunc pre = RatFunc(eta.evaluate(var::x1, ai)).to_univariate(var::x2) *
                                 UniRatFunc(lin * lin * (-c / fact), den);
                UniRatFunc R = pre * sum;
                ResidueInternalEntry e{p, d, i, false, false};
                e.sum_vanishes = residue_sum_check(R, cands).ok;
                e.zero_regular = residue_at(R, 0) == 0;
                rep.entries.push_back(e);
                for (int j = 0; j < n; ++j)
                    if (j != i) total += residue_at(R, alpha[static_cast<std::size_t>(j)]);
            }
            total /= 2;
            rep.phi_matches.push_back({p, d, total == phi.coeff[static_cast<std::size_t>(p)][static_cast<std::size_t>(d)](h0)});
        }
    }
    return rep;
}

}  // namespace qgr
