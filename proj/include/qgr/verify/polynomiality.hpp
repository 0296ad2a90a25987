#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qgr/hyper/fixed_point.hpp"

namespace qgr {

// eta(alpha_i, alpha_j)
using EtaFn = std::function<BigRational(const BigRational&, const BigRational&)>;

inline EtaFn eta_one() {
    return [](const BigRational&, const BigRational&) { return BigRational(1); };
}

// <a> (x1 + x2)^l
inline EtaFn eta_ci(const CISpec& a) {
    return [a](const BigRational& x, const BigRational& y) -> BigRational {
        BigRational s = x + y;
        return BigRational(a.product()) * qgr::pow(s, static_cast<unsigned>(a.ell()));
    };
}

// Coefficients Phi[p][d] of z^p q^d.
struct PhiSeries {
    int Nz = 0, D = 0;
    std::vector<std::vector<UniRatFunc>> coeff;
};

struct EtaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// (1/2) sum_{i != j} eta e^{(a_i+a_j) z} / prod prod (..) F(q e^{hbar z})(hbar) F'(-hbar);
// q^{d1} e^{d1 hbar z} combines with e^{(a_i+a_j) z} into (a_i+a_j+d1 hbar)^p / p!.
inline PhiSeries build_phi(const FixedSeries& F, const FixedSeries& Fp, const EtaFn& eta, int Nz, int D,
                           const std::vector<BigRational>& alpha) {
    if (D > F.D || D > Fp.D) throw std::invalid_argument("Phi truncation exceeds the series truncation");
    const int n = F.n;
    PhiSeries phi{Nz, D, std::vector<std::vector<UniRatFunc>>(static_cast<std::size_t>(Nz + 1), std::vector<UniRatFunc>(static_cast<std::size_t>(D + 1)))};
    std::vector<BigRational> fact(static_cast<std::size_t>(Nz + 1), BigRational(1));
    for (int p = 1; p <= Nz; ++p) fact[static_cast<std::size_t>(p)] = fact[static_cast<std::size_t>(p - 1)] * p;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const BigRational& ai = alpha[static_cast<std::size_t>(i)];
            const BigRational& aj = alpha[static_cast<std::size_t>(j)];
            BigRational w = eta(ai, aj);
            if (w == 0) throw EtaError("eta vanishes at a fixed point");
            for (int k = 0; k < n; ++k)
                if (k != i && k != j) w /= (ai - alpha[static_cast<std::size_t>(k)]) * (aj - alpha[static_cast<std::size_t>(k)]);
            w /= 2;
            for (int d = 0; d <= D; ++d)
                for (int d1 = 0; d1 <= d; ++d1) {
                    UniRatFunc prod = F(i, j, d1) * Fp(i, j, d - d1).reflected();
                    if (prod.is_zero()) continue;
                    UniPoly base(std::vector<BigRational>{ai + aj, BigRational(d1)}), pw(1);
                    for (int p = 0; p <= Nz; ++p) {
                        phi.coeff[static_cast<std::size_t>(p)][static_cast<std::size_t>(d)] +=
                            prod * UniRatFunc(pw * (w / fact[static_cast<std::size_t>(p)]));
                        pw = pw * base;
                    }
                }
        }
    return phi;
}

struct MPCReport {
    bool pass = true;
    struct Offender {
        int p, d;
        std::string value;
    };
    std::vector<Offender> offenders;
};

// Polynomial in hbar at every (z, q) order.
inline MPCReport check_mpc(const PhiSeries& phi) {
    MPCReport r;
    for (int p = 0; p <= phi.Nz; ++p)
        for (int d = 0; d <= phi.D; ++d) {
            const UniRatFunc& c = phi.coeff[static_cast<std::size_t>(p)][static_cast<std::size_t>(d)];
            if (!c.is_polynomial()) {
                r.pass = false;
                r.offenders.push_back({p, d, c.to_string()});
            }
        }
    return r;
}

}  // namespace qgr
