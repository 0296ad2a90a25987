#pragma once

#include <string>
#include <vector>

#include "qgr/verify/polynomiality.hpp"
#include "qgr/verify/recursivity.hpp"

namespace qgr {

// The hypotheses under which agreement mod hbar^{-1} forces equality.
struct UniquenessAudit {
    bool first_recursive = false;
    bool second_recursive = false;
    bool mutual_polynomial = false;
    bool leading_nonzero = false;
    std::vector<std::string> notes;

    bool all() const { return first_recursive && second_recursive && mutual_polynomial && leading_nonzero; }
};

inline UniquenessAudit audit_uniqueness_hypotheses(const FixedSeries& F, const FixedSeries& Fp, const CoeffFn& C,
                                                   const CoeffFn& Cp, const EtaFn& eta, int Nz, int D,
                                                   const std::vector<BigRational>& alpha) {
    UniquenessAudit a;
    auto r1 = check_recursive(F, C, alpha);
    auto r2 = check_recursive(Fp, Cp, alpha);
    a.first_recursive = r1.pass();
    a.second_recursive = r2.pass();
    if (auto f = r1.first_failure()) a.notes.push_back("first series not recursive at d=" + std::to_string(f->d));
    if (auto f = r2.first_failure()) a.notes.push_back("second series not recursive at d=" + std::to_string(f->d));
    try {
        auto m = check_mpc(build_phi(F, Fp, eta, Nz, D, alpha));
        a.mutual_polynomial = m.pass;
        if (!m.pass)
            a.notes.push_back("polynomiality fails at z^" + std::to_string(m.offenders.front().p) + " q^" +
                              std::to_string(m.offenders.front().d));
    } catch (const EtaError& e) {
        a.notes.push_back(e.what());
    }
    a.leading_nonzero = true;
    for (auto& [p, s] : F.at)
        if (s.at(0).is_zero()) {
            a.leading_nonzero = false;
            a.notes.push_back("q^0 coefficient vanishes at p_" + std::to_string(p.first + 1) + std::to_string(p.second + 1));
        }
    return a;
}

}  // namespace qgr
