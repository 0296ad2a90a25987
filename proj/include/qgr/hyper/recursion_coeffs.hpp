#pragma once

#include <stdexcept>
#include <vector>

#include "qgr/hyper/spec.hpp"

namespace qgr {

enum class Slot { first, second };

namespace detail {

inline const BigRational& at(const std::vector<BigRational>& v, int i) { return v.at(static_cast<std::size_t>(i)); }

inline BigRational nonzero(const BigRational& v) {
    if (v == 0) throw GenericityError("recursion coefficient denominator vanishes");
    return v;
}

}  // namespace detail

// Two-variable coefficient for slot s in {1, 2}: the residue data of A at
// hbar = (alpha_{s;k} - alpha_{s;i_s}) / d.
inline BigRational scrC(Kind kind, const AMatrixSpec& spec, int i1, int i2, int k, int s, int d) {
    const auto& as = spec.alpha(s);
    const int is = s == 1 ? i1 : i2;
    const BigRational step = (detail::at(as, k) - detail::at(as, is)) / d;
    BigRational num = 1;
    for (auto& row : spec.a) {
        BigRational base = row[0] * detail::at(spec.alpha1, i1) + row[1] * detail::at(spec.alpha2, i2);
        int m = row[static_cast<std::size_t>(s - 1)] * d;
        int lo = kind == Kind::dot ? 1 : 0, hi = kind == Kind::dot ? m : m - 1;
        for (int l = lo; l <= hi; ++l) num *= base + l * step;
    }
    BigRational den = d;
    for (int l = 1; l <= d; ++l)
        for (int m = 0; m < spec.n(); ++m) {
            if (l == d && m == k) continue;
            den *= detail::nonzero(detail::at(as, is) - detail::at(as, m) + l * step);
        }
    return num / den;
}

// Specialized coefficient for the pole at (alpha_k - alpha_j)/d.
inline BigRational frakC(Kind kind, const CISpec& a, const std::vector<BigRational>& alpha, int i, int j, int k, int d) {
    const BigRational step = (detail::at(alpha, k) - detail::at(alpha, j)) / d;
    BigRational num = 1;
    for (int ar : a.a) {
        int m = ar * d;
        int lo = kind == Kind::dot ? 1 : 0, hi = kind == Kind::dot ? m : m - 1;
        for (int l = lo; l <= hi; ++l) num *= ar * (detail::at(alpha, i) + detail::at(alpha, j)) + l * step;
    }
    BigRational den = d;
    for (int l = 1; l <= d; ++l)
        for (int m = 0; m < static_cast<int>(alpha.size()); ++m) {
            if (l == d && m == k) continue;
            den *= detail::nonzero(detail::at(alpha, j) - detail::at(alpha, m) + l * step);
        }
    return num / den;
}

// C_{ij}^{ik}(d) (first slot, pole (alpha_k - alpha_j)/d, evaluation at
// p_ik) and C_{ij}^{kj}(d) (second slot, pole (alpha_k - alpha_i)/d,
// evaluation at p_kj).
inline BigRational C_coeff(Kind kind, const CISpec& a, const std::vector<BigRational>& alpha, Slot slot, int i, int j, int k,
                           int d) {
    const BigRational sign = d % 2 ? -1 : 1;
    const BigRational& ai = detail::at(alpha, i);
    const BigRational& aj = detail::at(alpha, j);
    const BigRational& ak = detail::at(alpha, k);
    if (slot == Slot::first) return sign * (ai - ak) / detail::nonzero(ai - aj) * frakC(kind, a, alpha, i, j, k, d);
    return sign * (ak - aj) / detail::nonzero(ai - aj) * frakC(kind, a, alpha, j, i, k, d);
}

// Pole location of the recursion term.
inline BigRational C_pole(const std::vector<BigRational>& alpha, Slot slot, int i, int j, int k, int d) {
    return slot == Slot::first ? (detail::at(alpha, k) - detail::at(alpha, j)) / d : (detail::at(alpha, k) - detail::at(alpha, i)) / d;
}

}  // namespace qgr
