#pragma once

#include <string>
#include <vector>

#include "qgr/exact/uniratfunc.hpp"

namespace qgr {

struct ResidueReport {
    enum class Kind { point, infinity, root_group };
    Kind kind = Kind::point;
    BigRational location;  // for point
    UniPoly factor;        // for root_group: the residues at all roots of this factor are summed
    int order = 1;
    BigRational residue;

    std::string describe() const {
        switch (kind) {
            case Kind::point: return "t=" + location.get_str();
            case Kind::infinity: return "t=infinity";
            default: return "roots of " + factor.to_string("t");
        }
    }
};

// Coefficient of (t - z0)^{-1} in the expansion of f about z0.
inline BigRational residue_at(const UniRatFunc& f, const BigRational& z0) {
    if (f.is_zero()) return 0;
    UniPoly d = f.den();
    if (d(z0) != 0) return 0;
    auto [v, c] = f.local_expansion(z0, d.degree() + 1);
    int idx = -1 - v;
    if (idx < 0) return 0;
    if (idx >= static_cast<int>(c.size())) c = f.local_expansion(z0, idx + 1).second;
    return c[static_cast<std::size_t>(idx)];
}

// -Res_{w=0} w^{-2} f(1/w)
inline BigRational residue_at_infinity(const UniRatFunc& f) {
    if (f.is_zero()) return 0;
    UniPoly n = f.num(), d = f.den();
    const int N = n.degree(), D = d.degree();
    UniPoly rn = n.reversed(N), rd = d.reversed(D);
    // w^{-2} f(1/w) = w^{D - N - 2} rn(w) / rd(w)
    int e = D - N - 2;
    UniPoly num = rn, den = rd;
    if (e >= 0)
        num = num * UniPoly::t(static_cast<unsigned>(e));
    else
        den = den * UniPoly::t(static_cast<unsigned>(-e));
    return -residue_at(UniRatFunc::ratio(num, den), 0);
}

// Sum of the residues of f at all roots of the factor r, where r is
// coprime to the rest of the denominator. Computed from the partial
// fraction B/r: the sum is the t^{deg r - 1} coefficient of B over lc(r).
inline BigRational residue_sum_over_roots(const UniRatFunc& f, const UniPoly& r) {
    UniPoly d = f.den();
    auto [q, rem] = d.divmod(r);
    if (!rem.is_zero()) throw std::invalid_argument("factor does not divide the denominator");
    auto [g, u, v] = extended_gcd(q, r);
    if (g.degree() != 0) throw std::invalid_argument("factor is not coprime to the rest of the denominator");
    (void)v;
    UniPoly b = (f.num() * u).divmod(r).second;
    return b[r.degree() - 1] / r.lead();
}

struct ResidueSum {
    bool ok = false;
    BigRational total;
    std::vector<ResidueReport> poles;
};

// Residue Theorem check on the sphere. Rational poles are taken from the
// factored denominator plus `candidates`; whatever denominator factor is
// left is handled as one root group.
inline ResidueSum residue_sum_check(const UniRatFunc& f, const std::vector<BigRational>& candidates = {}) {
    ResidueSum out;
    std::map<BigRational, int> points = f.roots();
    UniPoly rest = f.rest();
    std::vector<BigRational> tries = candidates;
    for (auto& [z0, m] : f.roots()) tries.push_back(z0);
    for (auto& c : tries) {
        int m = 0;
        while (rest.degree() > 0 && rest(c) == 0) {
            rest = rest.deflate(c);
            ++m;
        }
        if (m) points[c] += m;
    }
    for (auto& [z0, m] : points) {
        ResidueReport r;
        r.kind = ResidueReport::Kind::point;
        r.location = z0;
        r.order = m;
        r.residue = residue_at(f, z0);
        out.total += r.residue;
        out.poles.push_back(r);
    }
    if (rest.degree() > 0) {
        ResidueReport r;
        r.kind = ResidueReport::Kind::root_group;
        r.factor = rest.monic();
        r.residue = residue_sum_over_roots(f, r.factor);
        out.total += r.residue;
        out.poles.push_back(r);
    }
    ResidueReport inf;
    inf.kind = ResidueReport::Kind::infinity;
    inf.residue = residue_at_infinity(f);
    out.total += inf.residue;
    out.poles.push_back(inf);
    out.ok = out.total == 0;
    return out;
}

}  // namespace qgr
