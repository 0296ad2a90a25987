#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgr/exact/sparse_poly.hpp"
#include "qgr/exact/uniratfunc.hpp"

namespace qgr {

// Multivariate rational function. The denominator is kept as a product of
// "atoms": integral primitive polynomials with positive leading coefficient
// and no monomial content, plus single-variable atoms. No multivariate gcd
// is taken; reduce() cancels atoms by trial division on request and
// equality is decided by cross-multiplication.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(const BigRational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    RatFunc(long c) : num_(BigRational(c)) {}    // NOLINT(google-explicit-constructor)
    RatFunc(SparsePoly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)

    static RatFunc from_factors(SparsePoly num, const std::vector<SparsePoly>& den_factors) {
        RatFunc r(std::move(num));
        for (auto& f : den_factors) r.add_den_factor(f, 1);
        return r;
    }

    const SparsePoly& num() const { return num_; }
    const std::map<SparsePoly, int>& atoms() const { return den_; }

    SparsePoly den() const {
        SparsePoly d(1);
        for (auto& [a, m] : den_) d = d * a.pow(static_cast<unsigned>(m));
        return d;
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return {};
        RatFunc r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_;
        for (auto& [f, m] : b.den_) r.den_[f] += m;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const BigRational& s) {
        RatFunc r = a;
        r.num_ = r.num_ * s;
        if (s == 0) r.den_.clear();
        return r;
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by the zero rational function");
        RatFunc r;
        r.num_ = a.num_;
        r.den_ = a.den_;
        for (auto& [f, m] : b.den_) {
            auto it = r.den_.find(f);
            int cancel = it == r.den_.end() ? 0 : std::min(it->second, m);
            if (cancel) {
                it->second -= cancel;
                if (it->second == 0) r.den_.erase(it);
            }
            if (m > cancel) r.num_ = r.num_ * f.pow(static_cast<unsigned>(m - cancel));
        }
        r.add_den_factor(b.num_, 1);
        return r;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        std::map<SparsePoly, int> l = a.den_;
        for (auto& [f, m] : b.den_) l[f] = std::max(l[f], m);
        return a.num_ * cofactor(l, a.den_) == b.num_ * cofactor(l, b.den_);
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // Cancel denominator atoms that divide the numerator.
    RatFunc& reduce() {
        for (auto it = den_.begin(); it != den_.end();) {
            while (it->second > 0) {
                auto q = num_.divide_exact(it->first);
                if (!q) break;
                num_ = std::move(*q);
                --it->second;
            }
            if (it->second == 0)
                it = den_.erase(it);
            else
                ++it;
        }
        if (num_.is_zero()) den_.clear();
        return *this;
    }

    // Exact division of the numerator by p; false if p does not divide it.
    bool divide_numerator(const SparsePoly& p) {
        auto q = num_.divide_exact(p);
        if (!q) return false;
        num_ = std::move(*q);
        return true;
    }

    RatFunc swap_vars(int a, int b) const {
        RatFunc r(num_.swap_vars(a, b));
        for (auto& [f, m] : den_) r.add_den_factor(f.swap_vars(a, b), m);
        return r;
    }

    RatFunc evaluate(int v, const BigRational& value) const {
        RatFunc r(num_.evaluate(v, value));
        for (auto& [f, m] : den_) {
            SparsePoly g = f.evaluate(v, value);
            if (g.is_zero()) throw PoleError("denominator vanishes at " + var::name(v) + "=" + value.get_str());
            r.add_den_factor(g, m);
        }
        return r;
    }

    RatFunc substitute(int v, const SparsePoly& p) const {
        RatFunc r(num_.substitute(v, p));
        for (auto& [f, m] : den_) {
            SparsePoly g = f.substitute(v, p);
            if (g.is_zero()) throw PoleError("denominator vanishes under substitution");
            r.add_den_factor(g, m);
        }
        return r;
    }

    // Requires every variable other than v to be gone.
    UniRatFunc to_univariate(int v) const {
        UniPoly num = UniPoly::from_sparse(num_, v);
        std::map<BigRational, int> roots;
        UniPoly rest(1);
        for (auto& [f, m] : den_) {
            UniPoly g = UniPoly::from_sparse(f, v);
            if (g.degree() == 1) {
                roots[-g[0] / g[1]] += m;
                num = num * (1 / qgr::pow(g[1], static_cast<unsigned>(m)));
            } else {
                rest = rest * g.pow(static_cast<unsigned>(m));
            }
        }
        return UniRatFunc(num, roots, rest);
    }

    bool uses(int v) const {
        if (num_.uses(v)) return true;
        for (auto& [f, m] : den_)
            if (f.uses(v)) return true;
        return false;
    }

    // Canonical "(num)/(den)" with integral, jointly primitive coefficients.
    std::string to_string() const {
        auto [c, p] = num_.primitive_part();
        if (num_.is_zero()) return "0";
        // den is a product of primitive integral atoms, hence primitive
        BigRational cn = c;
        SparsePoly numer = p * BigRational(cn.get_num());
        SparsePoly denom = den() * BigRational(cn.get_den());
        if (denom.is_constant() && denom.constant_value() == 1) return numer.to_string();
        return "(" + numer.to_string() + ")/(" + denom.to_string() + ")";
    }

    void add_den_factor(const SparsePoly& f, int mult) {
        if (f.is_zero()) throw std::domain_error("zero denominator factor");
        if (mult == 0) return;
        Monomial mono = f.monomial_gcd();
        for (int v = 0; v < var::count; ++v)
            if (mono[v]) den_[SparsePoly::variable(v)] += static_cast<int>(mono[v]) * mult;
        SparsePoly g = mono.is_one() ? f : f.divide_monomial(mono);
        auto [c, prim] = g.primitive_part();
        num_ = num_ * qgr::pow(1 / c, static_cast<unsigned>(mult));
        if (!prim.is_constant()) den_[prim] += mult;
    }

private:
    SparsePoly num_;
    std::map<SparsePoly, int> den_;

    static SparsePoly cofactor(const std::map<SparsePoly, int>& l, const std::map<SparsePoly, int>& have) {
        SparsePoly r(1);
        for (auto& [f, m] : l) {
            auto it = have.find(f);
            int e = m - (it == have.end() ? 0 : it->second);
            if (e) r = r * f.pow(static_cast<unsigned>(e));
        }
        return r;
    }

    static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        std::map<SparsePoly, int> l = a.den_;
        for (auto& [f, m] : b.den_) l[f] = std::max(l[f], m);
        RatFunc r;
        SparsePoly na = a.num_ * cofactor(l, a.den_);
        SparsePoly nb = b.num_ * cofactor(l, b.den_);
        r.num_ = subtract ? na - nb : na + nb;
        if (!r.num_.is_zero()) r.den_ = std::move(l);
        return r;
    }
};

}  // namespace qgr
