#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qgr/exact/rational.hpp"
#include "qgr/exact/sparse_poly.hpp"

namespace qgr {

// Dense univariate polynomial over Q, c[i] is the coefficient of t^i.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const BigRational& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) c_.push_back(c);
    }
    UniPoly(long c) : UniPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit UniPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly t(unsigned power = 1) {
        std::vector<BigRational> c(power + 1);
        c[power] = 1;
        return UniPoly(std::move(c));
    }

    // t - r
    static UniPoly linear(const BigRational& root) { return UniPoly(std::vector<BigRational>{-root, 1}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const { return c_; }
    BigRational operator[](int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : BigRational(0);
    }
    BigRational lead() const { return c_.empty() ? BigRational(0) : c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<BigRational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<BigRational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return UniPoly(std::move(r));
    }
    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
        BigRational tmp;
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                tmp = a.c_[i] * b.c_[j];
                r[i + j] += tmp;
            }
        }
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const BigRational& s) {
        if (s == 0) return {};
        UniPoly r = a;
        for (auto& x : r.c_) x *= s;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly pow(unsigned e) const {
        UniPoly r(1), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            e >>= 1u;
            if (e) b = b * b;
        }
        return r;
    }

    BigRational operator()(const BigRational& x) const {
        BigRational r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) {
            r *= x;
            r += c_[i];
        }
        return r;
    }

    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        if (degree() < d.degree()) return {UniPoly{}, *this};
        std::vector<BigRational> rem = c_;
        std::vector<BigRational> q(static_cast<std::size_t>(degree() - d.degree() + 1));
        BigRational inv = 1 / d.lead();
        BigRational tmp;
        for (int i = degree(); i >= d.degree(); --i) {
            BigRational coef = rem[static_cast<std::size_t>(i)] * inv;
            q[static_cast<std::size_t>(i - d.degree())] = coef;
            if (coef == 0) continue;
            for (int j = 0; j <= d.degree(); ++j) {
                tmp = coef * d.c_[static_cast<std::size_t>(j)];
                rem[static_cast<std::size_t>(i - d.degree() + j)] -= tmp;
            }
        }
        return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
    }

    // divide by (t - r) assuming r is a root
    UniPoly deflate(const BigRational& r) const {
        if (c_.size() < 2) return {};
        std::vector<BigRational> q(c_.size() - 1);
        BigRational carry = 0;
        for (std::size_t i = c_.size(); i-- > 1;) {
            carry = carry * r + c_[i];
            q[i - 1] = carry;
        }
        return UniPoly(std::move(q));
    }

    UniPoly monic() const {
        if (is_zero()) return {};
        return *this * (1 / lead());
    }

    UniPoly derivative() const {
        if (c_.size() < 2) return {};
        std::vector<BigRational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
        return UniPoly(std::move(r));
    }

    // p(t + s)
    UniPoly shift(const BigRational& s) const {
        std::vector<BigRational> r = c_;
        const std::size_t n = r.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j > i; --j) r[j - 1] += s * r[j];
        return UniPoly(std::move(r));
    }

    // p(s * t)
    UniPoly scale_arg(const BigRational& s) const {
        std::vector<BigRational> r = c_;
        BigRational f = 1;
        for (auto& x : r) {
            x *= f;
            f *= s;
        }
        return UniPoly(std::move(r));
    }

    // t^deg * p(1/t)
    UniPoly reversed(int deg) const {
        std::vector<BigRational> r(static_cast<std::size_t>(deg + 1));
        for (int i = 0; i <= degree(); ++i) r[static_cast<std::size_t>(deg - i)] = c_[static_cast<std::size_t>(i)];
        return UniPoly(std::move(r));
    }

    int root_multiplicity(const BigRational& r) const {
        if (is_zero()) throw std::domain_error("root multiplicity of zero polynomial");
        int m = 0;
        UniPoly p = *this;
        while (p(r) == 0) {
            p = p.deflate(r);
            ++m;
        }
        return m;
    }

    SparsePoly to_sparse(int v) const {
        std::vector<Term> ts;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) ts.push_back({Monomial::of(v, static_cast<unsigned>(i)), c_[i]});
        return SparsePoly::from_terms(std::move(ts));
    }

    static UniPoly from_sparse(const SparsePoly& p, int v) {
        std::vector<BigRational> c(p.degree_in(v) + 1);
        for (auto& t : p.terms()) {
            if (t.m.deg != t.m[v]) throw std::invalid_argument("polynomial is not univariate in " + var::name(v));
            c[t.m[v]] += t.c;
        }
        return UniPoly(std::move(c));
    }

    std::string to_string(const std::string& name = "hbar") const {
        if (is_zero()) return "0";
        std::string s;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const BigRational& c = c_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            BigRational a = abs(c);
            if (c < 0)
                s += '-';
            else if (!first)
                s += '+';
            first = false;
            if (i == 0) {
                s += a.get_str();
                continue;
            }
            if (a != 1) s += a.get_str() + '*';
            s += name;
            if (i > 1) s += '^' + std::to_string(i);
        }
        return s;
    }

private:
    std::vector<BigRational> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

// returns (g, u, v) with u*a + v*b = g, g monic
inline std::tuple<UniPoly, UniPoly, UniPoly> extended_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    BigRational inv = 1 / r0.lead();
    return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace qgr
