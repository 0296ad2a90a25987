#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgr/exact/laurent.hpp"
#include "qgr/exact/unipoly.hpp"

namespace qgr {

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Univariate rational function num / (prod (t - r)^m * rest). The linear
// part of the denominator is kept factored since nearly every pole in
// scope is an explicit rational point; rest is monic and carries any
// factor we were not told how to split.
class UniRatFunc {
public:
    UniRatFunc() = default;
    UniRatFunc(const BigRational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    UniRatFunc(long c) : num_(BigRational(c)) {}    // NOLINT(google-explicit-constructor)
    UniRatFunc(UniPoly p) : num_(std::move(p)) {}   // NOLINT(google-explicit-constructor)

    UniRatFunc(UniPoly num, std::map<BigRational, int> roots, UniPoly rest = UniPoly(1))
        : num_(std::move(num)), roots_(std::move(roots)), rest_(std::move(rest)) {
        if (rest_.is_zero()) throw std::domain_error("zero denominator");
        num_ = num_ * (1 / rest_.lead());
        rest_ = rest_.monic();
        normalize();
    }

    static UniRatFunc ratio(const UniPoly& num, const UniPoly& den) { return UniRatFunc(num, {}, den); }

    // 1 / (t - r)
    static UniRatFunc inverse_linear(const BigRational& r) { return UniRatFunc(UniPoly(1), {{r, 1}}); }

    const UniPoly& num() const { return num_; }
    const std::map<BigRational, int>& roots() const { return roots_; }
    const UniPoly& rest() const { return rest_; }

    UniPoly den() const {
        UniPoly d = rest_;
        for (auto& [r, m] : roots_) d = d * UniPoly::linear(r).pow(static_cast<unsigned>(m));
        return d;
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return roots_.empty() && rest_.is_constant(); }
    bool is_laurent_polynomial() const {
        if (!rest_.is_constant()) return false;
        for (auto& [r, m] : roots_)
            if (r != 0) return false;
        return true;
    }
    int pole_order_at_zero() const {
        auto it = roots_.find(BigRational(0));
        return it == roots_.end() ? 0 : it->second;
    }

    friend UniRatFunc operator+(const UniRatFunc& a, const UniRatFunc& b) { return add(a, b, false); }
    friend UniRatFunc operator-(const UniRatFunc& a, const UniRatFunc& b) { return add(a, b, true); }
    UniRatFunc operator-() const {
        UniRatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    UniRatFunc& operator+=(const UniRatFunc& o) { return *this = *this + o; }
    UniRatFunc& operator-=(const UniRatFunc& o) { return *this = *this - o; }
    UniRatFunc& operator*=(const UniRatFunc& o) { return *this = *this * o; }

    friend UniRatFunc operator*(const UniRatFunc& a, const UniRatFunc& b) {
        if (a.is_zero() || b.is_zero()) return {};
        UniRatFunc r;
        r.num_ = a.num_ * b.num_;
        r.roots_ = a.roots_;
        for (auto& [x, m] : b.roots_) r.roots_[x] += m;
        r.rest_ = a.rest_ * b.rest_;
        r.normalize();
        return r;
    }

    friend UniRatFunc operator*(const UniRatFunc& a, const BigRational& s) {
        if (s == 0) return {};
        UniRatFunc r = a;
        r.num_ = r.num_ * s;
        return r;
    }

    friend UniRatFunc operator/(const UniRatFunc& a, const UniRatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by the zero rational function");
        UniRatFunc r;
        r.num_ = a.num_ * b.rest_;
        for (auto& [x, m] : b.roots_) r.num_ = r.num_ * UniPoly::linear(x).pow(static_cast<unsigned>(m));
        r.roots_ = a.roots_;
        UniPoly bn = b.num_;
        std::vector<BigRational> seen;
        for (auto& [x, m] : a.roots_) seen.push_back(x);
        for (auto& [x, m] : b.roots_) seen.push_back(x);
        for (auto& x : seen)
            while (bn.degree() > 0 && bn(x) == 0) {
                bn = bn.deflate(x);
                ++r.roots_[x];
            }
        if (bn.degree() == 1) {
            ++r.roots_[-bn[0] / bn[1]];
            r.num_ = r.num_ * (1 / bn[1]);
            bn = UniPoly(1);
        }
        r.num_ = r.num_ * (1 / bn.lead());
        r.rest_ = a.rest_ * bn.monic();
        r.normalize();
        return r;
    }

    friend bool operator==(const UniRatFunc& a, const UniRatFunc& b) {
        return a.num_ * b.den() == b.num_ * a.den();
    }
    friend bool operator!=(const UniRatFunc& a, const UniRatFunc& b) { return !(a == b); }

    BigRational operator()(const BigRational& x) const {
        auto it = roots_.find(x);
        if (it != roots_.end()) throw PoleError("evaluation at a pole t=" + x.get_str());
        BigRational d = rest_(x);
        if (d == 0) throw PoleError("evaluation at a pole t=" + x.get_str());
        for (auto& [r, m] : roots_) d *= qgr::pow(x - r, static_cast<unsigned>(m));
        return num_(x) / d;
    }

    // t -> -t
    UniRatFunc reflected() const {
        UniRatFunc r;
        r.num_ = num_.scale_arg(-1);
        int total = 0;
        for (auto& [x, m] : roots_) {
            r.roots_[-x] = m;
            total += m;
        }
        UniPoly rr = rest_.scale_arg(-1);
        BigRational lc = rr.lead();
        r.rest_ = rr * (1 / lc);
        BigRational sign = (total % 2) ? -1 : 1;
        r.num_ = r.num_ * (sign / lc);
        return r;
    }

    // Expansion at t = infinity, exact for exponents >= 1 - depth.
    LaurentQ laurent_at_infinity(int depth) const {
        const int lo = 1 - depth;
        if (num_.is_zero()) return LaurentQ(is_laurent_polynomial() ? LaurentQ::exact : lo);
        if (is_laurent_polynomial()) {
            LaurentQ r;
            int shift = -pole_order_at_zero();
            for (int i = 0; i <= num_.degree(); ++i)
                if (num_[i] != 0) r.set(i + shift, num_[i]);
            return r;
        }
        UniPoly d = den();
        const int N = num_.degree(), Dg = d.degree();
        const int top = N - Dg;
        LaurentQ r(lo);
        if (top < lo) return r;
        const int order = top - lo;  // series in u = 1/t up to u^order
        std::vector<BigRational> nh(static_cast<std::size_t>(order + 1)), inv(static_cast<std::size_t>(order + 1));
        for (int i = 0; i <= order && i <= N; ++i) nh[static_cast<std::size_t>(i)] = num_[N - i];
        // inverse of dh(u) = sum d[Dg - i] u^i
        BigRational d0inv = 1 / d[Dg];
        inv[0] = d0inv;
        for (int i = 1; i <= order; ++i) {
            BigRational s = 0;
            for (int j = 1; j <= i && j <= Dg; ++j) s += d[Dg - j] * inv[static_cast<std::size_t>(i - j)];
            inv[static_cast<std::size_t>(i)] = -s * d0inv;
        }
        for (int i = 0; i <= order; ++i) {
            BigRational s = 0;
            for (int j = 0; j <= i; ++j) s += nh[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(i - j)];
            r.set(top - i, s);
        }
        return r;
    }

    // Taylor-Laurent coefficients at t = t0: returns (v, c) with
    // f = sum_{i>=0} c[i] (t - t0)^{v + i}, computed to `terms` entries.
    std::pair<int, std::vector<BigRational>> local_expansion(const BigRational& t0, int terms) const {
        UniPoly n = num_.shift(t0);
        UniPoly d = den().shift(t0);
        int v = 0;
        while (d[0] == 0) {
            d = d.deflate(0);
            --v;
        }
        while (!n.is_zero() && n[0] == 0) {
            n = n.deflate(0);
            ++v;
        }
        std::vector<BigRational> inv(static_cast<std::size_t>(terms)), out(static_cast<std::size_t>(terms));
        BigRational d0inv = 1 / d[0];
        for (int i = 0; i < terms; ++i) {
            BigRational s = (i == 0) ? BigRational(1) : BigRational(0);
            for (int j = 1; j <= i && j <= d.degree(); ++j) s -= d[j] * inv[static_cast<std::size_t>(i - j)];
            inv[static_cast<std::size_t>(i)] = s * d0inv;
        }
        for (int i = 0; i < terms; ++i) {
            BigRational s = 0;
            for (int j = 0; j <= i && j <= n.degree(); ++j) s += n[j] * inv[static_cast<std::size_t>(i - j)];
            out[static_cast<std::size_t>(i)] = s;
        }
        return {v, out};
    }

    std::string to_string(const std::string& name = "hbar") const {
        UniPoly d = den();
        // scale to integer coefficients with positive leading denominator coefficient
        BigInt l = 1;
        for (auto& c : num_.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        for (auto& c : d.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        UniPoly n2 = num_ * BigRational(l), d2 = d * BigRational(l);
        BigInt g = 0;
        for (auto& c : n2.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        for (auto& c : d2.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        if (g != 0 && g != 1) {
            n2 = n2 * BigRational(1, g);
            d2 = d2 * BigRational(1, g);
        }
        if (d2.is_constant() && d2.lead() == 1) return n2.to_string(name);
        return "(" + n2.to_string(name) + ")/(" + d2.to_string(name) + ")";
    }

private:
    UniPoly num_;
    std::map<BigRational, int> roots_;
    UniPoly rest_ = UniPoly(1);

    void normalize() {
        if (num_.is_zero()) {
            roots_.clear();
            rest_ = UniPoly(1);
            return;
        }
        for (auto it = roots_.begin(); it != roots_.end();) {
            while (it->second > 0 && num_(it->first) == 0) {
                num_ = num_.deflate(it->first);
                --it->second;
            }
            if (it->second == 0)
                it = roots_.erase(it);
            else
                ++it;
        }
        if (!rest_.is_constant()) {
            UniPoly g = gcd(num_, rest_);
            if (g.degree() > 0) {
                num_ = num_.divmod(g).first;
                rest_ = rest_.divmod(g).first.monic();
            }
        }
    }

    static UniRatFunc add(const UniRatFunc& a, const UniRatFunc& b, bool subtract) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        std::map<BigRational, int> roots = a.roots_;
        for (auto& [x, m] : b.roots_) roots[x] = std::max(roots[x], m);
        UniPoly ma(1), mb(1);
        for (auto& [x, m] : roots) {
            auto ia = a.roots_.find(x);
            auto ib = b.roots_.find(x);
            int ea = m - (ia == a.roots_.end() ? 0 : ia->second);
            int eb = m - (ib == b.roots_.end() ? 0 : ib->second);
            if (ea) ma = ma * UniPoly::linear(x).pow(static_cast<unsigned>(ea));
            if (eb) mb = mb * UniPoly::linear(x).pow(static_cast<unsigned>(eb));
        }
        UniPoly rest;
        if (a.rest_.is_constant() && b.rest_.is_constant()) {
            rest = UniPoly(1);
        } else if (a.rest_ == b.rest_) {
            rest = a.rest_;
        } else {
            UniPoly g = gcd(a.rest_, b.rest_);
            ma = ma * b.rest_.divmod(g).first;
            mb = mb * a.rest_.divmod(g).first;
            rest = a.rest_ * b.rest_.divmod(g).first;
        }
        UniRatFunc r;
        r.num_ = subtract ? a.num_ * ma - b.num_ * mb : a.num_ * ma + b.num_ * mb;
        r.roots_ = std::move(roots);
        r.rest_ = rest.monic();
        r.normalize();
        return r;
    }
};

}  // namespace qgr
