#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qgr/exact/monomial.hpp"
#include "qgr/exact/rational.hpp"

namespace qgr {

struct Term {
    Monomial m;
    BigRational c;
};

// Sparse multivariate polynomial over Q. Terms are kept sorted under
// MonomialGreater with no stored zeros.
class SparsePoly {
public:
    SparsePoly() = default;
    SparsePoly(const BigRational& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.push_back({Monomial{}, c});
    }
    SparsePoly(long c) : SparsePoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)

    static SparsePoly variable(int v, unsigned power = 1) { return monomial(Monomial::of(v, power), 1); }

    static SparsePoly monomial(const Monomial& m, const BigRational& c) {
        SparsePoly p;
        if (c != 0) p.terms_.push_back({m, c});
        return p;
    }

    static SparsePoly from_terms(std::vector<Term> ts) {
        std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return MonomialGreater{}(a.m, b.m); });
        SparsePoly p;
        for (auto& t : ts) {
            if (!p.terms_.empty() && p.terms_.back().m == t.m)
                p.terms_.back().c += t.c;
            else
                p.terms_.push_back(std::move(t));
        }
        p.drop_zeros();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    BigRational constant_value() const { return coefficient(Monomial{}); }
    const Term& leading() const { return terms_.front(); }

    BigRational coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& k) { return MonomialGreater{}(t.m, k); });
        if (it != terms_.end() && it->m == m) return it->c;
        return 0;
    }

    unsigned degree_in(int v) const {
        unsigned d = 0;
        for (auto& t : terms_) d = std::max(d, t.m[v]);
        return d;
    }

    unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().m.deg; }

    bool uses(int v) const {
        for (auto& t : terms_)
            if (t.m[v]) return true;
        return false;
    }

    bool only_uses(std::initializer_list<int> vars) const {
        for (auto& t : terms_) {
            unsigned inside = t.m.degree_in(vars);
            if (inside != t.m.deg) return false;
        }
        return true;
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }
    SparsePoly operator-() const {
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }
    SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
    SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    friend SparsePoly operator*(const SparsePoly& a, const BigRational& s) {
        if (s == 0) return {};
        SparsePoly r = a;
        for (auto& t : r.terms_) t.c *= s;
        return r;
    }
    friend SparsePoly operator*(const BigRational& s, const SparsePoly& a) { return a * s; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_constant()) return b * a.terms_[0].c;
        if (b.is_constant()) return a * b.terms_[0].c;
        if (a.size() == 1 || b.size() == 1) {
            const SparsePoly& mono = a.size() == 1 ? a : b;
            const SparsePoly& other = a.size() == 1 ? b : a;
            SparsePoly r;
            r.terms_.reserve(other.size());
            for (auto& t : other.terms_) r.terms_.push_back({t.m * mono.terms_[0].m, t.c * mono.terms_[0].c});
            return r;  // multiplying by a monomial preserves the order
        }
        std::unordered_map<Monomial, BigRational, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        BigRational tmp;
        for (auto& s : a.terms_)
            for (auto& t : b.terms_) {
                tmp = s.c * t.c;
                acc[s.m * t.m] += tmp;
            }
        std::vector<Term> ts;
        ts.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) ts.push_back({m, c});
        std::sort(ts.begin(), ts.end(), [](const Term& x, const Term& y) { return MonomialGreater{}(x.m, y.m); });
        SparsePoly r;
        r.terms_ = std::move(ts);
        return r;
    }

    SparsePoly pow(unsigned e) const {
        SparsePoly r(1);
        SparsePoly base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return r;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
        return true;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    // total order used to key denominator atoms
    friend bool operator<(const SparsePoly& a, const SparsePoly& b) {
        std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            const auto& s = a.terms_[i];
            const auto& t = b.terms_[i];
            if (!(s.m == t.m)) return MonomialGreater{}(s.m, t.m);
            if (s.c != t.c) return s.c < t.c;
        }
        return a.size() < b.size();
    }

    // Substitute a rational value for one variable.
    SparsePoly evaluate(int v, const BigRational& value) const {
        std::vector<Term> ts;
        ts.reserve(terms_.size());
        for (auto& t : terms_) {
            unsigned e = t.m[v];
            if (e == 0) {
                ts.push_back(t);
                continue;
            }
            if (value == 0) continue;
            Monomial m = t.m;
            m.set(v, 0);
            ts.push_back({m, t.c * qgr::pow(value, e)});
        }
        return from_terms(std::move(ts));
    }

    SparsePoly evaluate(const std::vector<std::pair<int, BigRational>>& values) const {
        SparsePoly r = *this;
        for (auto& [v, x] : values) r = r.evaluate(v, x);
        return r;
    }

    // Substitute a polynomial for one variable.
    SparsePoly substitute(int v, const SparsePoly& p) const {
        std::map<unsigned, SparsePoly> by_power;
        for (auto& t : terms_) {
            Monomial m = t.m;
            unsigned e = m[v];
            m.set(v, 0);
            by_power[e] += monomial(m, t.c);
        }
        SparsePoly r;
        SparsePoly pw(1);
        unsigned cur = 0;
        for (auto& [e, c] : by_power) {
            while (cur < e) {
                pw = pw * p;
                ++cur;
            }
            r += c * pw;
        }
        return r;
    }

    SparsePoly swap_vars(int a, int b) const {
        std::vector<Term> ts;
        ts.reserve(terms_.size());
        for (auto& t : terms_) {
            Monomial m = t.m;
            unsigned ea = m[a], eb = m[b];
            m.set(a, eb);
            m.set(b, ea);
            ts.push_back({m, t.c});
        }
        return from_terms(std::move(ts));
    }

    // Coefficients with respect to one variable.
    std::map<unsigned, SparsePoly> collect(int v) const {
        std::map<unsigned, std::vector<Term>> parts;
        for (auto& t : terms_) {
            Monomial m = t.m;
            unsigned e = m[v];
            m.set(v, 0);
            parts[e].push_back({m, t.c});
        }
        std::map<unsigned, SparsePoly> r;
        for (auto& [e, ts] : parts) r[e] = from_terms(std::move(ts));
        return r;
    }

    Monomial monomial_gcd() const {
        Monomial g;
        if (terms_.empty()) return g;
        g = terms_.front().m;
        for (auto& t : terms_)
            for (int i = 0; i < var::count; ++i) g.e[i] = std::min(g.e[i], t.m.e[i]);
        g.deg = 0;
        for (auto x : g.e) g.deg = static_cast<std::uint16_t>(g.deg + x);
        return g;
    }

    SparsePoly divide_monomial(const Monomial& m) const {
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.m = t.m / m;
        return r;
    }

    // p = c * P with P integral, primitive, positive leading coefficient.
    std::pair<BigRational, SparsePoly> primitive_part() const {
        if (terms_.empty()) return {BigRational(0), SparsePoly{}};
        BigInt g = 0, l = 1;
        for (auto& t : terms_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
        }
        BigRational c(g, l);
        if (terms_.front().c < 0) c = -c;
        c.canonicalize();
        SparsePoly r = *this;
        BigRational inv = 1 / c;
        for (auto& t : r.terms_) t.c *= inv;
        return {c, r};
    }

    bool is_integral() const {
        for (auto& t : terms_)
            if (t.c.get_den() != 1) return false;
        return true;
    }

    std::optional<SparsePoly> divide_exact(const SparsePoly& b) const {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        if (is_zero()) return SparsePoly{};
        if (b.is_constant()) return *this * (1 / b.terms_[0].c);
        if (total_degree() < b.total_degree()) return std::nullopt;
        const Term& lb = b.leading();
        BigRational inv = 1 / lb.c;
        std::map<Monomial, BigRational, MonomialGreater> rem;
        for (auto& t : terms_) rem.emplace(t.m, t.c);
        std::vector<Term> quot;
        BigRational tmp;
        while (!rem.empty()) {
            auto it = rem.begin();
            if (!lb.m.divides(it->first)) return std::nullopt;
            Monomial qm = it->first / lb.m;
            BigRational qc = it->second * inv;
            rem.erase(it);
            for (std::size_t k = 1; k < b.terms_.size(); ++k) {
                Monomial m = b.terms_[k].m * qm;
                tmp = b.terms_[k].c * qc;
                auto [pos, inserted] = rem.emplace(m, 0);
                pos->second -= tmp;
                if (pos->second == 0) rem.erase(pos);
            }
            quot.push_back({qm, qc});
        }
        SparsePoly q;
        q.terms_ = std::move(quot);  // produced in decreasing order
        return q;
    }

    BigRational evaluate_all(const std::vector<BigRational>& point) const {
        BigRational r = 0;
        for (auto& t : terms_) {
            BigRational v = t.c;
            for (int i = 0; i < var::count; ++i)
                if (t.m.e[i]) v *= qgr::pow(point.at(static_cast<std::size_t>(i)), t.m.e[i]);
            r += v;
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& t : terms_) {
            BigRational a = abs(t.c);
            bool neg = t.c < 0;
            if (neg)
                s += '-';
            else if (!first)
                s += '+';
            first = false;
            if (t.m.is_one()) {
                s += a.get_str();
            } else {
                if (a != 1) s += a.get_str() + '*';
                s += t.m.to_string();
            }
        }
        return s;
    }

private:
    std::vector<Term> terms_;

    void drop_zeros() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return t.c == 0; }),
                     terms_.end());
    }

    static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
        SparsePoly r;
        r.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        MonomialGreater gt;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && gt(a.terms_[i].m, b.terms_[j].m))) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.size() || gt(b.terms_[j].m, a.terms_[i].m)) {
                r.terms_.push_back({b.terms_[j].m, subtract ? BigRational(-b.terms_[j].c) : b.terms_[j].c});
                ++j;
            } else {
                BigRational c = subtract ? BigRational(a.terms_[i].c - b.terms_[j].c)
                                         : BigRational(a.terms_[i].c + b.terms_[j].c);
                if (c != 0) r.terms_.push_back({a.terms_[i].m, c});
                ++i;
                ++j;
            }
        }
        return r;
    }
};

inline SparsePoly X1() { return SparsePoly::variable(var::x1); }
inline SparsePoly X2() { return SparsePoly::variable(var::x2); }
inline SparsePoly H() { return SparsePoly::variable(var::hbar); }

}  // namespace qgr
