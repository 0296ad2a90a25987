#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>
#include <string>

#include "qgr/exact/rational.hpp"

namespace qgr {

// Expansion in hbar^{-1} with finite principal part. Exponents >= lo()
// are known exactly; anything below lo() was truncated away.
template <class C>
class Laurent {
public:
    static constexpr int exact = INT_MIN / 4;

    Laurent() = default;
    explicit Laurent(int lo) : lo_(lo) {}
    static Laurent monomial(int e, const C& c, int lo = exact) {
        Laurent r(lo);
        r.set(e, c);
        return r;
    }

    int lo() const { return lo_; }
    bool is_exact() const { return lo_ == exact; }
    int depth() const { return is_exact() ? INT_MAX : 1 - lo_; }
    const std::map<int, C>& terms() const { return c_; }

    void set(int e, const C& c) {
        if (e < lo_) return;
        if (c == C(0))
            c_.erase(e);
        else
            c_[e] = c;
    }

    C operator[](int e) const {
        if (e < lo_) throw std::out_of_range("Laurent coefficient below truncation depth");
        auto it = c_.find(e);
        return it == c_.end() ? C(0) : it->second;
    }

    bool is_zero() const { return c_.empty(); }
    int top() const { return c_.empty() ? lo_ : c_.rbegin()->first; }
    int bottom() const { return c_.empty() ? 0 : c_.begin()->first; }

    Laurent truncated(int lo) const {
        Laurent r(std::max(lo, lo_));
        for (auto it = c_.lower_bound(r.lo_); it != c_.end(); ++it) r.c_.insert(*it);
        return r;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) { return combine(a, b, false); }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return combine(a, b, true); }
    Laurent operator-() const {
        Laurent r = *this;
        for (auto& [e, c] : r.c_) c = -c;
        return r;
    }
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        int lo = exact;
        if (!a.is_exact() || !b.is_exact()) {
            // a zero-but-truncated factor still leaves the low part unknown
            const int ta = a.is_zero() ? a.lo_ : a.top();
            const int tb = b.is_zero() ? b.lo_ : b.top();
            int la = a.is_exact() ? INT_MAX / 2 : a.lo_ + tb;
            int lb = b.is_exact() ? INT_MAX / 2 : b.lo_ + ta;
            lo = std::min(la, lb);
        }
        Laurent r(lo);
        for (auto& [ea, ca] : a.c_)
            for (auto& [eb, cb] : b.c_) {
                int e = ea + eb;
                if (e < lo) continue;
                auto& slot = r.c_[e];
                slot += ca * cb;
            }
        r.drop_zeros();
        return r;
    }

    friend Laurent operator*(const Laurent& a, const C& s) {
        Laurent r(a.lo_);
        if (s == C(0)) return r;
        for (auto& [e, c] : a.c_) r.c_[e] = c * s;
        r.drop_zeros();
        return r;
    }

    // multiply by hbar^k
    Laurent shifted(int k) const {
        Laurent r(is_exact() ? exact : lo_ + k);
        for (auto& [e, c] : c_) r.c_[e + k] = c;
        return r;
    }

    // hbar -> -hbar
    Laurent reflected() const {
        Laurent r(lo_);
        for (auto& [e, c] : c_) r.c_[e] = (e % 2 == 0) ? c : C(-c);
        return r;
    }

    // equality on the common range of validity
    friend bool operator==(const Laurent& a, const Laurent& b) {
        int lo = std::max(a.lo_, b.lo_);
        auto ia = a.c_.lower_bound(lo), ib = b.c_.lower_bound(lo);
        for (; ia != a.c_.end() && ib != b.c_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        return ia == a.c_.end() && ib == b.c_.end();
    }

private:
    std::map<int, C> c_;
    int lo_ = exact;

    void drop_zeros() {
        for (auto it = c_.begin(); it != c_.end();) {
            if (it->second == C(0))
                it = c_.erase(it);
            else
                ++it;
        }
    }

    static Laurent combine(const Laurent& a, const Laurent& b, bool subtract) {
        Laurent r(std::max(a.lo_, b.lo_));
        for (auto it = a.c_.lower_bound(r.lo_); it != a.c_.end(); ++it) r.c_.insert(*it);
        for (auto it = b.c_.lower_bound(r.lo_); it != b.c_.end(); ++it) {
            auto& slot = r.c_[it->first];
            if (subtract)
                slot -= it->second;
            else
                slot += it->second;
        }
        r.drop_zeros();
        return r;
    }
};

using LaurentQ = Laurent<BigRational>;

inline std::string to_string(const LaurentQ& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        BigRational a = abs(c);
        if (c < 0)
            s += '-';
        else if (!first)
            s += '+';
        first = false;
        if (e == 0) {
            s += a.get_str();
            continue;
        }
        if (a != 1) s += a.get_str() + '*';
        s += "hbar";
        if (e != 1) s += '^' + std::to_string(e);
    }
    return s;
}

}  // namespace qgr
