#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qgr {

// Power series in q truncated after q^D.
template <class C>
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(int D) : c_(static_cast<std::size_t>(D + 1), C(0)) {
        if (D < 0) throw std::invalid_argument("negative truncation");
    }
    static QSeries one(int D) {
        QSeries s(D);
        s.c_[0] = C(1);
        return s;
    }

    int trunc() const { return static_cast<int>(c_.size()) - 1; }
    C& operator[](int d) { return c_.at(static_cast<std::size_t>(d)); }
    const C& operator[](int d) const { return c_.at(static_cast<std::size_t>(d)); }

    friend QSeries operator+(QSeries a, const QSeries& b) {
        check(a, b);
        for (int d = 0; d <= a.trunc(); ++d) a[d] = a[d] + b[d];
        return a;
    }
    friend QSeries operator-(QSeries a, const QSeries& b) {
        check(a, b);
        for (int d = 0; d <= a.trunc(); ++d) a[d] = a[d] - b[d];
        return a;
    }
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        check(a, b);
        QSeries r(a.trunc());
        for (int i = 0; i <= a.trunc(); ++i) {
            if (a[i] == C(0)) continue;
            for (int j = 0; i + j <= a.trunc(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
        }
        return r;
    }
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }

    bool operator==(const QSeries& o) const { return c_ == o.c_; }

private:
    std::vector<C> c_;
    static void check(const QSeries& a, const QSeries& b) {
        if (a.trunc() != b.trunc()) throw std::invalid_argument("truncation mismatch");
    }
};

// Power series in (q1, q2) truncated after total degree D.
template <class C>
class Q2Series {
public:
    Q2Series() = default;
    explicit Q2Series(int D) : D_(D) {
        for (int d = 0; d <= D; ++d)
            for (int d1 = 0; d1 <= d; ++d1) c_.emplace(std::make_pair(d1, d - d1), C(0));
    }

    int trunc() const { return D_; }
    C& operator()(int d1, int d2) { return c_.at({d1, d2}); }
    const C& operator()(int d1, int d2) const { return c_.at({d1, d2}); }
    const std::map<std::pair<int, int>, C>& terms() const { return c_; }

    static Q2Series one(int D) {
        Q2Series s(D);
        s(0, 0) = C(1);
        return s;
    }

    friend Q2Series operator+(Q2Series a, const Q2Series& b) {
        for (auto& [k, v] : a.c_) v = v + b.c_.at(k);
        return a;
    }
    friend Q2Series operator-(Q2Series a, const Q2Series& b) {
        for (auto& [k, v] : a.c_) v = v - b.c_.at(k);
        return a;
    }
    friend Q2Series operator*(const Q2Series& a, const Q2Series& b) { return a.times(b); }
    bool operator==(const Q2Series& o) const { return c_ == o.c_; }

    // product with a scalar-coefficient series S (coefficients multiply from the left)
    template <class S>
    Q2Series times(const Q2Series<S>& s) const {
        Q2Series r(D_);
        for (auto& [e, se] : s.terms()) {
            if (se == S(0)) continue;
            for (auto& [k, v] : c_) {
                int d1 = k.first + e.first, d2 = k.second + e.second;
                if (d1 + d2 > D_) continue;
                r(d1, d2) = r(d1, d2) + v * se;
            }
        }
        return r;
    }

private:
    int D_ = 0;
    std::map<std::pair<int, int>, C> c_;
};

}  // namespace qgr
