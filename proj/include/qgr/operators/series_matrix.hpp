#pragma once

#include <stdexcept>
#include <vector>

#include "qgr/exact/qseries.hpp"
#include "qgr/exact/rational.hpp"

namespace qgr {

using QS = QSeries<BigRational>;
using Q2S = Q2Series<BigRational>;

template <class S>
using SeriesMatrix = std::vector<std::vector<S>>;

inline const BigRational& constant_term(const QS& s) { return s[0]; }
inline const BigRational& constant_term(const Q2S& s) { return s(0, 0); }

template <class S>
SeriesMatrix<S> sm_identity(std::size_t n, int D) {
    SeriesMatrix<S> m(n, std::vector<S>(n, S(D)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = S::one(D);
    return m;
}

template <class S>
SeriesMatrix<S> sm_multiply(const SeriesMatrix<S>& a, const SeriesMatrix<S>& b, int D) {
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
    SeriesMatrix<S> r(n, std::vector<S>(m, S(D)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < m; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    return r;
}

template <class S>
bool sm_equal(const SeriesMatrix<S>& a, const SeriesMatrix<S>& b) {
    return a == b;
}

template <class S>
bool constant_is_identity(const SeriesMatrix<S>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (constant_term(a[i][j]) != (i == j ? 1 : 0)) return false;
    return true;
}

// A^{-1} = sum_m (I - A)^m, exact once (I - A)^m vanishes mod q^{D+1}.
template <class S>
SeriesMatrix<S> neumann_inverse(const SeriesMatrix<S>& A, int D) {
    if (!constant_is_identity(A)) throw std::domain_error("q^0 part is not the identity");
    const std::size_t n = A.size();
    auto I = sm_identity<S>(n, D);
    SeriesMatrix<S> N = I;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) N[i][j] = I[i][j] - A[i][j];
    SeriesMatrix<S> sum = I, pw = I;
    for (int m = 1; m <= D; ++m) {
        pw = sm_multiply(pw, N, D);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) sum[i][j] = sum[i][j] + pw[i][j];
    }
    return sum;
}

}  // namespace qgr
