#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgr/exact/rational.hpp"

namespace qgr {

enum class Kind { dot, ddot };

inline std::string kind_name(Kind k) { return k == Kind::dot ? "dot" : "ddot"; }

// Complete-intersection degrees a_1..a_l.
struct CISpec {
    std::vector<int> a;

    int ell() const { return static_cast<int>(a.size()); }
    int total() const {
        int s = 0;
        for (int x : a) s += x;
        return s;
    }
    long product() const {
        long p = 1;
        for (int x : a) p *= x;
        return p;
    }
    void validate(int n) const {
        for (int x : a)
            if (x < 1) throw std::invalid_argument("degrees a_k must be positive");
        if (total() > n) throw std::invalid_argument("|a| must not exceed n");
    }
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
        return "(" + s + ")";
    }
};

// Data of the P^{n-1} x P^{n-1} series: rows a_{r;1}, a_{r;2} and two weight lists.
struct AMatrixSpec {
    std::vector<std::array<int, 2>> a;
    std::vector<BigRational> alpha1, alpha2;

    int n() const { return static_cast<int>(alpha1.size()); }
    int total() const {
        int s = 0;
        for (auto& r : a) s += r[0] + r[1];
        return s;
    }
    const std::vector<BigRational>& alpha(int slot) const { return slot == 1 ? alpha1 : alpha2; }

    // a_{r;i} = a_r, alpha_{1;i} = alpha_{2;i} = alpha_i
    static AMatrixSpec specialized(const CISpec& ci, const std::vector<BigRational>& alpha) {
        AMatrixSpec s;
        for (int x : ci.a) s.a.push_back({x, x});
        s.alpha1 = s.alpha2 = alpha;
        return s;
    }
};

inline std::vector<BigRational> zero_alpha(int n) { return std::vector<BigRational>(static_cast<std::size_t>(n), BigRational(0)); }

inline std::vector<BigRational> default_alpha(int n) {
    std::vector<BigRational> a;
    BigRational p = 1;
    for (int m = 0; m < n; ++m) a.push_back(p *= 7);
    return a;
}

struct GenericityError : std::domain_error {
    using std::domain_error::domain_error;
};

// Every denominator scheduled by the recursion coefficients through
// degree D: alpha_j - alpha_m + (l/d)(alpha_k - alpha_j), (l,m) != (d,k),
// together with alpha_i - alpha_j.
inline void check_genericity(const std::vector<BigRational>& alpha, int D) {
    const int n = static_cast<int>(alpha.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (alpha[static_cast<std::size_t>(i)] == alpha[static_cast<std::size_t>(j)])
                throw GenericityError("repeated alpha values");
    for (int d = 1; d <= D; ++d)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                for (int l = 1; l <= d; ++l)
                    for (int m = 0; m < n; ++m) {
                        if (l == d && m == k) continue;
                        auto& aj = alpha[static_cast<std::size_t>(j)];
                        BigRational v = aj - alpha[static_cast<std::size_t>(m)] +
                                        make_rational(l, d) * (alpha[static_cast<std::size_t>(k)] - aj);
                        if (v == 0)
                            throw GenericityError("non-generic alpha: a recursion denominator vanishes at d=" +
                                                  std::to_string(d));
                    }
            }
}

}  // namespace qgr
