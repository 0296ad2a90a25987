#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgr/exact/laurent.hpp"
#include "qgr/exact/linalg.hpp"
#include "qgr/exact/sparse_poly.hpp"

namespace qgr {

// Two-row partition (a >= b >= 0).
struct Partition {
    int a = 0, b = 0;
    int size() const { return a + b; }
    auto operator<=>(const Partition&) const = default;
    std::string to_string() const {
        if (a == 0) return "()";
        if (b == 0) return "(" + std::to_string(a) + ")";
        return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
};

// Schur classes s_lambda with lambda in the 2 x (n-2) box. Within a degree
// k the index j runs over decreasing lambda_1, so (k, j) and
// (2(n-2)-k, j) are complementary.
class SchurBasis {
public:
    explicit SchurBasis(int n) : n_(n) {
        if (n < 3) throw std::invalid_argument("Gr(2,n) needs n >= 3");
        const int m = n - 2;
        by_degree_.resize(static_cast<std::size_t>(2 * m + 1));
        for (int k = 0; k <= 2 * m; ++k)
            for (int a = std::min(k, m); a >= 0 && 2 * a >= k; --a) by_degree_[static_cast<std::size_t>(k)].push_back({a, k - a});
        for (auto& row : by_degree_)
            for (auto& p : row) elements_.push_back(p);
    }

    int n() const { return n_; }
    int top_degree() const { return 2 * (n_ - 2); }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Partition>& elements() const { return elements_; }
    const std::vector<Partition>& degree(int k) const { return by_degree_.at(static_cast<std::size_t>(k)); }
    Partition at(int k, int j) const { return degree(k).at(static_cast<std::size_t>(j)); }
    Partition top() const { return {n_ - 2, n_ - 2}; }

    bool contains(const Partition& p) const { return p.b >= 0 && p.a >= p.b && p.a <= n_ - 2; }
    std::size_t index(const Partition& p) const {
        auto it = std::find(elements_.begin(), elements_.end(), p);
        if (it == elements_.end()) throw std::out_of_range("partition outside the box: " + p.to_string());
        return static_cast<std::size_t>(it - elements_.begin());
    }
    int position(const Partition& p) const {  // j with at(|p|, j) == p
        auto& row = degree(p.size());
        return static_cast<int>(std::find(row.begin(), row.end(), p) - row.begin());
    }
    Partition complement(const Partition& p) const { return {n_ - 2 - p.b, n_ - 2 - p.a}; }

private:
    int n_;
    std::vector<std::vector<Partition>> by_degree_;
    std::vector<Partition> elements_;
};

// s_(a,b)(x1,x2) = (x1 x2)^b h_{a-b}(x1,x2)
inline SparsePoly schur_polynomial(const Partition& p, int v1 = var::x1, int v2 = var::x2) {
    std::vector<Term> ts;
    for (int i = p.b; i <= p.a; ++i) {
        Monomial m;
        m.set(v1, static_cast<unsigned>(i));
        m.set(v2, static_cast<unsigned>(p.a + p.b - i));
        ts.push_back({m, 1});
    }
    return SparsePoly::from_terms(ts);
}

template <class C>
using ClassOf = std::map<Partition, C>;
using CohClass = ClassOf<SparsePoly>;

namespace detail {
inline bool coeff_zero(const BigRational& c) { return c == 0; }
inline bool coeff_zero(const SparsePoly& c) { return c.is_zero(); }
template <class C>
bool coeff_zero(const Laurent<C>& c) {
    return c.is_zero();
}
}  // namespace detail

// Expansion of a symmetric polynomial, given by its (x1, x2)-exponent
// table, in two-row Schur polynomials. Subtracts the x1-leading monomial
// of each degree triangularly.
template <class C>
ClassOf<C> schur_expand(std::map<std::pair<int, int>, C> t) {
    ClassOf<C> out;
    for (auto it = t.begin(); it != t.end();)
        it = detail::coeff_zero(it->second) ? t.erase(it) : std::next(it);
    while (!t.empty()) {
        auto lead = t.begin();
        for (auto it = t.begin(); it != t.end(); ++it) {
            auto [a, b] = it->first;
            auto [la, lb] = lead->first;
            if (a + b > la + lb || (a + b == la + lb && a > la)) lead = it;
        }
        auto [a, b] = lead->first;
        if (a < b) throw std::invalid_argument("schur_reduce: input is not symmetric in x1, x2");
        C c = lead->second;
        out.emplace(Partition{a, b}, c);
        for (int i = b; i <= a; ++i) {
            auto key = std::make_pair(i, a + b - i);
            auto f = t.find(key);
            if (f == t.end()) {
                t.emplace(key, C(0) - c);
            } else {
                f->second = f->second - c;
                if (detail::coeff_zero(f->second)) t.erase(f);
            }
        }
    }
    return out;
}

// Drop s_lambda with lambda_1 >= n-1.
template <class C>
ClassOf<C> truncate_to_box(const ClassOf<C>& c, const SchurBasis& basis) {
    ClassOf<C> out;
    for (auto& [p, v] : c)
        if (basis.contains(p)) out.emplace(p, v);
    return out;
}

// Splits p by (x1, x2)-exponent; coefficients live in the other variables.
inline std::map<std::pair<int, int>, SparsePoly> split_x(const SparsePoly& p) {
    std::map<std::pair<int, int>, std::vector<Term>> parts;
    for (auto& t : p.terms()) {
        Monomial rest = t.m;
        rest.set(var::x1, 0);
        rest.set(var::x2, 0);
        parts[{static_cast<int>(t.m[var::x1]), static_cast<int>(t.m[var::x2])}].push_back({rest, t.c});
    }
    std::map<std::pair<int, int>, SparsePoly> out;
    for (auto& [e, ts] : parts) out.emplace(e, SparsePoly::from_terms(ts));
    return out;
}

inline CohClass schur_reduce(const SparsePoly& p, const SchurBasis& basis) {
    return truncate_to_box(schur_expand(split_x(p)), basis);
}

inline SparsePoly class_polynomial(const CohClass& c) {
    SparsePoly r;
    for (auto& [p, v] : c) r = r + v * schur_polynomial(p);
    return r;
}

// P[l][m] = integral of s_l s_m: the top-class coefficient of the product
inline Matrix pairing_matrix(const SchurBasis& basis) {
    const auto& el = basis.elements();
    Matrix P(el.size(), std::vector<BigRational>(el.size()));
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = 0; j < el.size(); ++j) {
            if (el[i].size() + el[j].size() != basis.top_degree()) continue;
            CohClass r = schur_reduce(schur_polynomial(el[i]) * schur_polynomial(el[j]), basis);
            auto it = r.find(basis.top());
            if (it != r.end()) P[i][j] = it->second.constant_value();
        }
    return P;
}

inline BigRational pairing(const CohClass& a, const CohClass& b, const SchurBasis& basis) {
    CohClass r = schur_reduce(class_polynomial(a) * class_polynomial(b), basis);
    auto it = r.find(basis.top());
    if (it == r.end()) return 0;
    if (!it->second.is_constant()) throw std::invalid_argument("pairing of classes with non-constant coefficients");
    return it->second.constant_value();
}

struct DiagonalClass {
    std::map<std::pair<Partition, Partition>, BigRational> tensor;
    bool equivariant = false;

    BigRational operator()(const Partition& l, const Partition& m) const {
        auto it = tensor.find({l, m});
        return it == tensor.end() ? BigRational(0) : it->second;
    }
};

// Pairing-dual bases on the two factors: coefficients from P^{-1}.
inline DiagonalClass diagonal(const SchurBasis& basis) {
    Matrix G = inverse(pairing_matrix(basis));
    DiagonalClass d;
    const auto& el = basis.elements();
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = 0; j < el.size(); ++j)
            if (G[i][j] != 0) d.tensor[{el[i], el[j]}] = G[i][j];
    return d;
}

// ---- torus-equivariant data -------------------------------------------

struct GrContext {
    int n = 3;
    std::optional<std::vector<BigRational>> alpha;  // empty: symbolic a1..an

    static GrContext symbolic(int n) { return GrContext{n, std::nullopt}; }
    static GrContext generic(int n) {
        std::vector<BigRational> a;
        BigRational p = 1;
        for (int m = 0; m < n; ++m) a.push_back(p *= 7);
        return GrContext{n, a};
    }
    static GrContext with_alpha(std::vector<BigRational> a) {
        GrContext c{static_cast<int>(a.size()), std::move(a)};
        c.validate();
        return c;
    }

    bool concrete() const { return alpha.has_value(); }
    void validate() const {
        if (n < 3) throw std::invalid_argument("Gr(2,n) needs n >= 3");
        if (!alpha) return;
        if (static_cast<int>(alpha->size()) != n) throw std::invalid_argument("need exactly n weights");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((*alpha)[static_cast<std::size_t>(i)] == (*alpha)[static_cast<std::size_t>(j)])
                    throw std::invalid_argument("repeated alpha values");
    }
    // alpha_i (0-based) as a polynomial
    SparsePoly weight(int i) const {
        if (alpha) return SparsePoly((*alpha)[static_cast<std::size_t>(i)]);
        return SparsePoly::variable(var::alpha(i + 1));
    }
    const BigRational& value(int i) const {
        if (!alpha) throw std::invalid_argument("concrete alpha required");
        return (*alpha)[static_cast<std::size_t>(i)];
    }
};

// evaluation point x1 = alpha_i, x2 = alpha_j for evaluate_all
inline std::vector<BigRational> point_of(int i, int j, const GrContext& ctx) {
    std::vector<BigRational> pt(var::count);
    pt[var::x1] = ctx.value(i);
    pt[var::x2] = ctx.value(j);
    return pt;
}

struct FixedPointData {
    int i = 0, j = 0;  // 0-based, i != j
    SparsePoly phi;
    SparsePoly euler_normal;
    SparsePoly det_euler;
};

inline SparsePoly restrict_fixed_point(const SparsePoly& eta, int i, int j, const GrContext& ctx) {
    if (i == j) throw std::invalid_argument("fixed points need i != j");
    return eta.substitute(var::x1, ctx.weight(i)).substitute(var::x2, ctx.weight(j));
}

inline std::vector<FixedPointData> localization_data(const GrContext& ctx) {
    ctx.validate();
    std::vector<FixedPointData> out;
    const int n = ctx.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            FixedPointData f;
            f.i = i;
            f.j = j;
            SparsePoly phi(1), num(1);
            for (int k = 0; k < n; ++k) {
                if (k != i && k != j) phi = phi * (X1() - ctx.weight(k)) * (X2() - ctx.weight(k));
                if (k != i) num = num * (ctx.weight(i) - ctx.weight(k));
                if (k != j) num = num * (ctx.weight(j) - ctx.weight(k));
            }
            auto e = num.divide_exact((ctx.weight(i) - ctx.weight(j)) * (ctx.weight(j) - ctx.weight(i)));
            if (!e) throw std::logic_error("Euler class division failed");
            f.phi = phi;
            f.euler_normal = *e;
            f.det_euler = ctx.weight(i) + ctx.weight(j);
            out.push_back(f);
        }
    return out;
}

// e(T Gr)|_{p_ij} at concrete alpha
inline BigRational tangent_euler(int i, int j, const GrContext& ctx) {
    BigRational e = 1;
    for (int k = 0; k < ctx.n; ++k)
        if (k != i && k != j) e *= (ctx.value(i) - ctx.value(k)) * (ctx.value(j) - ctx.value(k));
    return e;
}

// Atiyah-Bott: (1/2) sum over ordered pairs of eta|_p / e(T)|_p
inline SparsePoly ab_integrate(const SparsePoly& eta, const GrContext& ctx) {
    ctx.validate();
    SparsePoly s;
    for (int i = 0; i < ctx.n; ++i)
        for (int j = 0; j < ctx.n; ++j)
            if (i != j) s = s + restrict_fixed_point(eta, i, j, ctx) * (1 / tangent_euler(i, j, ctx));
    return s * make_rational(1, 2);
}

// M[p][l] = s_l(alpha_i, alpha_j) over unordered pairs i < j; square and
// invertible for distinct weights.
inline Matrix restriction_matrix(const SchurBasis& basis, const GrContext& ctx) {
    Matrix M;
    for (int i = 0; i < ctx.n; ++i)
        for (int j = i + 1; j < ctx.n; ++j) {
            std::vector<BigRational> row;
            for (auto& p : basis.elements())
                row.push_back(schur_polynomial(p).evaluate_all(point_of(i, j, ctx)));
            M.push_back(row);
        }
    return M;
}

inline std::vector<std::pair<int, int>> unordered_pairs(int n) {
    std::vector<std::pair<int, int>> ps;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) ps.emplace_back(i, j);
    return ps;
}

// Unique g with sum g_{lm} s_l|_p s_m|_p' = delta_{pp'} e(T)|_p, i.e.
// G = M^{-1} diag(e) M^{-T}.
inline DiagonalClass equivariant_diagonal(const SchurBasis& basis, const GrContext& ctx) {
    ctx.validate();
    Matrix M = restriction_matrix(basis, ctx);
    Matrix Mi = inverse(M);
    Matrix E(M.size(), std::vector<BigRational>(M.size()));
    auto ps = unordered_pairs(ctx.n);
    for (std::size_t p = 0; p < ps.size(); ++p) E[p][p] = tangent_euler(ps[p].first, ps[p].second, ctx);
    Matrix G = multiply(multiply(Mi, E), transpose(Mi));
    DiagonalClass d;
    d.equivariant = true;
    const auto& el = basis.elements();
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = 0; j < el.size(); ++j)
            if (G[i][j] != 0) d.tensor[{el[i], el[j]}] = G[i][j];
    return d;
}

// Restriction of a diagonal tensor to p_ij x p_kl.
inline BigRational restrict_diagonal(const DiagonalClass& d, int i, int j, int k, int l, const GrContext& ctx) {
    BigRational s = 0;
    for (auto& [key, g] : d.tensor) {
        BigRational u = schur_polynomial(key.first).evaluate_all(point_of(i, j, ctx));
        BigRational v = schur_polynomial(key.second).evaluate_all(point_of(k, l, ctx));
        s += g * u * v;
    }
    return s;
}

}  // namespace qgr
