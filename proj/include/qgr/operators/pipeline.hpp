#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "qgr/operators/class_series.hpp"
#include "qgr/operators/frakD.hpp"

namespace qgr {

// C^{(r,j)}_{k,i,s}: D^{k,i} Y = hbar^k sum_s sum_{r,j} C^{(r,j)}_{k,i,s} gamma^r_j hbar^{-s}
struct OpExp {
    int k = 0;
    Partition cls;
    int D = 0;
    int S = 0;  // entries known for s <= S
    std::map<std::pair<int, Partition>, QS> table;

    QS get(int s, const Partition& r) const {
        if (s > S) throw std::out_of_range("expansion depth too small: need s=" + std::to_string(s));
        auto it = table.find({s, r});
        return it == table.end() ? QS(D) : it->second;
    }
};

// Cdot^{(t)}_{k,i;s,j}
struct StructureCoeffs {
    int k = 0;
    Partition cls;
    int D = 0;
    std::map<std::tuple<int, int, Partition>, QS> table;

    QS get(int t, int s, const Partition& j) const {
        auto it = table.find({t, s, j});
        return it == table.end() ? QS(D) : it->second;
    }
};

inline OpExp opexp_from_classes(const ClassSeries& F, int k, const Partition& cls, int S) {
    OpExp o{k, cls, F.D, S, {}};
    for (int d = 0; d <= F.D; ++d)
        for (auto& [p, l] : F.c[static_cast<std::size_t>(d)])
            for (auto& [e, v] : l.terms()) {
                const int s = k - e;
                if (s < 0) throw std::logic_error("hbar power above hbar^k in D^{k,i}");
                if (s > S) continue;
                auto it = o.table.try_emplace({s, p}, QS(F.D)).first;
                it->second[d] = v;
            }
    return o;
}

// Restrictions at the unordered pairs, expanded at hbar = infinity and
// solved against M[pair][lambda] = s_lambda(alpha_i, alpha_j).
inline OpExp opexp_from_fixed(const FixedSeries& F, int k, const Partition& cls, int S, const SchurBasis& basis,
                              const std::vector<BigRational>& alpha) {
    OpExp o{k, cls, F.D, S, {}};
    auto ctx = GrContext::with_alpha(alpha);
    Matrix Mi = inverse(restriction_matrix(basis, ctx));
    auto pairs = unordered_pairs(ctx.n);
    const int depth = S - k + 1;
    const auto& el = basis.elements();
    for (int d = 0; d <= F.D; ++d) {
        std::vector<LaurentQ> lau;
        for (auto& [i, j] : pairs) {
            lau.push_back(F(i, j, d).laurent_at_infinity(std::max(depth, 1)));
            if (!lau.back().is_zero() && lau.back().top() > k) throw std::logic_error("hbar power above hbar^k in D^{k,i}");
        }
        for (int s = 0; s <= S; ++s) {
            std::vector<BigRational> v(pairs.size());
            for (std::size_t u = 0; u < pairs.size(); ++u) v[u] = lau[u][k - s];
            for (std::size_t w = 0; w < el.size(); ++w) {
                BigRational c = 0;
                for (std::size_t u = 0; u < pairs.size(); ++u) c += Mi[w][u] * v[u];
                if (c == 0) continue;
                auto it = o.table.try_emplace({s, el[w]}, QS(F.D)).first;
                it->second[d] = c;
            }
        }
    }
    return o;
}

// q^0 table must be delta_{i,j} delta_{k,r} delta_{r,s}
inline std::vector<std::string> check_opexp_q0(const OpExp& o) {
    std::vector<std::string> bad;
    bool seen = false;
    for (auto& [key, v] : o.table) {
        auto& [s, p] = key;
        BigRational want = (p == o.cls && s == o.k) ? 1 : 0;
        if (p == o.cls && s == o.k) seen = true;
        if (v[0] != want) bad.push_back("q^0 entry s=" + std::to_string(s) + " " + p.to_string() + " is " + v[0].get_str());
    }
    if (!seen) bad.push_back("q^0 diagonal entry missing");
    return bad;
}

// Equations sum_{t<=r} sum_{s<=k-t} Cdot^{(t)}_{s,j} C^{(r1,j1)}_{s,j,r+r1-t} = delta delta delta,
// solved level by level in r; at level r the matrix
// A[(s,j)][(r1,j1)] = C^{(r1,j1)}_{s,j,r1} is the identity mod q.
inline StructureCoeffs solve_structure_coeffs(const std::map<Partition, OpExp>& ops, const SchurBasis& basis, int k,
                                              const Partition& target, int D) {
    StructureCoeffs out{k, target, D, {}};
    for (int r = 0; r <= k; ++r) {
        std::vector<Partition> idx;
        for (int s = 0; s <= k - r; ++s)
            for (auto& p : basis.degree(s)) idx.push_back(p);
        SeriesMatrix<QS> A(idx.size(), std::vector<QS>(idx.size(), QS(D)));
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) A[a][b] = ops.at(idx[a]).get(idx[b].size(), idx[b]);
        std::vector<QS> rhs(idx.size(), QS(D));
        for (std::size_t b = 0; b < idx.size(); ++b) {
            const Partition& j1 = idx[b];
            const int r1 = j1.size();
            if (r == 0 && j1 == target) rhs[b] = QS::one(D);
            for (int t = 0; t < r; ++t)
                for (int s = 0; s <= k - t; ++s)
                    for (auto& j : basis.degree(s)) {
                        QS c = out.get(t, s, j);
                        if (c == QS(D)) continue;
                        rhs[b] = rhs[b] - c * ops.at(j).get(r + r1 - t, j1);
                    }
        }
        auto Ai = neumann_inverse(A, D);
        for (std::size_t a = 0; a < idx.size(); ++a) {
            QS x(D);
            for (std::size_t b = 0; b < idx.size(); ++b) x = x + rhs[b] * Ai[b][a];
            if (!(x == QS(D))) out.table[{r, idx[a].size(), idx[a]}] = x;
        }
    }
    return out;
}

// Left side minus right side of every equation; empty when solved.
inline std::vector<std::string> structure_residual(const StructureCoeffs& C, const std::map<Partition, OpExp>& ops,
                                                   const SchurBasis& basis) {
    std::vector<std::string> bad;
    const int k = C.k, D = C.D;
    for (int r = 0; r <= k; ++r)
        for (int r1 = 0; r1 <= k - r; ++r1)
            for (auto& j1 : basis.degree(r1)) {
                QS lhs(D);
                for (int t = 0; t <= r; ++t)
                    for (int s = 0; s <= k - t; ++s)
                        for (auto& j : basis.degree(s)) lhs = lhs + C.get(t, s, j) * ops.at(j).get(r + r1 - t, j1);
                QS want(D);
                if (j1 == C.cls && r1 == k && r == 0) want = QS::one(D);
                if (!(lhs == want)) bad.push_back("residual at r=" + std::to_string(r) + " " + j1.to_string());
            }
    return bad;
}

inline std::vector<std::string> check_leading_structure(const StructureCoeffs& C, const SchurBasis& basis) {
    std::vector<std::string> bad;
    for (int s = 0; s <= C.k; ++s)
        for (auto& j : basis.degree(s)) {
            QS want(C.D);
            if (s == C.k && j == C.cls) want = QS::one(C.D);
            if (!(C.get(0, s, j) == want)) bad.push_back("Cdot^(0) differs from delta at " + j.to_string());
        }
    return bad;
}

// ---- non-equivariant pipeline (zero weights) ----

struct OperatorPipeline {
    Kind kind = Kind::dot;
    int n = 3;
    CISpec a;
    int D = 0;
    SchurBasis basis{3};
    FrakD fd;
    Series2 K0;
    std::map<Partition, Series1> barD_rat;  // bar-transformed gamma(D) K, rational
    std::map<Partition, ClassSeries> barD, calD, Ygamma;
    std::map<int, SeriesMatrix<QS>> J, Jinv;
    std::map<Partition, OpExp> opexp;
    std::map<Partition, StructureCoeffs> Cdot;

    int degree_shift() const { return a.total() - n; }

    std::vector<Partition> classes_of(int k) const { return basis.degree(k); }
};

inline OperatorPipeline build_pipeline(Kind kind, int n, const CISpec& a, int D, bool naive = false) {
    a.validate(n);
    OperatorPipeline P;
    P.kind = kind;
    P.n = n;
    P.a = a;
    P.D = D;
    P.basis = SchurBasis(n);
    const int top = P.basis.top_degree();
    P.K0 = build_K(kind, n, a, zero_alpha(n), D);
    P.fd = naive ? naive_frakD(top, D) : build_frakD(P.K0, top);
    const int shift = P.degree_shift();
    for (auto& lam : P.basis.elements()) {
        Series1 y = bar_transform(apply_operator(gamma_operator(lam, P.fd), lam.size(), P.K0));
        const int k = lam.size();
        P.barD.emplace(lam, class_series(y, P.basis, [k, shift](int d) { return k + shift * d; }));
        P.barD_rat.emplace(lam, std::move(y));
    }
    for (int k = 0; k <= top; ++k) {
        auto cls = P.basis.degree(k);
        SeriesMatrix<QS> J(cls.size(), std::vector<QS>(cls.size(), QS(D)));
        for (std::size_t j = 0; j < cls.size(); ++j)
            for (std::size_t i = 0; i < cls.size(); ++i)
                for (int d = 0; d <= D; ++d) J[j][i][d] = P.barD.at(cls[j]).at(d, cls[i])[0];
        P.J[k] = J;
        P.Jinv[k] = neumann_inverse(J, D);
        for (std::size_t i = 0; i < cls.size(); ++i) {
            ClassSeries c(D);
            for (std::size_t j = 0; j < cls.size(); ++j) add_scaled(c, P.barD.at(cls[j]), P.Jinv[k][i][j], 0);
            P.calD.emplace(cls[i], c);
        }
    }
    for (auto& lam : P.basis.elements()) P.opexp.emplace(lam, opexp_from_classes(P.calD.at(lam), lam.size(), lam, top));
    for (auto& lam : P.basis.elements()) {
        const int k = lam.size();
        auto C = solve_structure_coeffs(P.opexp, P.basis, k, lam, D);
        ClassSeries y(D);
        for (int t = 0; t <= k; ++t)
            for (int s = 0; s <= k - t; ++s)
                for (auto& j : P.basis.degree(s)) {
                    QS c = C.get(t, s, j);
                    if (c == QS(D)) continue;
                    add_scaled(y, P.calD.at(j), c, k - t - s);
                }
        P.Cdot.emplace(lam, std::move(C));
        P.Ygamma.emplace(lam, std::move(y));
    }
    return P;
}

// J * Jinv == I through q^D
inline bool inverse_certificate(const OperatorPipeline& P, int k) {
    auto prod = sm_multiply(P.J.at(k), P.Jinv.at(k), P.D);
    return prod == sm_identity<QS>(prod.size(), P.D);
}

// entries vanish unless s = r + (n - |a|) d
inline std::vector<std::string> check_opexp_homogeneity(const OpExp& o, int n, const CISpec& a) {
    std::vector<std::string> bad;
    for (auto& [key, v] : o.table)
        for (int d = 0; d <= o.D; ++d)
            if (v[d] != 0 && key.first != key.second.size() + (n - a.total()) * d)
                bad.push_back("nonzero entry off the homogeneity line at s=" + std::to_string(key.first) + " " + key.second.to_string());
    return bad;
}

// ---- equivariant pipeline at concrete weights ----

struct EquivariantPipeline {
    std::vector<BigRational> alpha;
    FixedSeries Y;  // bar transform of K
    std::map<Partition, FixedSeries> barD, calD, Ygamma;
    std::map<Partition, OpExp> opexp;
    std::map<Partition, StructureCoeffs> Cdot;
};

// Reuses the operator tables and J^{-1} from the zero-weight pipeline.
inline EquivariantPipeline build_equivariant(const OperatorPipeline& P, const std::vector<BigRational>& alpha,
                                             std::optional<std::pair<int, int>> flip = std::nullopt) {
    check_genericity(alpha, P.D);
    EquivariantPipeline E;
    E.alpha = alpha;
    const int top = P.basis.top_degree();
    auto KF = fixed_K(P.kind, P.n, P.a, alpha, P.D, flip);
    E.Y = fixed_bar(KF, alpha);
    for (auto& lam : P.basis.elements()) {
        auto w = gamma_operator(lam, P.fd);
        std::map<PointPair, PointSeries2> G;
        for (auto& [p, s] : KF)
            G.emplace(p, apply_operator_at(w, lam.size(), s, alpha[static_cast<std::size_t>(p.first)], alpha[static_cast<std::size_t>(p.second)]));
        E.barD.emplace(lam, fixed_bar(G, alpha));
    }
    for (int k = 0; k <= top; ++k) {
        auto cls = P.basis.degree(k);
        for (std::size_t i = 0; i < cls.size(); ++i) {
            FixedSeries c = zero_fixed(E.Y);
            for (std::size_t j = 0; j < cls.size(); ++j) add_scaled(c, E.barD.at(cls[j]), P.Jinv.at(k)[i][j], 0);
            E.calD.emplace(cls[i], c);
        }
    }
    for (auto& lam : P.basis.elements())
        E.opexp.emplace(lam, opexp_from_fixed(E.calD.at(lam), lam.size(), lam, top, P.basis, alpha));
    for (auto& lam : P.basis.elements()) {
        const int k = lam.size();
        auto C = solve_structure_coeffs(E.opexp, P.basis, k, lam, P.D);
        FixedSeries y = zero_fixed(E.Y);
        for (int t = 0; t <= k; ++t)
            for (int s = 0; s <= k - t; ++s)
                for (auto& j : P.basis.degree(s)) {
                    QS c = C.get(t, s, j);
                    if (c == QS(P.D)) continue;
                    add_scaled(y, E.calD.at(j), c, k - t - s);
                }
        E.Cdot.emplace(lam, std::move(C));
        E.Ygamma.emplace(lam, std::move(y));
    }
    return E;
}

// alpha-degree of C^{(r,j)}_{k,i,s} at q^d is s - r + (|a| - n) d: negative
// degree entries vanish and degree-0 entries equal the zero-weight values.
inline std::vector<std::string> compare_opexp(const OpExp& eq, const OpExp& zero, int n, const CISpec& a) {
    std::vector<std::string> bad;
    std::set<std::pair<int, Partition>> keys;
    for (auto& [k, v] : eq.table) keys.insert(k);
    for (auto& [k, v] : zero.table) keys.insert(k);
    for (auto& key : keys) {
        QS e = eq.get(key.first, key.second);
        QS z0 = zero.get(key.first, key.second);
        for (int d = 0; d <= eq.D; ++d) {
            const int deg = key.first - key.second.size() + (a.total() - n) * d;
            if (deg < 0 && e[d] != 0) bad.push_back("negative-degree entry nonzero at s=" + std::to_string(key.first) + " " + key.second.to_string());
            if (deg == 0 && e[d] != z0[d]) bad.push_back("degree-0 entry differs from zero weights at s=" + std::to_string(key.first) + " " + key.second.to_string());
        }
    }
    return bad;
}

// ---- diagonal checks ----

// sum g_{lm} Y_l(hbar) (x) Y'_m(-hbar) per q-degree, in H* (x) H*
using TensorSeries = std::vector<std::map<std::pair<Partition, Partition>, LaurentQ>>;

inline TensorSeries double_pairing(const std::map<Partition, ClassSeries>& Y, const std::map<Partition, ClassSeries>& Yp,
                                   const DiagonalClass& g, int D) {
    TensorSeries out(static_cast<std::size_t>(D + 1));
    for (auto& [lm, coef] : g.tensor) {
        const auto& A = Y.at(lm.first);
        const auto& B = Yp.at(lm.second);
        for (int d1 = 0; d1 <= D; ++d1)
            for (int d2 = 0; d1 + d2 <= D; ++d2)
                for (auto& [p, u] : A.c[static_cast<std::size_t>(d1)])
                    for (auto& [q, v] : B.c[static_cast<std::size_t>(d2)]) {
                        LaurentQ w = scale(u * reflect_hbar(v), coef);
                        auto& slot = out[static_cast<std::size_t>(d1 + d2)];
                        auto it = slot.find({p, q});
                        if (it == slot.end())
                            slot.emplace(std::make_pair(p, q), w);
                        else
                            it->second += w;
                    }
    }
    for (auto& slot : out)
        for (auto it = slot.begin(); it != slot.end();) it = it->second.is_zero() ? slot.erase(it) : std::next(it);
    return out;
}

// q^0 is [Delta] (hbar-free), higher orders vanish
inline std::vector<std::string> check_orthogonality(const TensorSeries& T, const DiagonalClass& delta) {
    std::vector<std::string> bad;
    std::map<std::pair<Partition, Partition>, LaurentQ> want;
    for (auto& [k, v] : delta.tensor) want.emplace(k, LaurentQ::monomial(0, v));
    for (std::size_t d = 0; d < T.size(); ++d) {
        if (d == 0) {
            if (T[0].size() != want.size()) bad.push_back("q^0 differs from [Delta]");
            for (auto& [k, v] : T[0]) {
                auto it = want.find(k);
                if (it == want.end() || !(it->second - v).is_zero())
                    bad.push_back("q^0 differs from [Delta] at " + k.first.to_string() + "x" + k.second.to_string());
            }
        } else if (!T[d].empty()) {
            bad.push_back("q^" + std::to_string(d) + " term does not vanish");
        }
    }
    return bad;
}

// Equivariant: sum g_{lm} Y_l|_p(hbar) Y'_m|_p'(-hbar) = delta_{pp'} e(T_p Gr) at every q-degree.
inline std::vector<std::string> check_orthogonality_equivariant(const std::map<Partition, FixedSeries>& Y,
                                                                const std::map<Partition, FixedSeries>& Yp,
                                                                const std::vector<BigRational>& alpha, int D) {
    std::vector<std::string> bad;
    auto ctx = GrContext::with_alpha(alpha);
    SchurBasis basis(ctx.n);
    auto g = equivariant_diagonal(basis, ctx);
    auto pairs = unordered_pairs(ctx.n);
    for (auto& p : pairs)
        for (auto& pp : pairs) {
            std::vector<UniRatFunc> sum(static_cast<std::size_t>(D + 1));
            for (auto& [lm, coef] : g.tensor) {
                const auto& A = Y.at(lm.first).at.at(p);
                const auto& B = Yp.at(lm.second).at.at(pp);
                for (int d1 = 0; d1 <= D; ++d1)
                    for (int d2 = 0; d1 + d2 <= D; ++d2)
                        sum[static_cast<std::size_t>(d1 + d2)] +=
                            A[static_cast<std::size_t>(d1)] * B[static_cast<std::size_t>(d2)].reflected() * coef;
            }
            for (int d = 0; d <= D; ++d) {
                UniRatFunc want = (d == 0 && p == pp) ? UniRatFunc(tangent_euler(p.first, p.second, ctx)) : UniRatFunc();
                if (!(sum[static_cast<std::size_t>(d)] == want))
                    bad.push_back("p" + std::to_string(p.first + 1) + std::to_string(p.second + 1) + " x p" + std::to_string(pp.first + 1) +
                                  std::to_string(pp.second + 1) + " q^" + std::to_string(d) + ": " + sum[static_cast<std::size_t>(d)].to_string());
            }
        }
    return bad;
}

}  // namespace qgr
