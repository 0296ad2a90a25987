#pragma once

#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qgr/operators/normalization.hpp"
#include "qgr/operators/pipeline.hpp"
#include "qgr/verify/audit.hpp"
#include "qgr/verify/residue_internal.hpp"

namespace qgr::cli {

using json = nlohmann::json;

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string command;
    int n = 3;
    CISpec a;
    int D = 3;
    int Nz = 3;
    int depth = 0;  // 0: n D + 2(n-2) + 2
    std::string alpha_mode = "auto";  // auto | zero | default | explicit
    std::vector<BigRational> alpha;
    std::string kind = "dot-closed";
    std::string suite = "all";
    int k = -1, j = -1;
    bool equivariant = false;
    std::optional<std::pair<int, int>> flip;

    json echo() const {
        json m;
        m["command"] = command;
        m["n"] = n;
        m["a"] = a.a;
        m["qdeg"] = D;
        m["zdeg"] = Nz;
        m["depth"] = depth;
        m["alpha_mode"] = alpha_mode;
        std::vector<std::string> al;
        for (auto& x : alpha) al.push_back(x.get_str());
        m["alpha"] = al;
        if (command == "series" || command == "y-gamma") m["kind"] = kind;
        if (command == "verify") m["suite"] = suite;
        if (k >= 0) m["k"] = k;
        if (j >= 0) m["j"] = j;
        m["equivariant"] = equivariant;
        if (flip) m["flip"] = {flip->first, flip->second};
        return m;
    }
};

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

inline CISpec parse_a(const std::string& s) {
    CISpec c;
    for (auto& t : split_list(s)) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(t, &pos);
            if (pos != t.size()) throw std::invalid_argument(t);
            c.a.push_back(v);
        } catch (const std::exception&) {
            throw ConfigError("bad degree list entry '" + t + "'");
        }
    }
    return c;
}

inline std::vector<BigRational> parse_alpha(const std::string& s) {
    std::vector<BigRational> out;
    for (auto& t : split_list(s)) {
        try {
            BigRational q(t);
            q.canonicalize();
            out.push_back(q);
        } catch (const std::exception&) {
            throw ConfigError("bad weight '" + t + "'");
        }
    }
    return out;
}

// Fills alpha from the mode; `need_concrete` forbids zero weights.
inline void resolve_alpha(RunConfig& c, bool need_concrete) {
    if (c.alpha_mode == "auto") c.alpha_mode = c.alpha.empty() ? (need_concrete ? "default" : "zero") : "explicit";
    if (c.alpha_mode == "zero") {
        if (need_concrete) throw ConfigError("this command needs nonzero weights");
        c.alpha = zero_alpha(c.n);
    } else if (c.alpha_mode == "default") {
        c.alpha = default_alpha(c.n);
    } else if (c.alpha_mode != "explicit") {
        throw ConfigError("unknown alpha mode '" + c.alpha_mode + "'");
    }
    if (static_cast<int>(c.alpha.size()) != c.n) throw ConfigError("need exactly n weights");
    if (c.alpha_mode != "zero") {
        try {
            check_genericity(c.alpha, c.D);
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
    }
}

inline void validate(RunConfig& c) {
    if (c.n < 3) throw ConfigError("n must be at least 3");
    if (c.n > 8) throw ConfigError("n above 8 is not supported");
    if (c.D < 0 || c.Nz < 0) throw ConfigError("truncation degrees must be nonnegative");
    if (c.depth < 0) throw ConfigError("depth must be positive");
    if (c.depth == 0) c.depth = c.n * c.D + 2 * (c.n - 2) + 2;
    if (c.flip && (c.flip->first < 0 || c.flip->second < 0 || c.flip->first + c.flip->second > c.D))
        throw ConfigError("flipped summand lies outside the truncation");
    try {
        c.a.validate(c.n);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

struct Outcome {
    json payload;
    bool ok = true;
};

// ---- formatting ----

inline std::string point_name(int i, int j) { return "p" + std::to_string(i + 1) + "," + std::to_string(j + 1); }

inline json ratfunc_table(const Series1& s) {
    json t = json::array();
    for (int d = 0; d <= s.trunc(); ++d) t.push_back({{"q", d}, {"value", s[d].to_string()}});
    return t;
}

// sum_lambda s_lambda(x) hbar^e as one rational function
inline RatFunc class_value(const ClassOf<LaurentQ>& c) {
    RatFunc v;
    const SparsePoly h = SparsePoly::variable(var::hbar);
    for (auto& [p, l] : c)
        for (auto& [e, coef] : l.terms()) {
            RatFunc t(schur_polynomial(p) * coef);
            if (e >= 0)
                t = t * RatFunc(h.pow(static_cast<unsigned>(e)));
            else
                t = t / RatFunc(h.pow(static_cast<unsigned>(-e)));
            v = v + t;
        }
    return v;
}

inline json class_table(const ClassSeries& s) {
    json t = json::array();
    for (int d = 0; d <= s.D; ++d) {
        json cls = json::object();
        for (auto& [p, l] : s.c[static_cast<std::size_t>(d)]) cls[p.to_string()] = to_string(l);
        t.push_back({{"q", d}, {"value", class_value(s.c[static_cast<std::size_t>(d)]).to_string()}, {"classes", cls}});
    }
    return t;
}

inline std::string laurent_str(const LaurentQ& l) {
    if (l.is_exact()) return to_string(l);
    std::string o = "O(hbar^" + std::to_string(l.lo() - 1) + ")";
    return l.is_zero() ? o : to_string(l) + "+" + o;
}

inline json fixed_table(const FixedSeries& F, int depth) {
    json t = json::array();
    for (auto& [p, s] : F.at) {
        if (p.first > p.second) continue;
        for (int d = 0; d <= F.D; ++d) {
            const auto& v = s[static_cast<std::size_t>(d)];
            t.push_back({{"point", point_name(p.first, p.second)},
                         {"q", d},
                         {"value", v.to_string()},
                         {"laurent", laurent_str(v.laurent_at_infinity(depth))}});
        }
    }
    return t;
}

struct CheckList {
    json items = json::array();
    bool ok = true;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        json j = {{"name", name}, {"pass", pass}};
        if (!pass) j["detail"] = detail;
        items.push_back(j);
        ok = ok && pass;
    }
    template <class V>
    void add_list(const std::string& name, const V& failures) {
        add(name, failures.empty(), failures.empty() ? "" : failures.front());
    }
};

inline std::string rec_detail(const RecursivityReport& r) {
    if (auto f = r.first_failure())
        return point_name(f->i, f->j) + " q^" + std::to_string(f->d) + ": " + f->remainder;
    return r.entries.empty() ? "no entries checked" : "";
}

inline std::string mpc_detail(const MPCReport& r) {
    if (r.offenders.empty()) return "";
    auto& o = r.offenders.front();
    return "z^" + std::to_string(o.p) + " q^" + std::to_string(o.d) + ": " + o.value;
}

inline Kind parse_kind(const std::string& s) {
    if (s == "dot") return Kind::dot;
    if (s == "ddot") return Kind::ddot;
    throw ConfigError("kind must be dot or ddot");
}

// ---- series ----

inline Partition selected_class(const RunConfig& c, const SchurBasis& basis) {
    if (c.k < 0 || c.j < 0) throw ConfigError("y-gamma series need --k and --j");
    auto cls = basis.degree(c.k);
    if (c.k > basis.top_degree() || c.j >= static_cast<int>(cls.size())) throw ConfigError("no class with this k, j");
    return cls[static_cast<std::size_t>(c.j)];
}

inline Outcome cmd_series(RunConfig& c) {
    validate(c);
    const std::string& kind = c.kind;
    const bool fixed = kind.ends_with("-bar") && (c.alpha_mode == "default" || c.alpha_mode == "explicit" || !c.alpha.empty());
    resolve_alpha(c, fixed);
    Outcome o;
    if (kind == "dot-closed" || kind == "ddot-closed") {
        if (c.alpha_mode != "zero") throw ConfigError("closed forms live at zero weights");
        o.payload = ratfunc_table(build_Y_closed(kind == "dot-closed" ? Kind::dot : Kind::ddot, c.n, c.a, c.D));
    } else if (kind == "dot-bar" || kind == "ddot-bar") {
        Kind kd = kind == "dot-bar" ? Kind::dot : Kind::ddot;
        if (fixed)
            o.payload = fixed_table(fixed_Y(kd, c.n, c.a, c.alpha, c.D, c.flip), c.depth);
        else
            o.payload = ratfunc_table(bar_transform(build_K(kd, c.n, c.a, c.alpha, c.D)));
    } else if (kind == "i-normalization") {
        auto I = normalization_I(Kind::dot, c.n, c.a, c.D);
        o.payload = json::array();
        for (int d = 0; d <= c.D; ++d) o.payload.push_back({{"q", d}, {"value", I[d].get_str()}});
    } else if (kind == "y-over-i") {
        o.payload = ratfunc_table(divide_by_I(build_Y_closed(Kind::dot, c.n, c.a, c.D), normalization_I(Kind::dot, c.n, c.a, c.D)));
    } else if (kind == "y-gamma" || kind == "ddot-y-gamma") {
        if (c.alpha_mode != "zero") throw ConfigError("y-gamma series are computed at zero weights");
        auto P = build_pipeline(kind == "y-gamma" ? Kind::dot : Kind::ddot, c.n, c.a, c.D);
        auto lam = selected_class(c, P.basis);
        o.payload = {{"class", lam.to_string()}, {"table", class_table(P.Ygamma.at(lam))}};
        o.ok = P.Ygamma.at(lam).at(0, lam) == LaurentQ::monomial(0, BigRational(1)) && P.Ygamma.at(lam).c[0].size() == 1;
    } else if (kind == "dual") {
        if (c.alpha_mode != "zero") throw ConfigError("the dual construction compares at zero weights");
        o.payload = json::object();
        bool eq = true;
        for (Kind kd : {Kind::dot, Kind::ddot}) {
            auto closed = build_Y_closed(kd, c.n, c.a, c.D);
            auto bar = bar_transform(build_K(kd, c.n, c.a, c.alpha, c.D));
            bool e = true;
            for (int d = 0; d <= c.D; ++d) e = e && closed[d] == bar[d];
            o.payload[kind_name(kd)] = {{"closed", ratfunc_table(closed)}, {"bar", ratfunc_table(bar)}, {"equal", e}};
            eq = eq && e;
        }
        o.payload["equal"] = eq;
        o.ok = eq;
    } else {
        throw ConfigError("unknown series kind '" + kind + "'");
    }
    return o;
}

// ---- verify ----

inline void suite_recursivity(const RunConfig& c, CheckList& L, const OperatorPipeline* P, const OperatorPipeline* Pd) {
    for (Kind kd : {Kind::dot, Kind::ddot}) {
        auto F = fixed_Y(kd, c.n, c.a, c.alpha, c.D, kd == Kind::dot ? c.flip : std::nullopt);
        auto r = check_recursive(F, C_table(kd, c.a, c.alpha), c.alpha);
        L.add("Y " + kind_name(kd) + " recursive", r.pass(), rec_detail(r));
        const int D2 = std::min(c.D, 2);
        auto spec = AMatrixSpec::specialized(c.a, c.alpha);
        auto r2 = check_recursive2(fixed_A(kd, spec, D2), kd, spec);
        L.add("A " + kind_name(kd) + " two-variable recursive", r2.pass(), rec_detail(r2));
    }
    if (!P) return;
    auto E = build_equivariant(*P, c.alpha);
    auto Ed = build_equivariant(*Pd, c.alpha);
    for (auto& [lam, y] : E.Ygamma) {
        auto r = check_recursive(y, C_table(Kind::dot, c.a, c.alpha), c.alpha);
        L.add("Y_gamma dot " + lam.to_string() + " recursive", r.pass(), rec_detail(r));
        auto rd = check_recursive(Ed.Ygamma.at(lam), C_table(Kind::ddot, c.a, c.alpha), c.alpha);
        L.add("Y_gamma ddot " + lam.to_string() + " recursive", rd.pass(), rec_detail(rd));
    }
}

inline void suite_mpc(const RunConfig& c, CheckList& L) {
    auto Y = fixed_Y(Kind::dot, c.n, c.a, c.alpha, c.D, c.flip);
    auto Z = fixed_Y(Kind::ddot, c.n, c.a, c.alpha, c.D);
    auto s = check_mpc(build_phi(Y, Y, eta_ci(c.a), c.Nz, c.D, c.alpha));
    L.add("self polynomiality of Y dot with eta = <a>(x1+x2)^l", s.pass, mpc_detail(s));
    auto m = check_mpc(build_phi(Y, Z, eta_one(), c.Nz, c.D, c.alpha));
    L.add("mutual polynomiality of Y dot, Y ddot", m.pass, mpc_detail(m));
}

inline void suite_operator_norms(const RunConfig& c, CheckList& L, const OperatorPipeline& P, const OperatorPipeline& Pd) {
    for (auto* Q : {&P, &Pd}) {
        const std::string kn = kind_name(Q->kind);
        const int top = Q->basis.top_degree();
        auto a0 = audit_normalization(Q->fd, Q->K0, std::min(top, 2));
        L.add_list(kn + " operator normalization at zero weights", a0.failures);
        auto ae = audit_normalization_equivariant(Q->fd, Q->kind, AMatrixSpec::specialized(c.a, c.alpha), c.D, std::min(top, 2));
        L.add_list(kn + " operator normalization on the P x P series", ae.failures);
        for (auto& [k, J] : Q->J) {
            L.add(kn + " J_" + std::to_string(k) + " q^0 identity", constant_is_identity(J), "q^0 part is not the identity");
            L.add(kn + " J_" + std::to_string(k) + " inverse certificate", inverse_certificate(*Q, k), "J * J^-1 != I");
        }
        for (auto& [lam, o] : Q->opexp) {
            L.add_list(kn + " expansion " + lam.to_string() + " q^0", check_opexp_q0(o));
            L.add_list(kn + " expansion " + lam.to_string() + " homogeneity", check_opexp_homogeneity(o, c.n, c.a));
        }
        for (auto& [lam, C] : Q->Cdot) {
            L.add_list(kn + " structure " + lam.to_string() + " leading term", check_leading_structure(C, Q->basis));
            L.add_list(kn + " structure " + lam.to_string() + " residual", structure_residual(C, Q->opexp, Q->basis));
        }
    }
}

// hbar^0 and hbar^-1 parts of positive-degree coefficients vanish
inline void suite_fano(const RunConfig& c, CheckList& L) {
    auto Y0 = build_Y_closed(Kind::dot, c.n, c.a, c.D);
    const int top = 2 * (c.n - 2);
    std::vector<std::string> bad;
    for (int d = 1; d <= c.D; ++d) {
        if (Y0[d].is_zero()) continue;
        for (auto& [v, l] : expand_series_in_x(Y0[d], top, top + 2))
            for (int e : {0, -1})
                if (l[e] != 0) bad.push_back("q^" + std::to_string(d) + " x^(" + std::to_string(v.first) + "," + std::to_string(v.second) +
                                             ") hbar^" + std::to_string(e) + ": " + l[e].get_str());
        for (auto& [v, l] : expand_series_in_x(Y0[d], top, top + 2))
            if (!l.is_zero() && l.top() > 0) bad.push_back("q^" + std::to_string(d) + ": positive hbar power");
    }
    L.add_list("Y dot = 1 mod hbar^-2 at zero weights", bad);
    auto F = fixed_Y(Kind::dot, c.n, c.a, c.alpha, c.D, c.flip);
    std::vector<std::string> badf;
    for (auto& [p, s] : F.at)
        for (int d = 1; d <= c.D; ++d) {
            auto l = s[static_cast<std::size_t>(d)].laurent_at_infinity(3);
            if (!l.is_zero() && l.top() > -2) badf.push_back(point_name(p.first, p.second) + " q^" + std::to_string(d) + ": " + to_string(l));
        }
    L.add_list("Y dot = 1 mod hbar^-2 at the fixed points", badf);
}

inline void suite_orthogonality(const RunConfig& c, CheckList& L, const OperatorPipeline& P, const OperatorPipeline& Pd) {
    auto delta = diagonal(P.basis);
    L.add_list("Y_gamma pairing reduces to the diagonal", check_orthogonality(double_pairing(P.Ygamma, Pd.Ygamma, delta, c.D), delta));
    auto E = build_equivariant(P, c.alpha);
    auto Ed = build_equivariant(Pd, c.alpha);
    L.add_list("equivariant double J at the fixed points", check_orthogonality_equivariant(E.Ygamma, Ed.Ygamma, c.alpha, c.D));
}

inline void suite_residue(const RunConfig& c, CheckList& L) {
    auto Ys = bar_transform(build_K(Kind::dot, c.n, c.a, c.alpha, c.D));
    auto Zs = bar_transform(build_K(Kind::ddot, c.n, c.a, c.alpha, c.D));
    auto Yf = fixed_Y(Kind::dot, c.n, c.a, c.alpha, c.D);
    auto Zf = fixed_Y(Kind::ddot, c.n, c.a, c.alpha, c.D);
    const int Nz = std::min(c.Nz, 2);
    auto r1 = check_residue_internal(Ys, Zs, SparsePoly(1), c.alpha, build_phi(Yf, Zf, eta_one(), Nz, c.D, c.alpha), BigRational(5, 3));
    L.add("residue mechanics for Y dot, Y ddot", r1.pass(), "residue identity fails");
    auto r2 = check_residue_internal(Ys, Ys, eta_ci_poly(c.a), c.alpha, build_phi(Yf, Yf, eta_ci(c.a), Nz, c.D, c.alpha), BigRational(-2, 7));
    L.add("residue mechanics for Y dot with eta", r2.pass(), "residue identity fails");
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> s{"recursivity", "mpc", "operator-norms", "fano-vanishing", "orthogonality", "residue-internal", "all"};
    return s;
}

inline Outcome cmd_verify(RunConfig& c) {
    validate(c);
    if (std::find(suite_names().begin(), suite_names().end(), c.suite) == suite_names().end())
        throw ConfigError("unknown suite '" + c.suite + "'");
    const bool fano_ok = c.a.total() <= c.n - 2;
    if (c.suite == "fano-vanishing" && !fano_ok) throw ConfigError("fano-vanishing needs |a| <= n-2");
    resolve_alpha(c, true);
    const bool all = c.suite == "all";
    const bool need_pipeline = all || c.suite == "operator-norms" || c.suite == "orthogonality";
    std::optional<OperatorPipeline> P, Pd;
    if (need_pipeline) {
        P = build_pipeline(Kind::dot, c.n, c.a, c.D);
        Pd = build_pipeline(Kind::ddot, c.n, c.a, c.D);
    }
    CheckList L;
    if (all || c.suite == "recursivity") suite_recursivity(c, L, P ? &*P : nullptr, Pd ? &*Pd : nullptr);
    if (all || c.suite == "mpc") suite_mpc(c, L);
    if (all || c.suite == "operator-norms") suite_operator_norms(c, L, *P, *Pd);
    if ((all && fano_ok) || c.suite == "fano-vanishing") suite_fano(c, L);
    if (all || c.suite == "orthogonality") suite_orthogonality(c, L, *P, *Pd);
    if (all || c.suite == "residue-internal") suite_residue(c, L);
    return {json{{"checks", L.items}, {"pass", L.ok}}, L.ok};
}

// ---- cohomology ----

inline Outcome cmd_cohomology(RunConfig& c) {
    if (c.n < 3 || c.n > 12) throw ConfigError("n must be between 3 and 12");
    if (c.depth == 0) c.depth = c.n * c.D + 2 * (c.n - 2) + 2;
    SchurBasis basis(c.n);
    json p;
    json b = json::array();
    for (auto& e : basis.elements()) b.push_back(e.to_string());
    p["basis"] = b;
    json pm = json::array();
    for (auto& row : pairing_matrix(basis)) {
        json r = json::array();
        for (auto& v : row) r.push_back(v.get_str());
        pm.push_back(r);
    }
    p["pairing"] = pm;
    auto tensor_json = [](const DiagonalClass& d) {
        json t = json::array();
        for (auto& [lm, v] : d.tensor) t.push_back({{"left", lm.first.to_string()}, {"right", lm.second.to_string()}, {"coeff", v.get_str()}});
        return t;
    };
    p["diagonal"] = tensor_json(diagonal(basis));
    if (c.equivariant) {
        GrContext ctx = GrContext::symbolic(c.n);
        if (!c.alpha.empty()) {
            if (static_cast<int>(c.alpha.size()) != c.n) throw ConfigError("need exactly n weights");
            try {
                ctx = GrContext::with_alpha(c.alpha);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        }
        json fp = json::array();
        for (auto& f : localization_data(ctx)) {
            json e = {{"point", point_name(f.i, f.j)},
                      {"phi", f.phi.to_string()},
                      {"euler_normal", f.euler_normal.to_string()},
                      {"det_euler", f.det_euler.to_string()}};
            if (ctx.concrete()) e["tangent_euler"] = tangent_euler(f.i, f.j, ctx).get_str();
            fp.push_back(e);
        }
        p["fixed_points"] = fp;
        if (ctx.concrete()) p["equivariant_diagonal"] = tensor_json(equivariant_diagonal(basis, ctx));
    }
    return {p, true};
}

// ---- y-gamma / double-j ----

inline Outcome cmd_y_gamma(RunConfig& c) {
    validate(c);
    const bool eq = c.equivariant;
    resolve_alpha(c, eq);
    if (c.kind == "dot-closed") c.kind = "dot";
    Kind kd = parse_kind(c.kind);
    auto P = build_pipeline(kd, c.n, c.a, c.D);
    std::vector<Partition> cls = P.basis.elements();
    if (c.k >= 0 || c.j >= 0) cls = {selected_class(c, P.basis)};
    std::optional<EquivariantPipeline> E;
    if (eq) E = build_equivariant(P, c.alpha);
    Outcome o;
    o.payload = json::array();
    for (auto& lam : cls) {
        const auto& y = P.Ygamma.at(lam);
        bool q0 = y.c[0].size() == 1 && y.at(0, lam) == LaurentQ::monomial(0, BigRational(1));
        json e = {{"class", lam.to_string()}, {"table", class_table(y)}, {"q0_is_class", q0}};
        if (E) e["fixed_points"] = fixed_table(E->Ygamma.at(lam), c.depth);
        o.payload.push_back(e);
        o.ok = o.ok && q0;
    }
    return o;
}

inline Outcome cmd_double_j(RunConfig& c) {
    validate(c);
    resolve_alpha(c, c.equivariant);
    auto P = build_pipeline(Kind::dot, c.n, c.a, c.D);
    auto Pd = build_pipeline(Kind::ddot, c.n, c.a, c.D);
    auto delta = diagonal(P.basis);
    auto T = double_pairing(P.Ygamma, Pd.Ygamma, delta, c.D);
    json tab = json::array();
    for (int d = 0; d <= c.D; ++d) {
        json terms = json::array();
        for (auto& [lm, v] : T[static_cast<std::size_t>(d)])
            terms.push_back({{"left", lm.first.to_string()}, {"right", lm.second.to_string()}, {"value", to_string(v)}});
        tab.push_back({{"q", d}, {"terms", terms}});
    }
    auto bad = check_orthogonality(T, delta);
    Outcome o;
    o.payload = {{"numerator_at_minus_hbar", tab}, {"equals_diagonal", bad.empty()}};
    if (!bad.empty()) o.payload["detail"] = bad.front();
    o.ok = bad.empty();
    if (c.equivariant) {
        auto E = build_equivariant(P, c.alpha);
        auto Ed = build_equivariant(Pd, c.alpha);
        auto be = check_orthogonality_equivariant(E.Ygamma, Ed.Ygamma, c.alpha, c.D);
        o.payload["equivariant_equals_diagonal"] = be.empty();
        if (!be.empty()) o.payload["equivariant_detail"] = be.front();
        o.ok = o.ok && be.empty();
    }
    return o;
}

// Runs the command; returns the exit code and writes {meta, payload}.
inline int run(RunConfig c, std::ostream& out, std::ostream& err) {
    try {
        Outcome o;
        if (c.command == "series")
            o = cmd_series(c);
        else if (c.command == "verify")
            o = cmd_verify(c);
        else if (c.command == "cohomology")
            o = cmd_cohomology(c);
        else if (c.command == "y-gamma")
            o = cmd_y_gamma(c);
        else if (c.command == "double-j")
            o = cmd_double_j(c);
        else
            throw ConfigError("unknown command '" + c.command + "'");
        json doc = {{"meta", c.echo()}, {"payload", o.payload}};
        out << doc.dump(2) << "\n";
        return o.ok ? 0 : 1;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const GenericityError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qgr::cli
