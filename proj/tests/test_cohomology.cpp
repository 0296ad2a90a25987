#include <catch_amalgamated.hpp>

#include <random>

#include "printers.hpp"
#include "qgr/cohomology/grassmannian.hpp"

using namespace qgr;

namespace {

SparsePoly e1() { return X1() + X2(); }
SparsePoly e2() { return X1() * X2(); }

// random symmetric polynomial of degree k in x1, x2
SparsePoly random_symmetric(int k, std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-5, 5);
    SparsePoly p;
    for (int b = 0; 2 * b <= k; ++b) p = p + SparsePoly(c(rng)) * e1().pow(static_cast<unsigned>(k - 2 * b)) * e2().pow(static_cast<unsigned>(b));
    return p;
}

GrContext random_context(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-1000, 1000);
    std::vector<BigRational> a;
    while (static_cast<int>(a.size()) < n) {
        BigRational v = make_rational(c(rng), 1 + std::abs(c(rng)) % 7);
        if (std::find(a.begin(), a.end(), v) == a.end()) a.push_back(v);
    }
    return GrContext::with_alpha(a);
}

CohClass single(const Partition& p) { return {{p, SparsePoly(1)}}; }

}  // namespace

TEST_CASE("Schur basis enumerates the box with complementary indexing") {
    SchurBasis b3(3), b4(4), b6(6);
    CHECK(b3.size() == 3);
    CHECK(b4.size() == 6);
    CHECK(b6.size() == 15);
    for (int n = 3; n <= 6; ++n) {
        SchurBasis b(n);
        for (int k = 0; k <= b.top_degree(); ++k)
            for (int j = 0; j < static_cast<int>(b.degree(k).size()); ++j)
                CHECK(b.at(b.top_degree() - k, j) == b.complement(b.at(k, j)));
    }
}

TEST_CASE("schur_reduce examples") {
    SchurBasis b(3);
    SparsePoly h2 = X1() * X1() + X1() * X2() + X2() * X2();
    CHECK(schur_reduce(h2, b).empty());
    auto r = schur_reduce(e1().pow(2), b);
    REQUIRE(r.size() == 1);
    CHECK(r.begin()->first == Partition{1, 1});
    CHECK(r.begin()->second == SparsePoly(1));
    auto one = schur_reduce(SparsePoly(1), b);
    CHECK(one.size() == 1);
    CHECK(one.begin()->first == Partition{0, 0});
    CHECK_THROWS_AS(schur_reduce(X1(), b), std::invalid_argument);
    // coefficients in other variables pass through
    auto withh = schur_reduce(H() * e1() + SparsePoly(3), b);
    CHECK(withh.at({1, 0}) == H());
    CHECK(withh.at({0, 0}) == SparsePoly(3));
}

TEST_CASE("full Schur expansion resums to the input") {
    std::mt19937 rng(7);
    for (int it = 0; it < 30; ++it) {
        SparsePoly p = random_symmetric(1 + it % 6, rng) + random_symmetric(it % 4, rng);
        auto ex = schur_expand(split_x(p));
        SparsePoly back;
        for (auto& [lam, c] : ex) back = back + c * schur_polynomial(lam);
        CHECK(back == p);
    }
}

TEST_CASE("reduction is a ring map") {
    std::mt19937 rng(11);
    for (int it = 0; it < 50; ++it) {
        int n = 3 + it % 4;
        SchurBasis b(n);
        SparsePoly p = random_symmetric(it % 5, rng), q = random_symmetric((it / 2) % 5, rng);
        CHECK(schur_reduce(p * q, b) == schur_reduce(class_polynomial(schur_reduce(p, b)) * class_polynomial(schur_reduce(q, b)), b));
    }
}

TEST_CASE("pairing matrix is the anti-diagonal permutation and matches localization") {
    std::mt19937 rng(3);
    for (int n = 3; n <= 6; ++n) {
        SchurBasis b(n);
        Matrix P = pairing_matrix(b);
        GrContext ctx = random_context(n, rng);
        const auto& el = b.elements();
        for (std::size_t i = 0; i < el.size(); ++i)
            for (std::size_t j = 0; j < el.size(); ++j) {
                CHECK(P[i][j] == (el[j] == b.complement(el[i]) ? 1 : 0));
                if (n <= 4 && el[i].size() + el[j].size() <= b.top_degree()) {
                    SparsePoly oracle = ab_integrate(schur_polynomial(el[i]) * schur_polynomial(el[j]), ctx);
                    CHECK(oracle == SparsePoly(P[i][j]));
                }
            }
    }
    SchurBasis b(3);
    CHECK(pairing(single({0, 0}), single({1, 1}), b) == 1);
    CHECK(pairing(single({1, 0}), single({1, 0}), b) == 1);
    CHECK(pairing(single({0, 0}), single({1, 0}), b) == 0);
}

TEST_CASE("diagonal class") {
    SchurBasis b3(3);
    DiagonalClass d = diagonal(b3);
    CHECK(d.tensor.size() == 3);
    CHECK(d({0, 0}, {1, 1}) == 1);
    CHECK(d({1, 0}, {1, 0}) == 1);
    CHECK(d({1, 1}, {0, 0}) == 1);
    SchurBasis b4(4);
    DiagonalClass d4 = diagonal(b4);
    CHECK(d4.tensor.size() == 6);
    for (auto& [key, v] : d4.tensor) {
        CHECK(key.first.size() + key.second.size() == 4);
        CHECK(v == 1);
    }
}

TEST_CASE("localization data") {
    GrContext sym = GrContext::symbolic(3);
    auto fp = localization_data(sym);
    CHECK(fp.size() == 6);
    SparsePoly a1 = SparsePoly::variable(var::alpha(1)), a2 = SparsePoly::variable(var::alpha(2)),
               a3 = SparsePoly::variable(var::alpha(3));
    const auto& p12 = fp[0];
    CHECK(p12.i == 0);
    CHECK(p12.j == 1);
    CHECK(p12.phi == (X1() - a3) * (X2() - a3));
    CHECK(p12.euler_normal == (a1 - a3) * (a2 - a3));
    CHECK(p12.det_euler == a1 + a2);
    CHECK(restrict_fixed_point(e1(), 0, 1, sym) == a1 + a2);
    CHECK(restrict_fixed_point(p12.phi, 0, 2, sym).is_zero());
    CHECK(restrict_fixed_point(p12.phi, 0, 1, sym) == (a1 - a3) * (a2 - a3));
    // phi_ij vanishes at every other fixed point, for n = 4 too
    auto fp4 = localization_data(GrContext::symbolic(4));
    for (auto& f : fp4)
        for (auto& g : fp4) {
            SparsePoly r = restrict_fixed_point(f.phi, g.i, g.j, GrContext::symbolic(4));
            bool same = (f.i == g.i && f.j == g.j) || (f.i == g.j && f.j == g.i);
            if (same)
                CHECK(r == f.euler_normal);
            else
                CHECK(r.is_zero());
        }
    CHECK_THROWS_AS(localization_data(GrContext{3, std::vector<BigRational>{1, 1, 2}}), std::invalid_argument);
}

TEST_CASE("Atiyah-Bott integration") {
    std::mt19937 rng(5);
    GrContext g3 = GrContext::generic(3);
    auto fp = localization_data(g3);
    CHECK(ab_integrate(fp[0].phi, g3) == SparsePoly(1));
    for (int n = 3; n <= 6; ++n) {
        GrContext c1 = random_context(n, rng), c2 = random_context(n, rng);
        CHECK(ab_integrate(SparsePoly(1), c1).is_zero());
        SchurBasis b(n);
        for (int it = 0; it < 10; ++it) {
            SparsePoly eta = random_symmetric(b.top_degree(), rng);
            SparsePoly v = ab_integrate(eta, c1);
            CHECK(v == ab_integrate(eta, c2));
            CohClass r = schur_reduce(eta, b);
            auto top = r.find(b.top());
            CHECK(v == (top == r.end() ? SparsePoly() : top->second));
            CHECK(v.constant_value() == pairing(r, single({0, 0}), b));
        }
    }
}

TEST_CASE("equivariant diagonal restricts to the Euler class on the diagonal") {
    for (int n = 3; n <= 4; ++n) {
        SchurBasis b(n);
        GrContext ctx = GrContext::generic(n);
        DiagonalClass g = equivariant_diagonal(b, ctx);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        if (i == j || k == l) continue;
                        bool same = (i == k && j == l) || (i == l && j == k);
                        CHECK(restrict_diagonal(g, i, j, k, l, ctx) == (same ? tangent_euler(i, j, ctx) : BigRational(0)));
                    }
        // homogeneity: scaling alpha by 2 scales g_{lm} by 2^{2(n-2)-|l|-|m|};
        // the degree-zero part is the ordinary diagonal
        std::vector<BigRational> a2 = *ctx.alpha;
        for (auto& v : a2) v *= 2;
        DiagonalClass g2 = equivariant_diagonal(b, GrContext::with_alpha(a2));
        DiagonalClass d = diagonal(b);
        for (auto& l : b.elements())
            for (auto& m : b.elements()) {
                int deg = b.top_degree() - l.size() - m.size();
                if (deg < 0) {
                    CHECK(g(l, m) == 0);
                    continue;
                }
                CHECK(g2(l, m) == qgr::pow(BigRational(2), static_cast<unsigned>(deg)) * g(l, m));
                if (deg == 0) CHECK(g(l, m) == d(l, m));
            }
    }
    SchurBasis b3(3);
    GrContext c3 = GrContext::generic(3);
    auto g = equivariant_diagonal(b3, c3);
    CHECK(restrict_diagonal(g, 0, 1, 0, 1, c3) == (c3.value(0) - c3.value(2)) * (c3.value(1) - c3.value(2)));
    CHECK(restrict_diagonal(g, 0, 1, 0, 2, c3) == 0);
}
