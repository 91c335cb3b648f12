#include <doctest.h>

#include "jackweight/jackpoly.hpp"
#include "test_helpers.hpp"

using namespace jw;

namespace {

LaurentVPoly random_poly(const IrrepData& ir, int degree) {
    LaurentVPoly p(ir.N(), ir.nTau);
    for (const auto& a : homogeneous_exponents(ir.N(), degree)) {
        CVec v(ir.nTau);
        for (int t = 0; t < ir.nTau; ++t) v[t] = cplx(jwtest::uniform(-1, 1), jwtest::uniform(-1, 1));
        p.add(a, v);
    }
    return p;
}

std::vector<cplx> random_point(int N) {
    std::vector<cplx> x;
    for (int i = 0; i < N; ++i) x.push_back(std::polar(jwtest::uniform(0.7, 1.3), jwtest::uniform(-3, 3)));
    return x;
}

// Dunkl operator straight from its definition, evaluated pointwise with a central difference.
CVec dunkl_oracle(const IrrepData& ir, double kappa, int i, const LaurentVPoly& p, std::vector<cplx> x) {
    const double h = 1e-5;
    auto xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    CVec out = (p.eval(xp) - p.eval(xm)) / (2 * h);
    CVec px = p.eval(x);
    for (int j = 0; j < ir.N(); ++j) {
        if (j == i) continue;
        auto xs = x;
        std::swap(xs[i], xs[j]);
        out += kappa * ir.transposition(i, j, Basis::Seminormal).cast<cplx>() * (px - p.eval(xs)) / (x[i] - x[j]);
    }
    return out;
}

double dist(const LaurentVPoly& a, const LaurentVPoly& b) { return (a - b).max_norm(); }

}  // namespace

TEST_CASE("Dunkl operator matches its pointwise definition") {
    for (const char* s : {"2,1", "3,1", "2,2"}) {
        IrrepData ir = build_irrep(parse_partition(s));
        LaurentVPoly p = random_poly(ir, 3);
        for (int i = 0; i < ir.N(); ++i) {
            auto x = random_point(ir.N());
            CVec want = dunkl_oracle(ir, 0.3, i, p, x);
            CVec got = dunkl_apply(ir, 0.3, i, p).eval(x);
            CHECK((got - want).norm() / want.norm() < 1e-8);
        }
    }
}

TEST_CASE("Laurent polynomial arithmetic") {
    IrrepData ir = build_irrep(parse_partition("2,1"));
    LaurentVPoly p = random_poly(ir, 2);
    auto x = random_point(3);
    Exponent b{-1, 2, 0};
    cplx mono = std::pow(x[0], -1) * std::pow(x[1], 2);
    CHECK((times_monomial(p, b).eval(x) - mono * p.eval(x)).norm() < 1e-12);
    cplx en = x[0] * x[1] * x[2];
    CHECK((times_en(p, -2).eval(x) - p.eval(x) / (en * en)).norm() < 1e-12);
    auto xs = x;
    std::swap(xs[0], xs[2]);
    CHECK((swap_variables(p, 0, 2).eval(x) - p.eval(xs)).norm() < 1e-12);
    CVec dd = divided_difference(p, 0, 2).eval(x);
    CHECK((dd - (p.eval(x) - p.eval(xs)) / (x[0] - x[2])).norm() < 1e-11);
    auto parts = p.homogeneous_parts();
    CHECK(parts.size() == 1);
    CHECK(parts.begin()->first == 2);
}

TEST_CASE("group action is a representation on polynomials") {
    IrrepData ir = build_irrep(parse_partition("3,1"));
    LaurentVPoly p = random_poly(ir, 2);
    for (int trial = 0; trial < 10; ++trial) {
        Perm a = jwtest::random_perm(4), b = jwtest::random_perm(4);
        CHECK(dist(act(ir, perm_compose(a, b), p), act(ir, a, act(ir, b, p))) < 1e-12);
    }
}

TEST_CASE("Cherednik-Dunkl operators: commutation and intertwining") {
    for (const char* s : {"2,1", "3,1", "2,1,1"}) {
        IrrepData ir = build_irrep(parse_partition(s));
        const int N = ir.N();
        const double k = 0.17;
        LaurentVPoly p = random_poly(ir, 2);
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j)
                CHECK(dist(cherednik_apply(ir, k, i, cherednik_apply(ir, k, j, p)),
                           cherednik_apply(ir, k, j, cherednik_apply(ir, k, i, p))) < 1e-10);
        for (int i = 0; i + 1 < N; ++i) {
            Perm si = perm_transposition(N, i, i + 1);
            CHECK(dist(act(ir, si, cherednik_apply(ir, k, i, act(ir, si, p))),
                       cherednik_apply(ir, k, i + 1, p) + k * act(ir, si, p)) < 1e-10);
            for (int j = 0; j < N; ++j) {
                if (j == i || j == i + 1) continue;
                CHECK(dist(act(ir, si, cherednik_apply(ir, k, j, p)), cherednik_apply(ir, k, j, act(ir, si, p))) <
                      1e-10);
            }
        }
        // U_i = x_i D_i + 1 + kappa sum_{j > i} (i,j)
        for (int i = 0; i < N; ++i) {
            LaurentVPoly rhs = x_dunkl_apply(ir, k, i, p) + p;
            for (int j = i + 1; j < N; ++j) rhs += k * act(ir, perm_transposition(N, i, j), p);
            CHECK(dist(cherednik_apply(ir, k, i, p), rhs) < 1e-10);
        }
    }
}

TEST_CASE("at kappa = 0 monomials are eigenfunctions with eigenvalue alpha_i + 1") {
    IrrepData ir = build_irrep(parse_partition("2,2"));
    for (const auto& a : homogeneous_exponents(4, 2))
        for (int i = 0; i < 4; ++i) {
            LaurentVPoly m = LaurentVPoly::basis_monomial(a, ir.nTau, 1);
            CHECK(dist(cherednik_apply(ir, 0.0, i, m), cplx(a[i] + 1.0) * m) == 0.0);
        }
}

TEST_CASE("rank function") {
    CHECK(rank_function({3, 1, 1, 0}) == Perm{0, 1, 2, 3});
    CHECK(rank_function({0, 1, 1, 3}) == Perm{3, 1, 2, 0});
    CHECK(rank_function({1, 0, 2}) == Perm{1, 2, 0});
    for (int trial = 0; trial < 50; ++trial) {
        Exponent a(4);
        for (int& v : a) v = static_cast<int>(jwtest::rng()() % 4);
        bool partition = std::is_sorted(a.rbegin(), a.rend());
        CHECK((rank_function(a) == perm_identity(4)) == partition);
        Exponent shifted = a;
        for (int& v : shifted) v += 3;
        CHECK(rank_function(shifted) == rank_function(a));
    }
}

TEST_CASE("spectral vector entries") {
    IrrepData ir = build_irrep(parse_partition("2,1"));
    Exponent a{1, 0, 2};
    Perm r = rank_function(a);
    for (int t = 0; t < ir.nTau; ++t) {
        auto xi = spectral_vector(ir, 0.25, a, t);
        for (int i = 0; i < 3; ++i) CHECK(xi[i] == a[i] + 1 + 0.25 * ir.basis[t].content[r[i]]);
    }
}

TEST_CASE("NSJPs are joint eigenfunctions with the expected leading term") {
    for (const char* s : {"2,1", "3,1", "2,2"}) {
        IrrepData ir = build_irrep(parse_partition(s));
        const int N = ir.N();
        const double k = 0.21;
        for (int d = 0; d <= 2; ++d)
            for (const auto& a : homogeneous_exponents(N, d))
                for (int t = 0; t < ir.nTau; ++t) {
                    LaurentVPoly z = nsjp(ir, k, a, t);
                    CHECK(max_eigen_residual(ir, k, z, spectral_vector(ir, k, a, t)) < 1e-10);
                    RVec lead = rep_matrix(ir, perm_inverse(rank_function(a))).col(t);
                    CHECK((z.coefficient(a) - lead.cast<cplx>()).norm() < 1e-9);
                    for (const auto& [b, v] : z.terms) CHECK(total_degree(b) == d);
                }
    }
}

TEST_CASE("NSJP Laurent shift and errors") {
    IrrepData ir = build_irrep(parse_partition("2,1"));
    LaurentVPoly z = nsjp(ir, 0.1, {1, 0, 2}, 1);
    LaurentVPoly zs = nsjp(ir, 0.1, {0, -1, 1}, 1);
    CHECK(dist(zs, times_en(z, -1)) < 1e-10);
    CHECK_THROWS_AS(nsjp(ir, 0.1, {5, 0, 0}, 0), DegreeCapExceeded);
    CHECK_THROWS_AS(nsjp(ir, 0.0, {1, 0, 0}, 0), SpectralCollision);
    CHECK_THROWS_AS(nsjp(ir, 0.1, {1, 0}, 0), Error);
}
