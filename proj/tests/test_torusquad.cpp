#include <doctest.h>

#include "jackweight/odeflow.hpp"
#include "jackweight/torusquad.hpp"
#include "jackweight/weightsolve.hpp"
#include "test_helpers.hpp"

using namespace jw;

namespace {

WeightModel model_for(const IrrepData& ir, double kappa) {
    WeightModel m;
    m.irrep = &ir;
    m.kappa = kappa;
    m.H = solve_H(ir, kappa).H;
    return m;
}

QuadratureOptions small_grid(int P) {
    QuadratureOptions q;
    q.P = P;
    q.threads = 1;
    return q;
}

}  // namespace

TEST_CASE("grid nodes") {
    QuadratureGrid g{3, 12, 0.0};
    auto nodes = grid_angles(g);
    CHECK(nodes.size() == 144);
    double minDist = 10;
    for (const auto& th : nodes) {
        CHECK(th[0] == 0.0);
        minDist = std::min(minDist, TorusPoint::from_angles(th).min_distance());
    }
    CHECK(minDist > 0.1);
}

TEST_CASE("Richardson factor") {
    CHECK(richardson_factor(0.25) == doctest::Approx(1 / (std::sqrt(2.0) - 1)));
    CHECK(richardson_factor(-0.25) == richardson_factor(0.25));
    CHECK(richardson_factor(0.0) == doctest::Approx(1.0));
}

TEST_CASE("zero-sum exponents match brute force") {
    for (int N : {3, 4})
        for (int m : {1, 2}) {
            std::size_t count = 0;
            std::vector<int> a(N, -m);
            while (true) {
                int sum = 0;
                for (int v : a) sum += v;
                count += sum == 0;
                int k = 0;
                while (k < N && a[k] == m) a[k++] = -m;
                if (k == N) break;
                ++a[k];
            }
            auto got = zero_sum_exponents(N, m);
            CHECK(got.size() == count);
            for (const auto& e : got) {
                int sum = 0;
                for (int v : e) {
                    sum += v;
                    CHECK(std::abs(v) <= m);
                }
                CHECK(sum == 0);
            }
        }
}

TEST_CASE("gram labels") {
    IrrepData ir = build_irrep(parse_partition("2,1"));
    auto labels = gram_labels(ir, 2);
    CHECK(labels.size() == (1 + 3 + 6) * 2);
    CHECK(labels[0].str() == "(0,0,0)T0");
}

TEST_CASE("at kappa = 0 the pairing is the monomial inner product") {
    IrrepData ir = build_irrep(parse_partition("3,1"));
    WeightModel m{&ir, 0.0, CMat::Identity(ir.nTau, ir.nTau)};
    QuadratureOptions q = small_grid(6);
    std::vector<Exponent> exps{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {1, -1, 0, 0}, {-1, 0, 0, 2}};
    for (size_t a = 0; a < exps.size(); ++a)
        for (size_t b = 0; b < exps.size(); ++b)
            for (int t = 0; t < ir.nTau; ++t)
                for (int s = 0; s < ir.nTau; ++s) {
                    auto f = LaurentVPoly::basis_monomial(exps[a], ir.nTau, t);
                    auto g = LaurentVPoly::basis_monomial(exps[b], ir.nTau, s);
                    double want = (a == b && t == s) ? ir.weights[t] : 0.0;
                    CHECK(std::abs(pairing(m, f, g, q).value - want) < 1e-12);
                }
}

TEST_CASE("grid L is independent of the thread count") {
    IrrepData ir = build_irrep(parse_partition("2,1"));
    QuadratureGrid g{3, 10, 0.0};
    FlowOptions fo;
    clear_grid_cache();
    auto a = grid_L(ir, 0.2, g, fo, 1);
    clear_grid_cache();
    auto b = grid_L(ir, 0.2, g, fo, 3);
    REQUIRE(a->size() == b->size());
    for (size_t k = 0; k < a->size(); ++k) CHECK(((*a)[k] - (*b)[k]).norm() == 0.0);
    CHECK(grid_L(ir, 0.2, g, fo, 2) == b);
}

TEST_CASE("orthogonality, adjointness and isometry on a moderate grid") {
    IrrepData ir = build_irrep(parse_partition("2,1"));
    WeightModel m = model_for(ir, 0.05);
    QuadratureOptions q = small_grid(48);
    q.threads = 0;
    auto labels = gram_labels(ir, 1);
    GramReport g = gram_matrix(m, labels, q);
    CHECK(g.offDiagMax < 1e-2);
    for (int t = 0; t < ir.nTau; ++t)
        CHECK(g.diagonal[t] / g.diagonal[0] == doctest::Approx(ir.weights[t] / ir.weights[0]).epsilon(1e-2));
    LaurentVPoly f = LaurentVPoly::basis_monomial({1, 0, 0}, 2, 0) + LaurentVPoly::basis_monomial({0, 1, 0}, 2, 1);
    LaurentVPoly h = LaurentVPoly::basis_monomial({0, 0, 1}, 2, 0) + LaurentVPoly::basis_monomial({1, 0, 0}, 2, 1);
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(adjointness_residual(m, i, f, h, q).value) < 1e-2);
        CHECK(std::abs(isometry_residual(m, i, f, h, q).value) < 1e-12);
    }
}

TEST_CASE("recurrence terms annihilate the constant solution exactly") {
    for (int N : {3, 4})
        for (const auto& a : zero_sum_exponents(N, 2))
            for (int i = 0; i < N; ++i) {
                std::vector<double> groups(2 * N + 1, 0.0);
                for (const auto& t : fcrec_terms(N, 1.0, a, i)) groups[t.side == 0 ? 2 * N : t.j] += t.coefficient;
                for (double v : groups) CHECK(v == 0.0);
            }
}

TEST_CASE("recurrence residual vanishes when every coefficient is the identity") {
    IrrepData ir = build_irrep(parse_partition("2,1"));
    std::map<Exponent, CMat> khat;
    for (const auto& a : zero_sum_exponents(3, 4)) khat[a] = CMat::Identity(2, 2);
    for (const auto& a : zero_sum_exponents(3, 2))
        for (int i = 0; i < 3; ++i) CHECK(fcrec_residual_plain(ir, 0.3, khat, a, i) < 1e-15);
}

TEST_CASE("Fourier coefficients at kappa = 0") {
    IrrepData ir = build_irrep(parse_partition("2,1"));
    WeightModel m{&ir, 0.0, CMat::Identity(2, 2)};
    auto kh = fourier_K(m, zero_sum_exponents(3, 1), small_grid(8));
    for (const auto& [a, est] : kh) {
        bool zero = a == Exponent{0, 0, 0};
        CHECK((est.value - (zero ? CMat(CMat::Identity(2, 2)) : CMat(CMat::Zero(2, 2)))).norm() < 1e-12);
    }
}
