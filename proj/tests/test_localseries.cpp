#include <doctest.h>

#include "jackweight/localseries.hpp"
#include "jackweight/odeflow.hpp"
#include "test_helpers.hpp"

using namespace jw;

namespace {

// Lift in C0 whose last gap is small enough for the chart centre to be well separated.
std::vector<double> near_face_lift(int N, double lastGap) {
    auto lift = x0_lift(N);
    double mid = 0.5 * (lift[N - 2] + lift[N - 1]);
    lift[N - 2] = mid - lastGap / 2;
    lift[N - 1] = mid + lastGap / 2;
    for (int k = 0; k < N - 2; ++k) lift[k] += jwtest::uniform(-0.1, 0.1);
    return lift;
}

double spectral_norm(const CMat& m) {
    Eigen::JacobiSVD<CMat> svd(m);
    return svd.singularValues()[0];
}

}  // namespace

TEST_CASE("chart coordinates reproduce the point") {
    for (int N : {3, 4, 5}) {
        auto lift = near_face_lift(N, 0.3);
        ChartPoint cp = chart_point(lift);
        auto xs = cp.chart.xs();
        REQUIRE(static_cast<int>(xs.size()) == N - 2);
        for (int k = 0; k < N - 2; ++k) CHECK(std::abs(xs[k] - std::polar(1.0, lift[k])) < 1e-14);
        CHECK(std::abs(cp.chart.u() - cp.z - std::polar(1.0, lift[N - 2])) < 1e-14);
        CHECK(std::abs(cp.chart.u() + cp.z - std::polar(1.0, lift[N - 1])) < 1e-14);
        CHECK((cp.z / cp.chart.u()).imag() > 0);
    }
}

TEST_CASE("kappa in Z + 1/2 is rejected") {
    CHECK_THROWS_AS(check_kappa_not_half_integer(0.5), HalfIntegerKappa);
    CHECK_THROWS_AS(check_kappa_not_half_integer(-1.5), HalfIntegerKappa);
    CHECK_NOTHROW(check_kappa_not_half_integer(0.25));
}

TEST_CASE("series coefficients: parity, first step and bounds") {
    for (const char* s : {"2,1", "3,1", "2,1,1"}) {
        IrrepData ir = build_irrep(parse_partition(s));
        const int N = ir.N();
        for (double k : {0.1, -0.25, 0.4}) {
            ChartPoint cp = chart_point(near_face_lift(N, 0.5));
            SeriesExpansion se = build_series(ir, k, cp.chart, 30);
            CMat sig = ir.sigma.cast<cplx>();
            for (int n = 0; n <= se.M(); ++n) {
                double sign = n % 2 == 0 ? 1.0 : -1.0;
                CHECK((sig * se.alphas[n] * sig - sign * se.alphas[n]).cwiseAbs().maxCoeff() == 0.0);
            }
            CMat B0 = B_from_beta(ir, beta_stream(ir, cp.chart, 0)[0], 0);
            CMat a1 = se.alphas[0] * B0;
            a1.topRows(ir.mTau) *= k / (1 - 2 * k);
            a1.bottomRows(ir.nTau - ir.mTau) *= k / (1 + 2 * k);
            CHECK((a1 - se.alphas[1]).norm() < 1e-12 * (1 + a1.norm()));
            auto t = coefficient_bounds(N, k, se.alpha0Norm, cp.chart.delta0(), se.M());
            for (int n = 0; n <= se.M(); ++n) CHECK(spectral_norm(se.alphas[n]) <= t[n] * (1 + 1e-12));
        }
    }
}

TEST_CASE("tail bound decreases with the truncation order") {
    double prev = tail_bound(4, 0.2, 1.0, 1.0, 0.25, 8);
    for (int M = 16; M <= 64; M += 8) {
        double t = tail_bound(4, 0.2, 1.0, 1.0, 0.25, M);
        CHECK(t < prev);
        prev = t;
    }
    CHECK(prev < 1e-12);
}

TEST_CASE("series value matches the continued flow") {
    for (const char* s : {"2,1", "3,1", "2,2"}) {
        IrrepData ir = build_irrep(parse_partition(s));
        const int N = ir.N();
        for (double k : {0.1, 0.25, -0.25}) {
            CMat C = matching_constant(ir, k);
            for (double gap : {0.05, 0.4}) {
                auto lift = near_face_lift(N, gap);
                SeriesEvalOptions eo;
                eo.maxRatio = 1.0;
                eo.maxTerms = 2000;
                CMat L1 = L1_at_lift(ir, k, lift, eo).value;
                CMat L = flow_L_lift(ir, k, lift).value;
                CHECK((L1 - C * L).norm() < 1e-8 * L1.norm());
            }
        }
    }
}

TEST_CASE("evaluation outside the admissible region throws") {
    IrrepData ir = build_irrep(parse_partition("2,1"));
    ChartPoint cp = x0_chart_point(3);
    SeriesExpansion se = build_series(ir, 0.1, cp.chart, 10);
    CHECK_THROWS_AS(eval_L1(ir, se, -cp.z), OutsideRadius);
    CHECK_THROWS_AS(eval_L1(ir, se, cp.z * 100.0), OutsideRadius);
}
