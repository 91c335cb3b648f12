#include "jackweight/localseries.hpp"

#include <algorithm>
#include <cmath>

namespace jw {

std::vector<cplx> FaceChart::xs() const {
    std::vector<cplx> out;
    for (const auto& l : logx) out.push_back(std::exp(l));
    return out;
}

double FaceChart::delta0() const {
    double d = 1e300;
    cplx uu = u();
    for (const auto& x : xs()) d = std::min(d, std::abs(uu - x));
    return d;
}

FaceChart base_chart(int N) {
    FaceChart c;
    for (int j = 0; j < N - 2; ++j) c.logx.emplace_back(0.0, 2 * kPi * j / N);
    c.logu = cplx(0.0, (2 * N - 3) * kPi / N);
    return c;
}

ChartPoint chart_point(const std::vector<double>& lift) {
    const int N = static_cast<int>(lift.size());
    double gap = lift[N - 1] - lift[N - 2];
    if (!(gap > 0 && gap < kPi)) throw OutsideRadius("chart_point: face gap must lie in (0, pi)");
    ChartPoint p;
    for (int j = 0; j < N - 2; ++j) p.chart.logx.emplace_back(0.0, lift[j]);
    p.chart.logu = cplx(std::log(std::cos(gap / 2)), (lift[N - 2] + lift[N - 1]) / 2);
    p.z = p.chart.u() * cplx(0.0, std::tan(gap / 2));
    return p;
}

ChartPoint x0_chart_point(int N) {
    std::vector<double> lift(N);
    for (int j = 0; j < N; ++j) lift[j] = 2 * kPi * j / N;
    return chart_point(lift);
}

std::vector<CMat> beta_stream(const IrrepData& irrep, const FaceChart& chart, int nmax) {
    const int N = irrep.N();
    const int n = irrep.nTau;
    std::vector<CMat> beta(nmax + 1, CMat::Zero(n, n));
    cplx u = chart.u();
    auto xs = chart.xs();
    for (int j = 0; j < N - 2; ++j) {
        cplx inv = 1.0 / (u - xs[j]);
        cplx pw = inv;
        CMat t = irrep.transposition(j, N - 1).cast<cplx>();
        for (int k = 0; k <= nmax; ++k) {
            beta[k] += pw * t;
            pw *= inv;
        }
    }
    return beta;
}

CMat B_from_beta(const IrrepData& irrep, const CMat& beta, int n) {
    CMat s = irrep.sigma.cast<cplx>();
    CMat conj = s * beta * s;
    return (n % 2 == 0 ? beta : CMat(-beta)) - conj;
}

void check_kappa_not_half_integer(double kappa) {
    double twice = 2 * kappa;
    double r = std::round(twice);
    if (std::abs(twice - r) < 1e-12 && static_cast<long long>(r) % 2 != 0)
        throw HalfIntegerKappa("kappa in Z+1/2 is the logarithmic case and is not supported");
}

Alpha0Result alpha0_solve(const IrrepData& irrep, double kappa, const FaceChart& chart, const FlowOptions& opts) {
    const int N = irrep.N();
    const int n = irrep.nTau;
    FaceChart base = base_chart(N);
    std::vector<cplx> from = base.logx, to = chart.logx;
    from.push_back(base.logu);
    to.push_back(chart.logu);

    std::vector<CMat> tauInner;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < N - 2; ++i)
        for (int j = i + 1; j < N - 2; ++j) {
            pairs.emplace_back(i, j);
            tauInner.push_back(irrep.transposition(i, j).cast<cplx>());
        }
    std::vector<CMat> tauFace;
    for (int j = 0; j < N - 2; ++j)
        tauFace.push_back((irrep.transposition(j, N - 2) + irrep.transposition(j, N - 1)).cast<cplx>());

    std::vector<cplx> x(N - 1), dx(N - 1);
    Generator G = [&](double t, CMat& g) {
        for (int j = 0; j < N - 1; ++j) {
            cplx dz = to[j] - from[j];
            x[j] = std::exp(from[j] + t * dz);
            dx[j] = dz * x[j];
        }
        const cplx u = x[N - 2], du = dx[N - 2];
        g.setZero(n, n);
        for (size_t k = 0; k < pairs.size(); ++k) {
            auto [i, j] = pairs[k];
            cplx d = x[j] - x[i];
            if (std::abs(d) < opts.singularFloor) throw PathCollision("alpha0 path: x_i meets x_j");
            g += ((dx[j] - dx[i]) / d) * tauInner[k];
        }
        for (int j = 0; j < N - 2; ++j) {
            cplx d = u - x[j];
            if (std::abs(d) < opts.singularFloor) throw PathCollision("alpha0 path: u meets x_j");
            g += ((du - dx[j]) / d) * tauFace[j];
        }
        g *= kappa;
    };
    FlowResult fr = integrate_matrix_ode(G, CMat::Identity(n, n), Side::Right, opts);
    Alpha0Result res;
    res.alpha0 = fr.value;
    res.steps = fr.stepCount;
    CMat s = irrep.sigma.cast<cplx>();
    res.sigmaResidual = (s * res.alpha0 * s - res.alpha0).norm() / res.alpha0.norm();
    return res;
}

namespace {

void scale_rows(CMat& a, int m, cplx top, cplx bottom) {
    a.topRows(m) *= top;
    a.bottomRows(a.rows() - m) *= bottom;
}

}  // namespace

void extend_series(const IrrepData& irrep, SeriesExpansion& s, int M) {
    const int n = irrep.nTau;
    const int m = irrep.mTau;
    const double kappa = s.kappa;
    if (M <= s.M()) return;
    auto beta = beta_stream(irrep, s.chart, M);
    s.B.clear();
    for (int k = 0; k <= M; ++k) s.B.push_back(B_from_beta(irrep, beta[k], k));
    for (int k = s.M() + 1; k <= M; ++k) {
        CMat S = CMat::Zero(n, n);
        for (int i = 0; i < k; ++i) S.noalias() += s.alphas[k - 1 - i] * s.B[i];
        if (k % 2 == 0) {
            S *= kappa / k;
        } else {
            scale_rows(S, m, kappa / (k - 2 * kappa), kappa / (k + 2 * kappa));
        }
        s.alphas.push_back(S);
    }
}

SeriesExpansion alpha_recurrence(const IrrepData& irrep, double kappa, const FaceChart& chart, const CMat& alpha0,
                                 int M) {
    check_kappa_not_half_integer(kappa);
    SeriesExpansion s;
    s.chart = chart;
    s.kappa = kappa;
    // sigma-block part of alpha0
    CMat sig = irrep.sigma.cast<cplx>();
    CMat a0 = 0.5 * (alpha0 + sig * alpha0 * sig);
    s.alphas.push_back(a0);
    Eigen::JacobiSVD<CMat> svd(a0);
    s.alpha0Norm = svd.singularValues()[0];
    extend_series(irrep, s, std::max(M, 1));
    return s;
}

std::vector<double> coefficient_bounds(int N, double kappa, double alpha0Norm, double delta0, int M) {
    const double k0 = std::abs(kappa);
    const double lam = (N - 2) * k0;
    std::vector<double> t(M + 1);
    t[0] = alpha0Norm;
    for (int k = 1; k <= M; ++k) {
        double f = (k % 2 == 1) ? (2 * lam + k - 1) / (k - 2 * k0) : (2 * lam + k - 1 - 2 * k0) / k;
        t[k] = f * t[k - 1] / delta0;
    }
    return t;
}

double tail_bound(int N, double kappa, double alpha0Norm, double delta0, double r, int M) {
    if (r >= delta0) return std::numeric_limits<double>::infinity();
    const double k0 = std::abs(kappa);
    const double lam = (N - 2) * k0;
    double term = alpha0Norm;  // t_k r^k
    double sum = 0.0;
    const double limitRatio = r / delta0;
    for (int k = 1; k < 200000; ++k) {
        double f = (k % 2 == 1) ? (2 * lam + k - 1) / (k - 2 * k0) : (2 * lam + k - 1 - 2 * k0) / k;
        double q = f * r / delta0;
        term *= q;
        if (k > M) {
            sum += term;
            if (k > M + 4 && q < 1.0) {
                double qmax = std::max(q, limitRatio);
                if (term * qmax / (1 - qmax) < 1e-3 * std::max(sum, 1e-300) || term < 1e-300)
                    return sum + term * qmax / (1 - qmax);
            }
        }
        if (term == 0.0) return sum;
    }
    return std::numeric_limits<double>::infinity();
}

L1Value eval_L1(const IrrepData& irrep, const SeriesExpansion& series, cplx z, const SeriesEvalOptions& opts) {
    const FaceChart& ch = series.chart;
    const int N = irrep.N();
    const int m = irrep.mTau;
    const double kappa = series.kappa;
    cplx u = ch.u();
    cplx w = z / u;
    if (!(w.imag() > 0)) throw OutsideRadius("eval_L1: requires Im(z/u) > 0");
    double d0 = ch.delta0();
    if (std::abs(z) > opts.maxRatio * d0) throw OutsideRadius("eval_L1: |z| exceeds the evaluation radius");

    int M = series.M();
    double tail = tail_bound(N, kappa, series.alpha0Norm, d0, std::abs(z), M);
    while (tail > opts.tailTol && M < opts.maxTerms) {
        M = std::min(opts.maxTerms, M + 8);
        tail = tail_bound(N, kappa, series.alpha0Norm, d0, std::abs(z), M);
    }
    const SeriesExpansion* use = &series;
    SeriesExpansion extended;
    if (M > series.M()) {
        extended = series;
        extend_series(irrep, extended, M);
        use = &extended;
    }

    CMat S = use->alphas[M];
    for (int k = M - 1; k >= 0; --k) S = (S * z + use->alphas[k]).eval();

    cplx sumLogX = 0.0;
    for (const auto& l : ch.logx) sumLogX += l;
    cplx logPre = -irrep.gamma * kappa * (sumLogX + 2.0 * ch.logu + std::log(1.0 - w) + std::log(1.0 + w));
    cplx logz = ch.logu + std::log(w);
    cplx pre = std::exp(logPre);
    cplx top = std::exp(-kappa * logz), bottom = std::exp(kappa * logz);
    scale_rows(S, m, pre * top, pre * bottom);

    L1Value out;
    out.value = S;
    out.termsUsed = M + 1;
    out.tailBound = tail * std::abs(pre) * std::max(std::abs(top), std::abs(bottom));
    return out;
}

SeriesExpansion build_series(const IrrepData& irrep, double kappa, const FaceChart& chart, int M,
                             const FlowOptions& opts) {
    check_kappa_not_half_integer(kappa);
    Alpha0Result a0 = alpha0_solve(irrep, kappa, chart, opts);
    return alpha_recurrence(irrep, kappa, chart, a0.alpha0, M);
}

L1Value L1_at_lift(const IrrepData& irrep, double kappa, const std::vector<double>& lift,
                   const SeriesEvalOptions& evalOpts, const FlowOptions& flowOpts) {
    ChartPoint cp = chart_point(lift);
    SeriesExpansion s = build_series(irrep, kappa, cp.chart, 24, flowOpts);
    return eval_L1(irrep, s, cp.z, evalOpts);
}

CMat matching_constant(const IrrepData& irrep, double kappa, double tailTol, const FlowOptions& opts) {
    ChartPoint cp = x0_chart_point(irrep.N());
    SeriesExpansion s = build_series(irrep, kappa, cp.chart, 24, opts);
    SeriesEvalOptions eo;
    eo.maxRatio = 1.0;
    eo.tailTol = tailTol;
    eo.maxTerms = 2000;
    L1Value v = eval_L1(irrep, s, cp.z, eo);
    if (v.tailBound > 100 * tailTol) throw OutsideRadius("matching_constant: tail bound not met");
    return v.value;
}

}  // namespace jw
