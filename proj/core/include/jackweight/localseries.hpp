#pragma once

#include <vector>

#include "jackweight/common.hpp"
#include "jackweight/integrator.hpp"
#include "jackweight/symgroup.hpp"

namespace jw {

// Base x(u,0) = (x_1..x_{N-2}, u, u) of the face chart near x_{N-1} = x_N.
// Logarithms are lifted: powers in L1 are continued along the straight log path from the base point.
struct FaceChart {
    std::vector<cplx> logx;  // N-2 entries
    cplx logu;

    int N() const { return static_cast<int>(logx.size()) + 2; }
    std::vector<cplx> xs() const;
    cplx u() const { return std::exp(logu); }
    double delta0() const;  // min_j |u - x_j|
};

// x^(0) = (1, w, ..., w^{N-3}, w^{-3/2}, w^{-3/2}) with arg u = (2N-3) pi / N.
FaceChart base_chart(int N);

struct ChartPoint {
    FaceChart chart;
    cplx z;
};

// Chart coordinates of a lifted point of C0: u = (x_{N-1}+x_N)/2, z = (x_N - x_{N-1})/2.
ChartPoint chart_point(const std::vector<double>& lift);
ChartPoint x0_chart_point(int N);

// beta_n = sum_{j<=N-2} tau((j,N)) / (u - x_j)^{n+1}, n = 0..nmax (orthonormal basis).
std::vector<CMat> beta_stream(const IrrepData& irrep, const FaceChart& chart, int nmax);
// B_n = (-1)^n beta_n - sigma beta_n sigma.
CMat B_from_beta(const IrrepData& irrep, const CMat& beta, int n);

struct Alpha0Result {
    CMat alpha0;
    double sigmaResidual = 0.0;  // ||sigma a0 sigma - a0|| / ||a0||
    long steps = 0;
};
Alpha0Result alpha0_solve(const IrrepData& irrep, double kappa, const FaceChart& chart,
                          const FlowOptions& opts = {});

struct SeriesExpansion {
    FaceChart chart;
    double kappa = 0.0;
    std::vector<CMat> alphas;
    std::vector<CMat> B;
    double alpha0Norm = 0.0;

    int M() const { return static_cast<int>(alphas.size()) - 1; }
};

SeriesExpansion alpha_recurrence(const IrrepData& irrep, double kappa, const FaceChart& chart, const CMat& alpha0,
                                 int M);
void extend_series(const IrrepData& irrep, SeriesExpansion& s, int M);

// t_0..t_M with ||alpha_n|| <= t_n; kappa0 = |kappa|, lambda = (N-2) kappa0.
std::vector<double> coefficient_bounds(int N, double kappa, double alpha0Norm, double delta0, int M);
// sum_{n > M} t_n r^n
double tail_bound(int N, double kappa, double alpha0Norm, double delta0, double r, int M);

struct SeriesEvalOptions {
    double maxRatio = 0.25;  // |z| <= maxRatio * delta0
    double tailTol = 1e-10;
    int maxTerms = 600;
};

struct L1Value {
    CMat value;
    double tailBound = 0.0;
    int termsUsed = 0;
};

L1Value eval_L1(const IrrepData& irrep, const SeriesExpansion& series, cplx z, const SeriesEvalOptions& opts = {});

SeriesExpansion build_series(const IrrepData& irrep, double kappa, const FaceChart& chart, int M = 24,
                             const FlowOptions& opts = {});

// L1 at a lifted point of C0 via its own chart.
L1Value L1_at_lift(const IrrepData& irrep, double kappa, const std::vector<double>& lift,
                   const SeriesEvalOptions& evalOpts = {}, const FlowOptions& flowOpts = {});

// L1(x0).
CMat matching_constant(const IrrepData& irrep, double kappa, double tailTol = 1e-12,
                       const FlowOptions& opts = {});

void check_kappa_not_half_integer(double kappa);

}  // namespace jw
