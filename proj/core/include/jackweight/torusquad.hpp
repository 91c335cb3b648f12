#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "jackweight/common.hpp"
#include "jackweight/integrator.hpp"
#include "jackweight/jackpoly.hpp"
#include "jackweight/symgroup.hpp"

namespace jw {

// theta_1 = 0 and theta_k = (m_k + (k-1)/N) 2pi/P, m_k = 0..P-1, for k >= 2.
// The fractional offsets keep every node off the diagonals.
struct QuadratureGrid {
    int N = 3;
    int P = 48;
    double exclusionMargin = 0.0;  // nodes with min |x_i - x_j| < margin get weight 0
};

std::vector<std::vector<double>> grid_angles(const QuadratureGrid& grid);

struct QuadratureOptions {
    int P = 48;                 // coarse grid; the fine grid uses 2P
    bool extrapolate = true;    // Richardson step with exponent 1 - 2|kappa|
    double exclusionMargin = 0.0;
    FlowOptions flow = [] {
        FlowOptions f;
        f.tol = 1e-10;
        return f;
    }();
    int threads = 0;
};

// Orthonormal-basis L at every node, memoized per (tau, kappa, grid, flow tolerance).
std::shared_ptr<const std::vector<CMat>> grid_L(const IrrepData& irrep, double kappa, const QuadratureGrid& grid,
                                                const FlowOptions& flow, int threads);
void clear_grid_cache();

struct WeightModel {
    const IrrepData* irrep = nullptr;
    double kappa = 0.0;
    CMat H;
};

// Coarse (P), fine (2P), combined value and error estimate.
struct ScalarEstimate {
    cplx coarse, fine, value;
    double error = 0.0;
};

struct MatrixEstimate {
    CMat coarse, fine, value;
    double error = 0.0;  // Frobenius norm
};

double richardson_factor(double kappa);  // 1/(2^p - 1), p = 1 - 2|kappa|

// <f,g> on a single grid; f, g carry RSYT-basis coefficients.
cplx pairing_on_grid(const WeightModel& model, const LaurentVPoly& f, const LaurentVPoly& g, const QuadratureGrid& grid,
                     const QuadratureOptions& opts);
ScalarEstimate pairing(const WeightModel& model, const LaurentVPoly& f, const LaurentVPoly& g,
                       const QuadratureOptions& opts);

// Scale c with c <1 (x) T_0, 1 (x) T_0> = <T_0,T_0>_0 on the fine grid.
double gram_normalization(const WeightModel& model, const QuadratureOptions& opts);

struct GramLabel {
    Exponent alpha;
    int tableau = 0;
    std::string str() const;
};

struct GramReport {
    std::vector<GramLabel> labels;
    CMat matrix;           // combined
    CMat coarse, fine;
    RMat errorEstimate;    // entrywise |combined - fine| bound
    double offDiagMax = 0.0;  // max |G_ab| / sqrt(G_aa G_bb), a != b
    std::vector<double> diagonal;
};

// Labels: alpha in N_0^N with |alpha| <= degreeCap, all tableaux.
std::vector<GramLabel> gram_labels(const IrrepData& irrep, int degreeCap);
GramReport gram_matrix(const WeightModel& model, const std::vector<GramLabel>& labels, const QuadratureOptions& opts);
GramReport gram_matrix_of(const WeightModel& model, const std::vector<GramLabel>& labels,
                          const std::vector<LaurentVPoly>& polys, const QuadratureOptions& opts);

// |<x_i D_i f, g> - <f, x_i D_i g>| / max(|<f,f>|, |<g,g>|), i 0-based.
ScalarEstimate adjointness_residual(const WeightModel& model, int i, const LaurentVPoly& f, const LaurentVPoly& g,
                                    const QuadratureOptions& opts);
// |<x_i f, x_i g> - <f, g>| / max(|<f,f>|, |<g,g>|)
ScalarEstimate isometry_residual(const WeightModel& model, int i, const LaurentVPoly& f, const LaurentVPoly& g,
                                 const QuadratureOptions& opts);

// Khat_alpha = int K(x) x^{-alpha} dm for alpha in Z_N (orthonormal basis).
std::map<Exponent, MatrixEstimate> fourier_K(const WeightModel& model, const std::vector<Exponent>& alphas,
                                             const QuadratureOptions& opts);
std::vector<Exponent> zero_sum_exponents(int N, int maxAbs);  // alpha in Z_N, max |alpha_j| <= maxAbs

struct FcrecTerm {
    double coefficient = 0.0;
    Exponent index;
    int side = 0;  // 0: plain, -1: tau((i,j)) Khat, +1: Khat tau((i,j))
    int j = -1;
};

// LHS - RHS of the recurrence as a list of terms, i 0-based.
std::vector<FcrecTerm> fcrec_terms(int N, double kappa, const Exponent& alpha, int i);

struct FcrecResult {
    double residual = 0.0;       // ||LHS - RHS|| / max ||Khat||
    double errorEstimate = 0.0;  // same combination applied to the Khat error estimates
    double scale = 0.0;
};

FcrecResult fcrec_residual(const IrrepData& irrep, double kappa, const std::map<Exponent, MatrixEstimate>& khat,
                           const Exponent& alpha, int i);
// Plain coefficients (no error data).
double fcrec_residual_plain(const IrrepData& irrep, double kappa, const std::map<Exponent, CMat>& khat,
                            const Exponent& alpha, int i);

}  // namespace jw
