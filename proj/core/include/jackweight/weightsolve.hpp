#pragma once

#include <vector>

#include "jackweight/common.hpp"
#include "jackweight/integrator.hpp"
#include "jackweight/odeflow.hpp"
#include "jackweight/symgroup.hpp"

namespace jw {

// (2(N^2-N+2))^{-1}
double b_N(int N);

// Unknowns: entries of the two diagonal sigma-blocks of B1, block 1 then block 2, row-major.
// Rows: V_a^* (C^* B1 C) V_b = 0 for eigenspaces a != b of upsilon, C = L1(x0).
struct CommutationSystem {
    CMat matrixM;
    int unknowns = 0;
    int equations = 0;
};

CommutationSystem build_system(const IrrepData& irrep, const CMat& L1x0);
// Orthonormal bases of the eigenspaces of upsilon for omega^j, j = 0..N-1.
std::vector<CMat> upsilon_eigenbases(const IrrepData& irrep);
CMat unpack_B1(const IrrepData& irrep, const CVec& v);

struct SolveOptions {
    FlowOptions flow;
    double tailTol = 1e-12;
    double minGap = 1e4;
};

struct WeightSolveResult {
    double kappa = 0.0;
    CMat L1x0;
    CMat B1;
    CMat H;
    RVec singularValues;  // padded with zeros to the number of unknowns, descending
    double gap = 0.0;     // s_{n-2} / s_{n-1}
    std::vector<double> eigenvaluesH;
    bool positive = false;
    bool insideWindow = false;  // |kappa| < 1/h_tau
    double hermitianResidual = 0.0;
    double upsilonResidual = 0.0;
    double sigmaResidual = 0.0;
    double normalization = 1.0;
};

WeightSolveResult solve_H_from(const IrrepData& irrep, double kappa, const CMat& L1x0, double minGap = 1e4);
WeightSolveResult solve_H(const IrrepData& irrep, double kappa, const SolveOptions& opts = {});

CMat weight_from_L(const CMat& L, const CMat& H);  // L^* H L
CMat weight_K(const IrrepData& irrep, double kappa, const CMat& H, const TorusPoint& x, const FlowOptions& opts = {});

struct FaceReport {
    // H1 = L1(x0)^{-*} H L1(x0)^{-1}, H2 = upsilon^{-1} H1 upsilon, L1(x0) from the matching constant
    double sigmaResidualDirect = 0.0;
    double tauResidualDirect = 0.0;
    // L1(x0) = L1(x') L(x')^{-1} and L2(x0) = L2(x'') L(x'')^{-1} from charts at points near each face
    double sigmaResidual = 0.0;
    double tauResidual = 0.0;
    double overlapResidual = 0.0;  // ||L1(x0) - L1(x0)_independent|| / ||L1(x0)||
};

FaceReport face_commutation_check(const IrrepData& irrep, const WeightSolveResult& res,
                                  const FlowOptions& opts = {});

struct BoundaryProfile {
    std::vector<double> absZ;
    std::vector<double> jump;  // ||K(x(u,z)) - K(x(u,-z))||
    double slope = 0.0;        // least-squares log-log slope
};

// Points x(u,z) on the torus near x_{N-1} = x_N with the other angles and arg u taken from x0.
BoundaryProfile boundary_profile(const IrrepData& irrep, double kappa, const CMat& H, const std::vector<double>& absZ,
                                 const FlowOptions& opts = {});

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace jw
