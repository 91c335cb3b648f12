#pragma once

#include <vector>

#include "jackweight/common.hpp"
#include "jackweight/integrator.hpp"
#include "jackweight/symgroup.hpp"

namespace jw {

// Point of the torus in angle coordinates, angles wrapped to (-pi, pi].
struct TorusPoint {
    std::vector<double> theta;

    static TorusPoint from_angles(const std::vector<double>& angles);
    int N() const { return static_cast<int>(theta.size()); }
    std::vector<cplx> x() const;
    double min_distance() const;  // min_{i<j} |x_i - x_j|
};

double wrap_angle(double a);  // into (-pi, pi]

TorusPoint x0_point(int N);
std::vector<double> x0_lift(int N);  // (0, 2pi/N, ..., 2pi(N-1)/N)

bool in_C0(const TorusPoint& x);
// Lift with theta_1 in (-pi, pi] and theta_1 < ... < theta_N < theta_1 + 2pi; throws if x is not in C0.
std::vector<double> c0_lift(const TorusPoint& x);
Perm chamber_perm(const TorusPoint& x);                      // w_x
TorusPoint act_point(const TorusPoint& x, const Perm& w);    // x w, (xw)_i = x_{w(i)}
TorusPoint rotate(const TorusPoint& x, double phi);          // e^{i phi} x

// Straight line in log coordinates, x_j(t) = exp((1-t) from_j + t to_j).
struct LogPath {
    std::vector<cplx> from;
    std::vector<cplx> to;
};
LogPath angle_path(const std::vector<double>& fromTheta, const std::vector<double>& toTheta);

// A_i(x) = sum_{j != i} tau((i,j))/(x_i - x_j) - (gamma/x_i) I, orthonormal basis.
std::vector<CMat> rhs_L(const IrrepData& irrep, const std::vector<cplx>& x, double floor = 1e-12);

FlowResult integrate_L(const IrrepData& irrep, double kappa, const LogPath& path, const CMat& init,
                       const FlowOptions& opts = {});
FlowResult integrate_Lstar(const IrrepData& irrep, double kappa, const LogPath& path, const CMat& init,
                           const FlowOptions& opts = {});

// Continuation along the polyline through the given log-coordinate vertices, starting from init.
FlowResult integrate_polyline(const IrrepData& irrep, double kappa, const std::vector<std::vector<cplx>>& vertices,
                              const CMat& init, const FlowOptions& opts = {});

// ||d_i(kappa L A_j) - d_j(kappa L A_i)|| / ||L|| by central differences of step h in x_i and x_j,
// with L near the lifted point obtained from short flows (0-based i != j).
double mixed_partial_residual(const IrrepData& irrep, double kappa, const std::vector<double>& lift, int i, int j,
                              double h, const FlowOptions& opts = {});

// L at a lifted point of C0, flowing from x0 along the straight angle path.
FlowResult flow_L_lift(const IrrepData& irrep, double kappa, const std::vector<double>& lift,
                       const FlowOptions& opts = {});
FlowResult flow_L(const IrrepData& irrep, double kappa, const TorusPoint& x, const FlowOptions& opts = {});
FlowResult flow_Lstar(const IrrepData& irrep, double kappa, const TorusPoint& x, const FlowOptions& opts = {});

// L on all of the regular torus: L(x) = L(x w_x^{-1}) tau(w_x).
CMat extend_L(const IrrepData& irrep, double kappa, const TorusPoint& x, const FlowOptions& opts = {});

// M(w,x) = nu(w_x w) = upsilon^{1 - (w_x w)(1)}; returns the exponent e in [0,N) with M = upsilon^e.
int monodromy_exponent(const Perm& w, const TorusPoint& x);
CMat monodromy_factor(const IrrepData& irrep, const Perm& w, const TorusPoint& x);
CMat upsilon_power(const IrrepData& irrep, int e);

// prod_{i<j} (sin^2((theta_i-theta_j)/2) / sin^2(pi(j-i)/N))^{kappa Lambda/2}, Lambda = tr tau((1,2)).
double det_closed_form(const IrrepData& irrep, double kappa, const TorusPoint& x);

struct BoundReport {
    std::vector<double> ratios;  // ||L(x)|| prod |x_i-x_j|^{|kappa|}
    double maxRatio = 0.0;
};
BoundReport global_bound_check(const IrrepData& irrep, double kappa, const std::vector<TorusPoint>& samples,
                               const FlowOptions& opts = {});

}  // namespace jw
