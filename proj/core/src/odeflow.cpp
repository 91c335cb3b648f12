#include "jackweight/odeflow.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace jw {

double wrap_angle(double a) {
    double r = std::remainder(a, 2 * kPi);
    if (r <= -kPi) r += 2 * kPi;
    return r;
}

TorusPoint TorusPoint::from_angles(const std::vector<double>& angles) {
    TorusPoint p;
    p.theta.reserve(angles.size());
    for (double a : angles) p.theta.push_back(wrap_angle(a));
    return p;
}

std::vector<cplx> TorusPoint::x() const {
    std::vector<cplx> out;
    out.reserve(theta.size());
    for (double a : theta) out.push_back(std::polar(1.0, a));
    return out;
}

double TorusPoint::min_distance() const {
    double m = 2.0;
    for (int i = 0; i < N(); ++i)
        for (int j = i + 1; j < N(); ++j) m = std::min(m, 2 * std::abs(std::sin((theta[i] - theta[j]) / 2)));
    return m;
}

TorusPoint x0_point(int N) { return TorusPoint::from_angles(x0_lift(N)); }

std::vector<double> x0_lift(int N) {
    std::vector<double> t(N);
    for (int j = 0; j < N; ++j) t[j] = 2 * kPi * j / N;
    return t;
}

namespace {

double ccw_offset(double a, double base) {
    double d = std::fmod(a - base, 2 * kPi);
    if (d < 0) d += 2 * kPi;
    return d;
}

}  // namespace

bool in_C0(const TorusPoint& x) {
    double prev = 0.0;
    for (int k = 1; k < x.N(); ++k) {
        double d = ccw_offset(x.theta[k], x.theta[0]);
        if (d <= prev) return false;
        prev = d;
    }
    return true;
}

std::vector<double> c0_lift(const TorusPoint& x) {
    if (!in_C0(x)) throw Error("point is not in the fundamental chamber");
    std::vector<double> t(x.N());
    t[0] = wrap_angle(x.theta[0]);
    for (int k = 1; k < x.N(); ++k) t[k] = t[0] + ccw_offset(x.theta[k], t[0]);
    return t;
}

Perm chamber_perm(const TorusPoint& x) {
    const int N = x.N();
    Perm order(N);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin() + 1, order.end(), [&](int a, int b) {
        return ccw_offset(x.theta[a], x.theta[0]) < ccw_offset(x.theta[b], x.theta[0]);
    });
    return perm_inverse(order);
}

TorusPoint act_point(const TorusPoint& x, const Perm& w) {
    TorusPoint y;
    y.theta.resize(x.N());
    for (int i = 0; i < x.N(); ++i) y.theta[i] = x.theta[w[i]];
    return y;
}

TorusPoint rotate(const TorusPoint& x, double phi) {
    std::vector<double> t = x.theta;
    for (double& a : t) a += phi;
    return TorusPoint::from_angles(t);
}

LogPath angle_path(const std::vector<double>& fromTheta, const std::vector<double>& toTheta) {
    LogPath p;
    for (double a : fromTheta) p.from.emplace_back(0.0, a);
    for (double a : toTheta) p.to.emplace_back(0.0, a);
    return p;
}

std::vector<CMat> rhs_L(const IrrepData& irrep, const std::vector<cplx>& x, double floor) {
    const int N = irrep.N();
    const int n = irrep.nTau;
    std::vector<CMat> A(N, CMat::Zero(n, n));
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            if (j == i) continue;
            cplx d = x[i] - x[j];
            if (std::abs(d) < floor) throw SingularPoint("rhs_L: point too close to the singular set");
            A[i] += irrep.transposition(i, j).cast<cplx>() / d;
        }
        A[i].diagonal().array() -= irrep.gamma / x[i];
    }
    return A;
}

namespace {

struct PathState {
    std::vector<cplx> x;
    std::vector<cplx> dz;  // d(log x_j)/dt
};

void path_at(const LogPath& p, double t, PathState& s) {
    const size_t N = p.from.size();
    s.x.resize(N);
    s.dz.resize(N);
    for (size_t j = 0; j < N; ++j) {
        s.dz[j] = p.to[j] - p.from[j];
        s.x[j] = std::exp(p.from[j] + t * s.dz[j]);
    }
}

}  // namespace

FlowResult integrate_L(const IrrepData& irrep, double kappa, const LogPath& path, const CMat& init,
                       const FlowOptions& opts) {
    const int N = irrep.N();
    const int n = irrep.nTau;
    std::vector<CMat> tau;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            pairs.emplace_back(i, j);
            tau.push_back(irrep.transposition(i, j).cast<cplx>());
        }
    PathState s;
    Generator G = [&](double t, CMat& g) {
        path_at(path, t, s);
        g.setZero(n, n);
        cplx trace = 0.0;
        for (int j = 0; j < N; ++j) trace += s.dz[j];
        g.diagonal().setConstant(-irrep.gamma * trace);
        for (size_t k = 0; k < pairs.size(); ++k) {
            auto [i, j] = pairs[k];
            cplx d = s.x[i] - s.x[j];
            if (std::abs(d) < opts.singularFloor) throw SingularPoint("integrate_L: path meets the singular set");
            g += ((s.dz[i] * s.x[i] - s.dz[j] * s.x[j]) / d) * tau[k];
        }
        g *= kappa;
    };
    return integrate_matrix_ode(G, init, Side::Right, opts);
}

FlowResult integrate_Lstar(const IrrepData& irrep, double kappa, const LogPath& path, const CMat& init,
                           const FlowOptions& opts) {
    const int N = irrep.N();
    const int n = irrep.nTau;
    std::vector<CMat> tau;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            pairs.emplace_back(i, j);
            tau.push_back(irrep.transposition(i, j).cast<cplx>());
        }
    PathState s;
    Generator G = [&](double t, CMat& g) {
        path_at(path, t, s);
        g.setZero(n, n);
        cplx trace = 0.0;
        for (int j = 0; j < N; ++j) trace += s.dz[j];
        g.diagonal().setConstant(irrep.gamma * trace);
        for (size_t k = 0; k < pairs.size(); ++k) {
            auto [i, j] = pairs[k];
            cplx d = s.x[i] - s.x[j];
            if (std::abs(d) < opts.singularFloor) throw SingularPoint("integrate_Lstar: path meets the singular set");
            g += ((s.dz[i] * s.x[j] - s.dz[j] * s.x[i]) / d) * tau[k];
        }
        g *= kappa;
    };
    return integrate_matrix_ode(G, init, Side::Left, opts);
}

FlowResult integrate_polyline(const IrrepData& irrep, double kappa, const std::vector<std::vector<cplx>>& vertices,
                              const CMat& init, const FlowOptions& opts) {
    FlowResult acc;
    acc.value = init;
    for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
        FlowResult seg = integrate_L(irrep, kappa, LogPath{vertices[k], vertices[k + 1]}, acc.value, opts);
        acc.value = seg.value;
        acc.errorEstimate += seg.errorEstimate;
        acc.stepCount += seg.stepCount;
    }
    return acc;
}

double mixed_partial_residual(const IrrepData& irrep, double kappa, const std::vector<double>& lift, int i, int j,
                              double h, const FlowOptions& opts) {
    std::vector<cplx> logx;
    for (double t : lift) logx.emplace_back(0.0, t);
    CMat L = flow_L_lift(irrep, kappa, lift, opts).value;
    auto F = [&](int dir, double s, int comp) {
        std::vector<cplx> to = logx;
        to[dir] += std::log(1.0 + s * h / std::exp(logx[dir]));
        CMat Ls = integrate_L(irrep, kappa, LogPath{logx, to}, L, opts).value;
        std::vector<cplx> x;
        for (const auto& l : to) x.push_back(std::exp(l));
        return CMat(kappa * Ls * rhs_L(irrep, x, opts.singularFloor)[comp]);
    };
    CMat dIFj = (F(i, 1.0, j) - F(i, -1.0, j)) / (2 * h);
    CMat dJFi = (F(j, 1.0, i) - F(j, -1.0, i)) / (2 * h);
    return (dIFj - dJFi).norm() / L.norm();
}

FlowResult flow_L_lift(const IrrepData& irrep, double kappa, const std::vector<double>& lift,
                       const FlowOptions& opts) {
    const int n = irrep.nTau;
    return integrate_L(irrep, kappa, angle_path(x0_lift(irrep.N()), lift), CMat::Identity(n, n), opts);
}

FlowResult flow_L(const IrrepData& irrep, double kappa, const TorusPoint& x, const FlowOptions& opts) {
    return flow_L_lift(irrep, kappa, c0_lift(x), opts);
}

FlowResult flow_Lstar(const IrrepData& irrep, double kappa, const TorusPoint& x, const FlowOptions& opts) {
    const int n = irrep.nTau;
    return integrate_Lstar(irrep, kappa, angle_path(x0_lift(irrep.N()), c0_lift(x)), CMat::Identity(n, n), opts);
}

CMat extend_L(const IrrepData& irrep, double kappa, const TorusPoint& x, const FlowOptions& opts) {
    Perm w = chamber_perm(x);
    TorusPoint y = act_point(x, perm_inverse(w));
    CMat L = flow_L(irrep, kappa, y, opts).value;
    return L * rep_matrix(irrep, w, Basis::Orthonormal).cast<cplx>();
}

int monodromy_exponent(const Perm& w, const TorusPoint& x) {
    const int N = x.N();
    int k = perm_compose(chamber_perm(x), w)[0];
    return ((-k) % N + N) % N;
}

CMat upsilon_power(const IrrepData& irrep, int e) {
    const int n = irrep.nTau;
    const int N = irrep.N();
    e = ((e % N) + N) % N;
    RMat m = RMat::Identity(n, n);
    for (int k = 0; k < e; ++k) m = m * irrep.upsilonOrth;
    return m.cast<cplx>();
}

CMat monodromy_factor(const IrrepData& irrep, const Perm& w, const TorusPoint& x) {
    return upsilon_power(irrep, monodromy_exponent(w, x));
}

double det_closed_form(const IrrepData& irrep, double kappa, const TorusPoint& x) {
    const int N = irrep.N();
    double logdet = 0.0;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            double s = std::sin((x.theta[i] - x.theta[j]) / 2);
            double s0 = std::sin(kPi * (j - i) / N);
            logdet += std::log(s * s / (s0 * s0));
        }
    return std::exp(0.5 * kappa * irrep.lambdaTrace * logdet);
}

BoundReport global_bound_check(const IrrepData& irrep, double kappa, const std::vector<TorusPoint>& samples,
                               const FlowOptions& opts) {
    BoundReport rep;
    for (const auto& x : samples) {
        CMat L = extend_L(irrep, kappa, x, opts);
        Eigen::JacobiSVD<CMat> svd(L);
        double norm = svd.singularValues()[0];
        double prod = 1.0;
        auto xs = x.x();
        for (int i = 0; i < x.N(); ++i)
            for (int j = i + 1; j < x.N(); ++j) prod *= std::pow(std::abs(xs[i] - xs[j]), std::abs(kappa));
        rep.ratios.push_back(norm * prod);
        rep.maxRatio = std::max(rep.maxRatio, norm * prod);
    }
    return rep;
}

}  // namespace jw
