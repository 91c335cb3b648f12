#include "jackweight/weightsolve.hpp"

#include <algorithm>
#include <cmath>

#include "jackweight/localseries.hpp"

namespace jw {

double b_N(int N) { return 1.0 / (2.0 * (N * N - N + 2)); }

std::vector<CMat> upsilon_eigenbases(const IrrepData& irrep) {
    const int N = irrep.N();
    const int n = irrep.nTau;
    CMat ups = irrep.upsilonOrth.cast<cplx>();
    std::vector<CMat> powers(N, CMat::Identity(n, n));
    for (int k = 1; k < N; ++k) powers[k] = powers[k - 1] * ups;
    std::vector<CMat> out;
    for (int j = 0; j < N; ++j) {
        CMat P = CMat::Zero(n, n);
        for (int k = 0; k < N; ++k) P += std::polar(1.0 / N, -2 * kPi * j * k / N) * powers[k];
        P = (0.5 * (P + P.adjoint())).eval();
        Eigen::SelfAdjointEigenSolver<CMat> es(P);
        std::vector<int> cols;
        for (int c = 0; c < n; ++c)
            if (es.eigenvalues()[c] > 0.5) cols.push_back(c);
        CMat V(n, static_cast<int>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c) V.col(static_cast<int>(c)) = es.eigenvectors().col(cols[c]);
        out.push_back(V);
    }
    return out;
}

namespace {

struct BlockIndex {
    int m = 0;
    int n = 0;
    std::vector<std::pair<int, int>> cells;  // (p, q) for each unknown
};

BlockIndex block_index(const IrrepData& irrep) {
    BlockIndex b;
    b.m = irrep.mTau;
    b.n = irrep.nTau;
    for (int p = 0; p < b.m; ++p)
        for (int q = 0; q < b.m; ++q) b.cells.emplace_back(p, q);
    for (int p = b.m; p < b.n; ++p)
        for (int q = b.m; q < b.n; ++q) b.cells.emplace_back(p, q);
    return b;
}

}  // namespace

CommutationSystem build_system(const IrrepData& irrep, const CMat& L1x0) {
    const int N = irrep.N();
    BlockIndex bi = block_index(irrep);
    auto V = upsilon_eigenbases(irrep);
    CommutationSystem sys;
    sys.unknowns = static_cast<int>(bi.cells.size());
    int rows = 0;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            if (a != b) rows += static_cast<int>(V[a].cols() * V[b].cols());
    sys.equations = rows;
    sys.matrixM = CMat::Zero(rows, sys.unknowns);
    int r = 0;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            if (a == b) continue;
            CMat X = V[a].adjoint() * L1x0.adjoint();
            CMat Y = L1x0 * V[b];
            for (int i = 0; i < X.rows(); ++i)
                for (int j = 0; j < Y.cols(); ++j, ++r)
                    for (int u = 0; u < sys.unknowns; ++u) {
                        auto [p, q] = bi.cells[u];
                        sys.matrixM(r, u) = X(i, p) * Y(q, j);
                    }
        }
    return sys;
}

CMat unpack_B1(const IrrepData& irrep, const CVec& v) {
    BlockIndex bi = block_index(irrep);
    CMat B = CMat::Zero(bi.n, bi.n);
    for (size_t u = 0; u < bi.cells.size(); ++u) B(bi.cells[u].first, bi.cells[u].second) = v[static_cast<int>(u)];
    return B;
}

WeightSolveResult solve_H_from(const IrrepData& irrep, double kappa, const CMat& L1x0, double minGap) {
    const int n = irrep.nTau;
    WeightSolveResult res;
    res.kappa = kappa;
    res.L1x0 = L1x0;
    CommutationSystem sys = build_system(irrep, L1x0);
    const int nu = sys.unknowns;

    Eigen::JacobiSVD<CMat> svd(sys.matrixM, Eigen::ComputeFullV);
    res.singularValues = RVec::Zero(nu);
    for (int k = 0; k < svd.singularValues().size(); ++k) res.singularValues[k] = svd.singularValues()[k];
    double smallest = res.singularValues[nu - 1];
    double second = nu >= 2 ? res.singularValues[nu - 2] : 1.0;
    res.gap = second / std::max(smallest, 1e-300);
    if (res.gap < minGap)
        throw RankDeficient("commutation system has more than one small singular value (gap " +
                            std::to_string(res.gap) + ")");

    CMat B = unpack_B1(irrep, svd.matrixV().col(nu - 1));
    cplx tr = B.trace();
    if (std::abs(tr) < 1e-12) throw RankDeficient("null vector has vanishing trace");
    B *= static_cast<double>(n) / tr;
    res.B1 = B;
    res.H = L1x0.adjoint() * B * L1x0;

    const CMat ups = irrep.upsilonOrth.cast<cplx>();
    const CMat sig = irrep.sigma.cast<cplx>();
    double hn = res.H.norm();
    res.hermitianResidual = (res.H - res.H.adjoint()).norm() / hn;
    res.upsilonResidual = (ups * res.H - res.H * ups).norm() / hn;
    res.sigmaResidual = (sig * B - B * sig).norm() / B.norm();

    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (res.H + res.H.adjoint()));
    res.eigenvaluesH.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
    res.positive = res.eigenvaluesH.front() > 0;
    res.insideWindow = std::abs(kappa) < 1.0 / irrep.tau.max_hook();
    return res;
}

WeightSolveResult solve_H(const IrrepData& irrep, double kappa, const SolveOptions& opts) {
    CMat C = matching_constant(irrep, kappa, opts.tailTol, opts.flow);
    return solve_H_from(irrep, kappa, C, opts.minGap);
}

CMat weight_from_L(const CMat& L, const CMat& H) { return L.adjoint() * H * L; }

CMat weight_K(const IrrepData& irrep, double kappa, const CMat& H, const TorusPoint& x, const FlowOptions& opts) {
    return weight_from_L(extend_L(irrep, kappa, x, opts), H);
}

namespace {

double commutator_residual(const CMat& A, const CMat& B) { return (A * B - B * A).norm() / B.norm(); }

// Lift in C0 agreeing with x0 except that entries k, k+1 close to half of their spacing.
std::vector<double> near_face_lift(int N, int k) {
    std::vector<double> lift = x0_lift(N);
    double mid = 0.5 * (lift[k] + lift[k + 1]);
    double gap = kPi / N;
    lift[k] = mid - gap / 2;
    lift[k + 1] = mid + gap / 2;
    return lift;
}

}  // namespace

FaceReport face_commutation_check(const IrrepData& irrep, const WeightSolveResult& res, const FlowOptions& opts) {
    const int N = irrep.N();
    const double kappa = res.kappa;
    const CMat ups = irrep.upsilonOrth.cast<cplx>();
    const CMat upsInv = ups.adjoint();
    const CMat sig = irrep.sigma.cast<cplx>();
    const CMat tau2 = irrep.transposition(N - 3, N - 2).cast<cplx>();
    FaceReport rep;

    CMat Cinv = res.L1x0.inverse();
    CMat H1 = Cinv.adjoint() * res.H * Cinv;
    CMat H2 = upsInv * H1 * ups;
    rep.sigmaResidualDirect = commutator_residual(sig, H1);
    rep.tauResidualDirect = commutator_residual(tau2, H2);

    SeriesEvalOptions eo;
    eo.maxRatio = 1.0;
    eo.tailTol = 1e-13;
    eo.maxTerms = 2000;

    // face x_{N-1} = x_N
    std::vector<double> lift1 = near_face_lift(N, N - 2);
    CMat L1 = L1_at_lift(irrep, kappa, lift1, eo, opts).value;
    CMat C1 = L1 * flow_L_lift(irrep, kappa, lift1, opts).value.inverse();
    rep.overlapResidual = (C1 - res.L1x0).norm() / res.L1x0.norm();
    CMat C1inv = C1.inverse();
    rep.sigmaResidual = commutator_residual(sig, C1inv.adjoint() * res.H * C1inv);

    // face x_{N-2} = x_{N-1}: L2(x) = upsilon^{-1} L1(x w0^{-1}) upsilon
    std::vector<double> lift2 = near_face_lift(N, N - 3);
    std::vector<double> shifted(N);
    shifted[0] = lift2[N - 1] - 2 * kPi;
    for (int i = 1; i < N; ++i) shifted[i] = lift2[i - 1];
    CMat L2 = upsInv * L1_at_lift(irrep, kappa, shifted, eo, opts).value * ups;
    CMat C2 = L2 * flow_L_lift(irrep, kappa, lift2, opts).value.inverse();
    CMat C2inv = C2.inverse();
    rep.tauResidual = commutator_residual(tau2, C2inv.adjoint() * res.H * C2inv);
    return rep;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

BoundaryProfile boundary_profile(const IrrepData& irrep, double kappa, const CMat& H, const std::vector<double>& absZ,
                                 const FlowOptions& opts) {
    const int N = irrep.N();
    BoundaryProfile prof;
    std::vector<double> base = x0_lift(N);
    double mid = 0.5 * (base[N - 2] + base[N - 1]);
    for (double r : absZ) {
        double half = std::asin(r);
        std::vector<double> plus = base, minus = base;
        plus[N - 2] = mid - half;
        plus[N - 1] = mid + half;
        minus[N - 2] = mid + half;
        minus[N - 1] = mid - half;
        CMat Kp = weight_K(irrep, kappa, H, TorusPoint::from_angles(plus), opts);
        CMat Km = weight_K(irrep, kappa, H, TorusPoint::from_angles(minus), opts);
        prof.absZ.push_back(r);
        prof.jump.push_back((Kp - Km).norm());
    }
    prof.slope = loglog_slope(prof.absZ, prof.jump);
    return prof;
}

}  // namespace jw
