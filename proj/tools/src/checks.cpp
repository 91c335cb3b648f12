#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <iomanip>
#include <random>
#include <sstream>

#include "jackweight/jackpoly.hpp"
#include "jackweight/localseries.hpp"
#include "jackweight/odeflow.hpp"
#include "jackweight_cli/cli.hpp"

namespace jw::cli {

bool SuiteOutcome::allPassed() const {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::vector<std::string> suite_names() {
    return {"symgroup", "jackpoly", "flow-invariants", "series", "weights", "quadrature", "fcrec"};
}

namespace {

using Rng = std::mt19937_64;

struct Context {
    const RunConfig& cfg;
    IrrepData irrep;
    Rng rng;
    std::optional<PreparedWeight> weight;
    SuiteOutcome out;
    std::string suite;

    Context(const RunConfig& c) : cfg(c), irrep(build_irrep(parse_partition(c.tau))), rng(c.seed) {}

    int N() const { return irrep.N(); }
    double kappa() const { return cfg.kappa; }

    const PreparedWeight& prepared() {
        if (!weight) weight = prepare_weight(irrep, cfg);
        return *weight;
    }

    void record(const std::string& name, double value, double threshold, bool passed, const std::string& detail = "") {
        out.results.push_back({suite, name, value, threshold, passed && std::isfinite(value), detail});
    }
    void at_most(const std::string& name, double value, double threshold, const std::string& detail = "") {
        record(name, value, threshold, value <= threshold, detail);
    }
    void at_least(const std::string& name, double value, double threshold, const std::string& detail = "") {
        record(name, value, threshold, value >= threshold, detail);
    }

    // Runs body, turning library errors into a failed record.
    void guard(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            record(name, std::numeric_limits<double>::quiet_NaN(), 0.0, false, e.what());
        }
    }
};

std::string sci(double v) {
    std::ostringstream os;
    os << std::setprecision(3) << v;
    return os.str();
}

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

// Lift in C0 with every gap at least minGap and the last gap below maxLast.
std::vector<double> random_c0_lift(Rng& rng, int N, double minGap, double maxLast = 2 * kPi) {
    while (true) {
        std::vector<double> g(N);
        double total = 0;
        for (double& v : g) {
            v = -std::log(uniform(rng, 1e-12, 1.0));
            total += v;
        }
        double free = 2 * kPi - N * minGap;
        std::vector<double> lift(N);
        lift[0] = uniform(rng, -kPi + 0.5, kPi - 0.5);
        for (int k = 1; k < N; ++k) lift[k] = lift[k - 1] + minGap + free * g[k - 1] / total;
        if (lift[N - 1] - lift[N - 2] < maxLast) return lift;
    }
}

LaurentVPoly random_poly(Rng& rng, const IrrepData& ir, int degree) {
    LaurentVPoly p(ir.N(), ir.nTau);
    for (const auto& a : homogeneous_exponents(ir.N(), degree)) {
        CVec v(ir.nTau);
        for (int t = 0; t < ir.nTau; ++t) v[t] = cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
        p.add(a, v);
    }
    return p;
}

double poly_distance(const LaurentVPoly& a, const LaurentVPoly& b) { return (a - b).max_norm(); }

// ---- symgroup --------------------------------------------------------------

void suite_symgroup(Context& c) {
    const IrrepData& ir = c.irrep;
    const int N = c.N();
    const int n = ir.nTau;
    const QMatrix I = QMatrix::identity(n);
    int braid = 0;
    for (int i = 0; i + 1 < N; ++i) {
        const QMatrix& a = ir.genExact[i];
        if (!(a * a == I)) ++braid;
        for (int j = i + 1; j + 1 < N; ++j) {
            const QMatrix& b = ir.genExact[j];
            if (j == i + 1) {
                if (!(a * b * a == b * a * b)) ++braid;
            } else if (!(a * b == b * a)) {
                ++braid;
            }
        }
    }
    c.at_most("braid and involution relations (exact failures)", braid, 0);

    int jm = 0;
    for (int k = 0; k < N; ++k) {
        QMatrix J(n);
        for (int j = k + 1; j < N; ++j) {
            QMatrix t = rep_matrix_exact(ir, perm_transposition(N, j, k));
            for (std::size_t e = 0; e < J.a.size(); ++e) J.a[e] += t.a[e];
        }
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                if (J(r, s) != Rational(r == s ? ir.basis[r].content[k] : 0)) ++jm;
    }
    c.at_most("Jucys-Murphy eigenvalues equal contents (exact failures)", jm, 0);

    int unitary = 0;
    for (const auto& g : ir.genExact)
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) {
                Rational acc(0);
                for (int k = 0; k < n; ++k) acc += g(k, r) * ir.weightsExact[k] * g(k, s);
                if (acc != (r == s ? ir.weightsExact[r] : Rational(0))) ++unitary;
            }
    c.at_most("G-unitarity of generators (exact failures)", unitary, 0);

    Rational m = Rational(n) * (Rational(1, 2) - ir.s1 / Rational(N * (N - 1)));
    c.at_most("m_tau from content sum (exact)", m == Rational(ir.mTau) ? 0.0 : 1.0, 0);
    c.at_most("tr tau((1,2)) = 2 gamma n/(N-1)", std::abs(ir.lambdaTrace - 2 * ir.gamma * n / (N - 1)), 1e-12);

    StembridgeProfile sp = stembridge_profile(ir.tau);
    auto mult = upsilon_multiplicities(ir);
    long long sum = 0, sq = 0;
    int mismatch = 0;
    for (int j = 0; j < N; ++j) {
        sum += sp.e[j];
        sq += sp.e[j] * sp.e[j];
        if (mult[j] != sp.e[j]) ++mismatch;
    }
    c.at_most("upsilon eigenvalue multiplicities match F_tau", mismatch + std::abs(sum - n), 0);
    c.at_most("commutant dimension is sum of squares", std::abs(sq - sp.commutantDim), 0);
}

// ---- jackpoly --------------------------------------------------------------

void suite_jackpoly(Context& c) {
    const IrrepData& ir = c.irrep;
    const int N = c.N();
    const double k = c.kappa();
    c.guard("U_i on constants", [&] {
        double worst = 0;
        for (int t = 0; t < ir.nTau; ++t) {
            LaurentVPoly one = LaurentVPoly::basis_monomial(Exponent(N, 0), ir.nTau, t);
            for (int i = 0; i < N; ++i) {
                LaurentVPoly u = cherednik_apply(ir, k, i, one);
                worst = std::max(worst, poly_distance(u, (1.0 + k * ir.basis[t].content[i]) * one));
            }
        }
        c.at_most("U_i(1 (x) T) = (1 + kappa c(i,T)) 1 (x) T", worst, 1e-12);
    });
    c.guard("U commutators", [&] {
        LaurentVPoly p = random_poly(c.rng, ir, 2);
        double worst = 0;
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                auto a = cherednik_apply(ir, k, i, cherednik_apply(ir, k, j, p));
                auto b = cherednik_apply(ir, k, j, cherednik_apply(ir, k, i, p));
                worst = std::max(worst, poly_distance(a, b) / p.max_norm());
            }
        c.at_most("[U_i, U_j] = 0 on random degree-2 input", worst, 1e-10);
    });
    c.guard("s_i U_i s_i", [&] {
        LaurentVPoly p = random_poly(c.rng, ir, 2);
        double worst = 0;
        for (int i = 0; i + 1 < N; ++i) {
            Perm s = perm_transposition(N, i, i + 1);
            auto lhs = act(ir, s, cherednik_apply(ir, k, i, act(ir, s, p)));
            auto rhs = cherednik_apply(ir, k, i + 1, p) + k * act(ir, s, p);
            worst = std::max(worst, poly_distance(lhs, rhs) / p.max_norm());
        }
        c.at_most("s_i U_i s_i = U_{i+1} + kappa s_i", worst, 1e-10);
    });
    if (k == 0.0) {
        c.record("NSJP eigen-residuals", 0, 0, true, "skipped: spectral vectors coincide at kappa = 0");
        return;
    }
    c.guard("NSJP eigen-residuals", [&] {
        double worst = 0;
        for (int d = 0; d <= 2; ++d)
            for (const auto& a : homogeneous_exponents(N, d))
                for (int t = 0; t < ir.nTau; ++t) {
                    LaurentVPoly z = nsjp(ir, k, a, t);
                    worst = std::max(worst, max_eigen_residual(ir, k, z, spectral_vector(ir, k, a, t)));
                }
        c.at_most("NSJP eigen-residual, |alpha| <= 2", worst, 1e-10);
    });
    c.guard("NSJP Laurent shift", [&] {
        Exponent a(N, 0), b(N, 1);
        a[0] = 1;
        b[0] = 2;
        LaurentVPoly z = nsjp(ir, k, a, 0);
        LaurentVPoly zs = nsjp(ir, k, b, 0);
        c.at_most("zeta_{alpha+1} = e_N zeta_alpha", poly_distance(zs, times_en(z, 1)) / z.max_norm(), 1e-10);
    });
}

// ---- flow invariants -------------------------------------------------------

void suite_flow(Context& c) {
    const IrrepData& ir = c.irrep;
    const int N = c.N();
    const double k = c.kappa();
    FlowOptions fo = flow_options(c.cfg);
    auto rel = [](const CMat& a, const CMat& b) { return (a - b).norm() / b.norm(); };

    c.guard("homogeneity", [&] {
        auto lift = random_c0_lift(c.rng, N, 0.3);
        auto shifted = lift;
        double phi = uniform(c.rng, -0.4, 0.4);
        for (double& t : shifted) t += phi;
        c.at_most("L(e^{i phi} x) = L(x)",
                  rel(flow_L_lift(ir, k, shifted, fo).value, flow_L_lift(ir, k, lift, fo).value), 1e-9);
    });
    c.guard("w0 conjugation", [&] {
        TorusPoint x = TorusPoint::from_angles(random_c0_lift(c.rng, N, 0.3));
        CMat L = extend_L(ir, k, x, fo);
        CMat Lw = extend_L(ir, k, act_point(x, perm_w0(N)), fo);
        CMat ups = ir.upsilonOrth.cast<cplx>();
        c.at_most("L(x w0) = upsilon^{-1} L(x) upsilon", rel(Lw, ups.adjoint() * L * ups), 1e-8);
    });
    c.guard("closed loop", [&] {
        auto a = random_c0_lift(c.rng, N, 0.3);
        auto b = random_c0_lift(c.rng, N, 0.3);
        auto toLog = [](const std::vector<double>& t) {
            std::vector<cplx> v;
            for (double x : t) v.emplace_back(0.0, x);
            return v;
        };
        auto x0 = toLog(x0_lift(N));
        CMat I = CMat::Identity(ir.nTau, ir.nTau);
        CMat L = integrate_polyline(ir, k, {x0, toLog(a), toLog(b), x0}, I, fo).value;
        c.at_most("contractible loop in C0 returns to I", (L - I).norm(), 1e-8);
    });
    c.guard("determinant", [&] {
        TorusPoint x = TorusPoint::from_angles(random_c0_lift(c.rng, N, 0.2));
        cplx d = flow_L(ir, k, x, fo).value.determinant();
        double closed = det_closed_form(ir, k, x);
        c.at_most("det L(x) against closed form", std::abs(d - closed) / closed, 1e-8);
    });
    c.guard("adjoint flow", [&] {
        TorusPoint x = TorusPoint::from_angles(random_c0_lift(c.rng, N, 0.3));
        c.at_most("L*(x) = L(x)^*", rel(flow_Lstar(ir, k, x, fo).value, flow_L(ir, k, x, fo).value.adjoint()), 1e-8);
    });
    c.guard("cocycle", [&] {
        int failures = 0;
        for (int s = 0; s < 20; ++s) {
            Perm w1 = perm_identity(N), w2 = perm_identity(N);
            std::shuffle(w1.begin(), w1.end(), c.rng);
            std::shuffle(w2.begin(), w2.end(), c.rng);
            std::vector<double> th(N);
            for (double& t : th) t = uniform(c.rng, -kPi, kPi);
            TorusPoint x = TorusPoint::from_angles(th);
            int lhs = monodromy_exponent(perm_compose(w1, w2), x);
            int rhs = (monodromy_exponent(w2, act_point(x, w1)) + monodromy_exponent(w1, x)) % N;
            if (lhs != rhs) ++failures;
        }
        c.at_most("M(w1 w2, x) = M(w2, x w1) M(w1, x) (failures of 20)", failures, 0);
    });
    c.guard("mixed partials", [&] {
        FlowOptions tight = fo;
        tight.tol = 1e-13;
        auto lift = random_c0_lift(c.rng, N, 0.4);
        std::vector<double> r;
        for (double h : {1e-3, 5e-4, 2.5e-4}) r.push_back(mixed_partial_residual(ir, k, lift, 0, 1, h, tight));
        if (k == 0.0) {
            c.at_most("mixed partials vanish at kappa = 0", r[0], 1e-12);
            return;
        }
        double dev = std::max(std::abs(std::log2(r[0] / r[1]) - 2), std::abs(std::log2(r[1] / r[2]) - 2));
        c.at_most("mixed-partials residual decays as h^2 (|order - 2|)", dev, 0.5,
                  "residuals " + sci(r[0]) + ", " + sci(r[1]) + ", " + sci(r[2]));
    });
    c.guard("face growth", [&] {
        std::vector<double> dist, norm;
        auto base = x0_lift(N);
        double mid = 0.5 * (base[N - 2] + base[N - 1]);
        for (double d : {1e-4, 3e-4, 1e-3, 3e-3, 1e-2}) {
            auto lift = base;
            lift[N - 2] = mid - std::asin(d / 2);
            lift[N - 1] = mid + std::asin(d / 2);
            Eigen::JacobiSVD<CMat> svd(flow_L_lift(ir, k, lift, fo).value);
            dist.push_back(d);
            norm.push_back(svd.singularValues()[0]);
        }
        double slope = loglog_slope(dist, norm);
        c.at_most("||L|| grows like |x_{N-1} - x_N|^{-|kappa|}", std::abs(slope + std::abs(k)), 0.05,
                  "slope " + sci(slope));
    });
}

// ---- series ----------------------------------------------------------------

void suite_series(Context& c) {
    const IrrepData& ir = c.irrep;
    const int N = c.N();
    const double k = c.kappa();
    FlowOptions fo = flow_options(c.cfg);
    const CMat sig = ir.sigma.cast<cplx>();
    c.guard("series", [&] {
        auto lift = random_c0_lift(c.rng, N, 0.3, kPi / 2);
        ChartPoint cp = chart_point(lift);
        Alpha0Result a0 = alpha0_solve(ir, k, cp.chart, fo);
        c.at_most("sigma alpha0 sigma = alpha0", a0.sigmaResidual, 1e-10);
        SeriesExpansion s = alpha_recurrence(ir, k, cp.chart, a0.alpha0, 24);
        double parity = 0;
        for (int n = 0; n <= s.M(); ++n) {
            double sign = n % 2 == 0 ? 1.0 : -1.0;
            parity = std::max(parity, (sig * s.alphas[n] * sig - sign * s.alphas[n]).cwiseAbs().maxCoeff());
        }
        c.at_most("sigma alpha_n sigma = (-1)^n alpha_n (exact)", parity, 0.0);

        CMat B0 = B_from_beta(ir, beta_stream(ir, cp.chart, 0)[0], 0);
        CMat a1 = s.alphas[0] * B0;
        a1.topRows(ir.mTau) *= k / (1 - 2 * k);
        a1.bottomRows(ir.nTau - ir.mTau) *= k / (1 + 2 * k);
        c.at_most("alpha_1 = rho(k/(1-2k), k/(1+2k)) alpha_0 B_0", (a1 - s.alphas[1]).norm(), 1e-12);

        auto t = coefficient_bounds(N, k, s.alpha0Norm, cp.chart.delta0(), 24);
        double worst = 0;
        for (int n = 1; n <= 24; ++n) {
            Eigen::JacobiSVD<CMat> svd(s.alphas[n]);
            worst = std::max(worst, svd.singularValues()[0] / t[n]);
        }
        c.at_most("||alpha_n|| / t_n for 1 <= n <= 24", worst, 1.0);

        SeriesEvalOptions eo;
        eo.maxRatio = 1.0;
        eo.tailTol = 1e-13;
        eo.maxTerms = 2000;
        CMat L1 = eval_L1(ir, s, cp.z, eo).value;
        CMat C = matching_constant(ir, k, c.cfg.tailTol, fo);
        CMat L = flow_L_lift(ir, k, lift, fo).value;
        c.at_most("L1(x) = L1(x0) L(x)", (L1 - C * L).norm() / L1.norm(), 1e-8);
    });
}

// ---- weights ---------------------------------------------------------------

void suite_weights(Context& c) {
    const IrrepData& ir = c.irrep;
    const int N = c.N();
    const double k = c.kappa();
    FlowOptions fo = flow_options(c.cfg);
    c.guard("solve", [&] {
        const PreparedWeight& pw = c.prepared();
        const WeightSolveResult& r = pw.solve;
        c.at_least("singular-value gap", r.gap, 1e4);
        c.at_most("H Hermitian", r.hermitianResidual, 1e-10);
        bool inside = std::abs(k) < 1.0 / ir.tau.max_hook();
        c.record("H positive definite", r.eigenvaluesH.front(), 0.0, r.positive || !inside,
                 inside ? "" : "outside |kappa| < 1/h_tau: positivity not required");
        c.at_most("upsilon H = H upsilon", r.upsilonResidual, 1e-9);
        FaceReport f = face_commutation_check(ir, r, fo);
        c.at_most("sigma H1 = H1 sigma (independent chart)", f.sigmaResidual, 1e-6);
        c.at_most("tau H2 = H2 tau (second face, independent chart)", f.tauResidual, 1e-6);
        c.at_most("sigma H1 = H1 sigma (matching constant)", f.sigmaResidualDirect, 1e-8);
        c.at_most("tau H2 = H2 tau (matching constant)", f.tauResidualDirect, 1e-8);

        std::vector<double> th(N);
        for (double& t : th) t = uniform(c.rng, -kPi, kPi);
        TorusPoint x = TorusPoint::from_angles(th);
        Perm w = perm_identity(N);
        std::shuffle(w.begin(), w.end(), c.rng);
        CMat K = weight_K(ir, k, r.H, x, fo);
        CMat Kw = weight_K(ir, k, r.H, act_point(x, w), fo);
        CMat tw = rep_matrix(ir, w, Basis::Orthonormal).cast<cplx>();
        c.at_most("K(x w) = tau(w)^{-1} K(x) tau(w)", (Kw - tw.adjoint() * K * tw).norm() / K.norm(), 1e-8);

        if (k == 0.0) {
            c.record("boundary exponent", 0, 0, true, "skipped: K is constant at kappa = 0");
        } else {
            BoundaryProfile bp = boundary_profile(ir, k, r.H, {1e-4, 3e-4, 1e-3, 3e-3, 1e-2}, fo);
            c.at_most("face jump exponent |slope - (1 - 2|kappa|)|", std::abs(bp.slope - (1 - 2 * std::abs(k))), 0.1,
                      "slope " + sci(bp.slope));
        }
    });
}

// ---- quadrature ------------------------------------------------------------

void suite_quadrature(Context& c) {
    const IrrepData& ir = c.irrep;
    const int N = c.N();
    const double k = c.kappa();
    QuadratureOptions qo = quad_options(c.cfg);
    const double tol = c.cfg.gramTol;
    c.guard("gram", [&] {
        const PreparedWeight& pw = c.prepared();
        auto labels = gram_labels(ir, c.cfg.degree);
        GramReport g = gram_matrix_of(pw.model, labels, gram_polys(ir, k, labels), qo);
        std::string tag = window_tag(ir, k);
        c.at_most("Gram off-diagonal / diagonal", g.offDiagMax, tol, tag);
        double worst = 0;
        for (int t = 0; t < ir.nTau; ++t) {
            double want = ir.weights[t] / ir.weights[0];
            worst = std::max(worst, std::abs(g.diagonal[t] / g.diagonal[0] - want) / want);
        }
        c.at_most("degree-0 diagonal ratios match <T,T>_0", worst, 1e-2, tag);

        LaurentVPoly f = random_poly(c.rng, ir, 1), h = random_poly(c.rng, ir, 1);
        double adj = 0, iso = 0;
        for (int i = 0; i < N; ++i) {
            adj = std::max(adj, std::abs(adjointness_residual(pw.model, i, f, h, qo).value));
            iso = std::max(iso, std::abs(isometry_residual(pw.model, i, f, h, qo).value));
        }
        c.at_most("adjointness of x_i D_i", adj, tol, tag);
        c.at_most("isometry of multiplication by x_i", iso, tol, tag);

        Perm s = perm_transposition(N, 0, 1 + static_cast<int>(c.rng() % (N - 1)));
        ScalarEstimate a = pairing(pw.model, act(ir, s, f), act(ir, s, h), qo);
        ScalarEstimate b = pairing(pw.model, f, h, qo);
        double scale = std::max(std::abs(pairing(pw.model, f, f, qo).value), std::abs(pairing(pw.model, h, h, qo).value));
        c.at_most("transposition invariance <wf, wg> = <f, g>", std::abs(a.value - b.value) / scale, tol, tag);
    });
}

// ---- fcrec -----------------------------------------------------------------

void suite_fcrec(Context& c, int maxNorm) {
    const IrrepData& ir = c.irrep;
    const int N = c.N();
    const double k = c.kappa();
    auto alphas = zero_sum_exponents(N, maxNorm);
    int failures = 0;
    for (const auto& a : alphas)
        for (int i = 0; i < N; ++i) {
            std::vector<double> groups(2 * N + 1, 0.0);
            for (const auto& t : fcrec_terms(N, 1.0, a, i)) groups[t.side == 0 ? 2 * N : t.j] += t.coefficient;
            for (double g : groups)
                if (g != 0.0) ++failures;
        }
    c.at_most("constant solution Khat = I satisfies the recurrence (exact failures)", failures, 0);
    c.guard("fcrec residuals", [&] {
        const PreparedWeight& pw = c.prepared();
        auto kh = fourier_K(pw.model, zero_sum_exponents(N, maxNorm + N - 1), quad_options(c.cfg));
        double worst = 0, worstRes = 0;
        for (const auto& a : alphas)
            for (int i = 0; i < N; ++i) {
                FcrecResult r = fcrec_residual(ir, k, kh, a, i);
                worst = std::max(worst, r.residual / std::max(3 * r.errorEstimate, 1e-12));
                worstRes = std::max(worstRes, r.residual);
            }
        c.at_most("FCrec residual / (3 x two-grid estimate)", worst, 1.0,
                  "max residual " + sci(worstRes));
    });
}

}  // namespace

SuiteOutcome run_check_suite(const RunConfig& cfg, const std::string& suite, int maxNorm) {
    validate(cfg);
    auto names = suite_names();
    std::vector<std::string> run;
    if (suite == "all")
        run = names;
    else if (std::find(names.begin(), names.end(), suite) != names.end())
        run = {suite};
    else
        throw ConfigError("unknown check suite '" + suite + "'");
    Context c(cfg);
    for (const auto& s : run) {
        c.suite = s;
        if (s == "symgroup") suite_symgroup(c);
        if (s == "jackpoly") suite_jackpoly(c);
        if (s == "flow-invariants") suite_flow(c);
        if (s == "series") suite_series(c);
        if (s == "weights") suite_weights(c);
        if (s == "quadrature") suite_quadrature(c);
        if (s == "fcrec") suite_fcrec(c, maxNorm);
    }
    return c.out;
}

Json suite_json(const RunConfig& cfg, const std::string& suite, const SuiteOutcome& out,
                const std::vector<std::string>& warnings) {
    Json j = report_skeleton("check", cfg, warnings);
    j["suite"] = suite;
    Json checks = Json::array();
    std::size_t passed = 0;
    Json first;
    for (const auto& r : out.results) {
        Json e;
        e["suite"] = r.suite;
        e["name"] = r.name;
        if (std::isfinite(r.value))
            e["value"] = r.value;
        else
            e["value"] = nullptr;
        e["threshold"] = r.threshold;
        e["passed"] = r.passed;
        e["detail"] = r.detail;
        checks.push_back(e);
        if (r.passed)
            ++passed;
        else if (first.is_null())
            first = e;
    }
    j["checks"] = checks;
    j["summary"] = Json{{"total", out.results.size()},
                        {"passed", passed},
                        {"failed", out.results.size() - passed},
                        {"firstFailure", first}};
    return j;
}

}  // namespace jw::cli
