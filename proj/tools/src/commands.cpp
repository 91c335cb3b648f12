#include <cmath>
#include <sstream>

#include "jackweight/jackpoly.hpp"
#include "jackweight/localseries.hpp"
#include "jackweight/odeflow.hpp"
#include "jackweight_cli/cli.hpp"

namespace jw::cli {

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

Json exponent_json(const Exponent& a) {
    Json j = Json::array();
    for (int v : a) j.push_back(v);
    return j;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("invalid integer list '" + text + "'");
        }
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("invalid number list '" + text + "'");
        }
    }
    return out;
}

FlowOptions flow_options(const RunConfig& cfg) {
    FlowOptions f;
    f.tol = cfg.flowTol;
    return f;
}

QuadratureOptions quad_options(const RunConfig& cfg) {
    QuadratureOptions q;
    q.P = cfg.points;
    q.extrapolate = cfg.extrapolate;
    q.flow.tol = cfg.quadFlowTol;
    q.threads = effective_threads(cfg);
    return q;
}

PreparedWeight prepare_weight(const IrrepData& irrep, const RunConfig& cfg) {
    PreparedWeight p;
    SolveOptions so;
    so.flow = flow_options(cfg);
    so.tailTol = cfg.tailTol;
    p.solve = solve_H(irrep, cfg.kappa, so);
    p.model = WeightModel{&irrep, cfg.kappa, p.solve.H};
    p.normalization = gram_normalization(p.model, quad_options(cfg));
    p.model.H *= p.normalization;
    return p;
}

std::vector<LaurentVPoly> gram_polys(const IrrepData& irrep, double kappa, const std::vector<GramLabel>& labels) {
    std::vector<LaurentVPoly> polys;
    for (const auto& l : labels) {
        if (kappa == 0.0)
            polys.push_back(LaurentVPoly::basis_monomial(l.alpha, irrep.nTau, l.tableau));
        else
            polys.push_back(nsjp(irrep, kappa, l.alpha, l.tableau));
    }
    return polys;
}

std::string window_tag(const IrrepData& irrep, double kappa) {
    if (std::abs(kappa) < b_N(irrep.N())) return "inside proven window";
    if (std::abs(kappa) < 1.0 / irrep.tau.max_hook()) return "extended window";
    return "outside positivity window";
}

Json cmd_repr(const RunConfig& cfg) {
    auto warnings = validate(cfg);
    Partition tau = parse_partition(cfg.tau);
    IrrepData ir = build_irrep(tau);
    StembridgeProfile sp = stembridge_profile(tau);
    Json j = report_skeleton("repr", cfg, warnings);
    j["N"] = ir.N();
    j["nTau"] = ir.nTau;
    j["mTau"] = ir.mTau;
    j["gamma"] = rational_str(ir.gammaExact);
    j["s1"] = rational_str(ir.s1);
    j["lambdaTrace"] = ir.lambdaTrace;
    j["maxHook"] = tau.max_hook();
    Json weights = Json::array();
    for (const auto& w : ir.weightsExact) weights.push_back(rational_str(w));
    j["weights"] = weights;
    Json tableaux = Json::array();
    for (const auto& T : ir.basis) tableaux.push_back(Json{{"content", T.content}, {"row", T.row}, {"col", T.col}});
    j["tableaux"] = tableaux;
    j["fakeDegree"] = sp.fakeDegree;
    j["fCoefficients"] = sp.e;
    j["commutantDim"] = sp.commutantDim;
    j["unknowns"] = sp.unknowns;
    j["equations"] = sp.equations;
    Json gens = Json::array();
    for (const auto& g : ir.gen) gens.push_back(matrix_json(g));
    j["generators"] = gens;
    j["sigma"] = matrix_json(ir.sigma);
    j["upsilon"] = matrix_json(ir.upsilon);
    return j;
}

Json cmd_nsjp(const RunConfig& cfg, const std::string& alphaText, int tableau) {
    auto warnings = validate(cfg);
    IrrepData ir = build_irrep(parse_partition(cfg.tau));
    Exponent alpha = parse_int_list(alphaText);
    if (static_cast<int>(alpha.size()) != ir.N()) throw ConfigError("alpha must have N entries");
    if (tableau < 0 || tableau >= ir.nTau) throw ConfigError("tableau index out of range");
    LaurentVPoly p = nsjp(ir, cfg.kappa, alpha, tableau);
    auto spec = spectral_vector(ir, cfg.kappa, alpha, tableau);
    Json j = report_skeleton("nsjp", cfg, warnings);
    j["alpha"] = alpha;
    j["tableau"] = tableau;
    j["spectralVector"] = vector_json(spec);
    j["eigenResidual"] = max_eigen_residual(ir, cfg.kappa, p, spec);
    Json terms = Json::array();
    for (const auto& [a, v] : p.terms) {
        Json c = Json::array();
        for (int t = 0; t < v.size(); ++t) c.push_back(complex_json(v[t]));
        terms.push_back(Json{{"alpha", exponent_json(a)}, {"coeff", c}});
    }
    j["terms"] = terms;
    return j;
}

Json cmd_flow(const RunConfig& cfg, const std::string& target) {
    auto warnings = validate(cfg);
    IrrepData ir = build_irrep(parse_partition(cfg.tau));
    auto angles = parse_double_list(target);
    if (static_cast<int>(angles.size()) != ir.N()) throw ConfigError("target must have N angles");
    TorusPoint x = TorusPoint::from_angles(angles);
    Perm w = chamber_perm(x);
    TorusPoint y = act_point(x, perm_inverse(w));
    FlowResult fr = flow_L(ir, cfg.kappa, y, flow_options(cfg));
    RMat tw = rep_matrix(ir, w, Basis::Orthonormal);
    CMat L = fr.value * tw.cast<cplx>();
    Json j = report_skeleton("flow", cfg, warnings);
    j["theta"] = vector_json(x.theta);
    j["chamberPerm"] = w;
    j["L"] = matrix_json(L);
    j["det"] = complex_json(L.determinant());
    j["detClosedForm"] = det_closed_form(ir, cfg.kappa, y) * tw.determinant();
    j["errorEstimate"] = fr.errorEstimate;
    j["stepCount"] = fr.stepCount;
    return j;
}

Json cmd_series(const RunConfig& cfg, double uAngle, int terms) {
    auto warnings = validate(cfg);
    IrrepData ir = build_irrep(parse_partition(cfg.tau));
    if (terms < 1) throw ConfigError("terms must be at least 1");
    const int N = ir.N();
    FaceChart chart;
    for (int k = 0; k < N - 2; ++k) chart.logx.emplace_back(0.0, 2 * kPi * k / N);
    chart.logu = cplx(0.0, uAngle);
    Alpha0Result a0 = alpha0_solve(ir, cfg.kappa, chart, flow_options(cfg));
    SeriesExpansion s = alpha_recurrence(ir, cfg.kappa, chart, a0.alpha0, terms);
    double d0 = chart.delta0();
    auto bounds = coefficient_bounds(N, cfg.kappa, s.alpha0Norm, d0, terms);
    const CMat sig = ir.sigma.cast<cplx>();
    Json coeffs = Json::array();
    for (int n = 0; n <= terms; ++n) {
        const CMat& a = s.alphas[n];
        double sign = n % 2 == 0 ? 1.0 : -1.0;
        Eigen::JacobiSVD<CMat> svd(a);
        coeffs.push_back(Json{{"n", n},
                              {"norm", svd.singularValues()[0]},
                              {"bound", bounds[n]},
                              {"parityResidual", (sig * a * sig - sign * a).norm()}});
    }
    Json j = report_skeleton("series", cfg, warnings);
    j["uAngle"] = uAngle;
    j["delta0"] = d0;
    j["alpha0SigmaResidual"] = a0.sigmaResidual;
    j["coefficients"] = coeffs;
    j["tailRadius"] = d0 / 4;
    j["tailBound"] = tail_bound(N, cfg.kappa, s.alpha0Norm, d0, d0 / 4, terms);
    return j;
}

Json cmd_solve_h(const RunConfig& cfg) {
    auto warnings = validate(cfg);
    IrrepData ir = build_irrep(parse_partition(cfg.tau));
    SolveOptions so;
    so.flow = flow_options(cfg);
    so.tailTol = cfg.tailTol;
    WeightSolveResult r = solve_H(ir, cfg.kappa, so);
    FaceReport f = face_commutation_check(ir, r, so.flow);
    if (!r.positive) warnings.push_back("H is not positive definite at this kappa");
    Json j = report_skeleton("solve-h", cfg, warnings);
    j["H"] = matrix_json(r.H);
    j["B1"] = matrix_json(r.B1);
    j["L1x0"] = matrix_json(r.L1x0);
    j["singularValues"] = vector_json(std::vector<double>(r.singularValues.data(),
                                                          r.singularValues.data() + r.singularValues.size()));
    j["gap"] = r.gap;
    j["eigenvaluesH"] = vector_json(r.eigenvaluesH);
    j["positive"] = r.positive;
    j["window"] = window_tag(ir, cfg.kappa);
    j["bN"] = b_N(ir.N());
    j["residuals"] = Json{{"hermitian", r.hermitianResidual},
                          {"upsilonCommutator", r.upsilonResidual},
                          {"sigmaCommutatorB1", r.sigmaResidual},
                          {"faceSigmaDirect", f.sigmaResidualDirect},
                          {"faceTauDirect", f.tauResidualDirect},
                          {"faceSigma", f.sigmaResidual},
                          {"faceTau", f.tauResidual},
                          {"matchingOverlap", f.overlapResidual}};
    return j;
}

Json cmd_gram(const RunConfig& cfg) {
    auto warnings = validate(cfg);
    IrrepData ir = build_irrep(parse_partition(cfg.tau));
    PreparedWeight pw = prepare_weight(ir, cfg);
    auto labels = gram_labels(ir, cfg.degree);
    GramReport g = gram_matrix_of(pw.model, labels, gram_polys(ir, cfg.kappa, labels), quad_options(cfg));
    std::vector<std::string> names;
    for (const auto& l : labels) names.push_back(l.str());
    if (!cfg.csv.empty()) write_text(cfg.csv, csv_matrix(names, g.matrix));
    Json j = report_skeleton("gram", cfg, warnings);
    j["window"] = window_tag(ir, cfg.kappa);
    j["normalization"] = pw.normalization;
    j["labels"] = names;
    j["offDiagMax"] = g.offDiagMax;
    j["diagonal"] = vector_json(g.diagonal);
    j["matrix"] = matrix_json(g.matrix);
    j["errorEstimate"] = matrix_json(g.errorEstimate);
    return j;
}

Json cmd_fourier(const RunConfig& cfg, const std::string& alphaText) {
    auto warnings = validate(cfg);
    IrrepData ir = build_irrep(parse_partition(cfg.tau));
    Exponent alpha = parse_int_list(alphaText);
    if (static_cast<int>(alpha.size()) != ir.N()) throw ConfigError("alpha must have N entries");
    int s = 0;
    for (int v : alpha) s += v;
    if (s != 0) throw ConfigError("alpha must have zero sum (other coefficients vanish)");
    PreparedWeight pw = prepare_weight(ir, cfg);
    auto kh = fourier_K(pw.model, {alpha}, quad_options(cfg));
    const MatrixEstimate& e = kh.at(alpha);
    Json j = report_skeleton("fourier", cfg, warnings);
    j["alpha"] = alpha;
    j["normalization"] = pw.normalization;
    j["Khat"] = matrix_json(e.value);
    j["coarse"] = matrix_json(e.coarse);
    j["fine"] = matrix_json(e.fine);
    j["errorEstimate"] = e.error;
    return j;
}

}  // namespace jw::cli
