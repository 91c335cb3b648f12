#include <iostream>

#include <CLI11.hpp>

#include "jackweight_cli/cli.hpp"

namespace {

struct Flags {
    std::string config;
    std::string output;
    std::string tau;
    double kappa = 0.0;
    int threads = -1;
    std::uint64_t seed = 0;
    double flowTol = 0, quadFlowTol = 0, tailTol = 0, gramTol = 0;
    int points = 0, degree = -1;
    bool noExtrapolate = false;
    std::string csv;
};

void emit(const jw::cli::RunConfig& cfg, const jw::cli::Json& j) {
    std::string text = jw::cli::dump(j);
    if (cfg.output.empty())
        std::cout << text;
    else
        jw::cli::write_text(cfg.output, text);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace jw::cli;
    CLI::App app{"Vector-valued Jack polynomials and their torus weight functions"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags f;
    app.add_option("--config", f.config, "JSON config file; its keys override flags");
    app.add_option("-o,--output", f.output, "write the JSON report to this file");
    auto* tauOpt = app.add_option("--tau", f.tau, "partition, e.g. 2,1");
    auto* kappaOpt = app.add_option("--kappa", f.kappa, "parameter, |kappa| < 1/2");
    auto* threadsOpt = app.add_option("--threads", f.threads, "worker threads, 0 for automatic")->check(CLI::NonNegativeNumber);
    auto* seedOpt = app.add_option("--seed", f.seed, "seed for randomized checks");
    auto* flowTolOpt = app.add_option("--flow-tol", f.flowTol, "ODE tolerance");
    auto* quadTolOpt = app.add_option("--quad-flow-tol", f.quadFlowTol, "ODE tolerance on quadrature grids");
    auto* tailTolOpt = app.add_option("--tail-tol", f.tailTol, "series tail tolerance");
    auto* gramTolOpt = app.add_option("--gram-tol", f.gramTol, "Gram/adjointness pass threshold");
    auto* pointsOpt = app.add_option("--points", f.points, "coarse quadrature points per axis");
    auto* degreeOpt = app.add_option("--degree", f.degree, "Gram degree cap");
    app.add_flag("--no-extrapolate", f.noExtrapolate, "disable two-grid extrapolation");

    auto* repr = app.add_subcommand("repr", "irreducible representation data");
    auto* nsjpCmd = app.add_subcommand("nsjp", "nonsymmetric Jack polynomial");
    std::string alpha = "0,0,0";
    int tableau = 0;
    nsjpCmd->add_option("--alpha", alpha, "exponent, e.g. 1,0,0")->required();
    nsjpCmd->add_option("--tableau", tableau, "0-based tableau index");
    auto* flow = app.add_subcommand("flow", "L(x) by integrating from x0");
    std::string target;
    flow->add_option("--target", target, "angles theta_1..theta_N")->required();
    auto* series = app.add_subcommand("series", "local series at the face x_{N-1} = x_N");
    double uAngle = 0.0;
    int terms = 24;
    series->add_option("--u-angle", uAngle, "arg u of the chart centre");
    series->add_option("--terms", terms, "number of coefficients")->check(CLI::NonNegativeNumber);
    auto* solve = app.add_subcommand("solve-h", "solve the commutation system for H");
    auto* gram = app.add_subcommand("gram", "Gram matrix of NSJPs by torus quadrature");
    gram->add_option("--csv", f.csv, "also write the Gram matrix as CSV");
    auto* fourier = app.add_subcommand("fourier", "Fourier coefficient of K");
    std::string fourierAlpha;
    fourier->add_option("--alpha", fourierAlpha, "zero-sum exponent")->required();
    auto* check = app.add_subcommand("check", "run a verification suite");
    std::string suite = "all";
    int maxNorm = 2;
    check->add_option("suite", suite, "symgroup|jackpoly|flow-invariants|series|weights|quadrature|fcrec|all");
    check->add_option("--max-norm", maxNorm, "largest |alpha_i| in the recurrence check")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    RunConfig cfg;
    try {
        if (*tauOpt) cfg.tau = f.tau;
        if (*kappaOpt) cfg.kappa = f.kappa;
        if (*threadsOpt) cfg.threads = f.threads;
        if (*seedOpt) cfg.seed = f.seed;
        if (*flowTolOpt) cfg.flowTol = f.flowTol;
        if (*quadTolOpt) cfg.quadFlowTol = f.quadFlowTol;
        if (*tailTolOpt) cfg.tailTol = f.tailTol;
        if (*gramTolOpt) cfg.gramTol = f.gramTol;
        if (*pointsOpt) cfg.points = f.points;
        if (*degreeOpt) cfg.degree = f.degree;
        if (f.noExtrapolate) cfg.extrapolate = false;
        if (!f.output.empty()) cfg.output = f.output;
        if (!f.csv.empty()) cfg.csv = f.csv;
        if (!f.config.empty()) apply_config_file(cfg, f.config);
        validate(cfg);

        if (*repr) emit(cfg, cmd_repr(cfg));
        if (*nsjpCmd) emit(cfg, cmd_nsjp(cfg, alpha, tableau));
        if (*flow) emit(cfg, cmd_flow(cfg, target));
        if (*series) emit(cfg, cmd_series(cfg, uAngle, terms));
        if (*solve) emit(cfg, cmd_solve_h(cfg));
        if (*gram) emit(cfg, cmd_gram(cfg));
        if (*fourier) emit(cfg, cmd_fourier(cfg, fourierAlpha));
        if (*check) {
            auto warnings = validate(cfg);
            SuiteOutcome out = run_check_suite(cfg, suite, maxNorm);
            emit(cfg, suite_json(cfg, suite, out, warnings));
            for (const auto& r : out.results)
                std::cerr << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name << " = " << r.value
                          << " (threshold " << r.threshold << ")" << (r.detail.empty() ? "" : " [" + r.detail + "]")
                          << "\n";
            return out.allPassed() ? 0 : 1;
        }
    } catch (const jw::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
