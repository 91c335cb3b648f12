#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "jackweight/common.hpp"
#include "jackweight/symgroup.hpp"
#include "jackweight/torusquad.hpp"
#include "jackweight/weightsolve.hpp"

namespace jw::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
    std::string tau = "2,1";
    double kappa = 0.05;
    int points = 48;          // coarse grid P; the fine grid uses 2P
    int degree = 2;           // Gram degree cap
    double flowTol = 1e-11;
    double quadFlowTol = 1e-10;
    double tailTol = 1e-12;
    double gramTol = 1e-2;
    bool extrapolate = true;
    int threads = 0;          // 0: JACKWEIGHT_THREADS or hardware concurrency
    std::uint64_t seed = 20240611;
    std::string output;       // JSON report path; empty writes to stdout
    std::string csv;
};

// Overlays keys present in a JSON config file onto cfg.
void apply_config_file(RunConfig& cfg, const std::string& path);
void apply_config_json(RunConfig& cfg, const Json& j);
// Throws ConfigError for invalid input; returns warnings.
std::vector<std::string> validate(const RunConfig& cfg);
Json config_json(const RunConfig& cfg);
int effective_threads(const RunConfig& cfg);

// ---- emission -------------------------------------------------------------

Json complex_json(cplx z);
Json matrix_json(const CMat& m);  // row-major [[re, im], ...] rows
Json matrix_json(const RMat& m);
Json vector_json(const std::vector<double>& v);
Json report_skeleton(const std::string& command, const RunConfig& cfg, const std::vector<std::string>& warnings);
std::string dump(const Json& j);
void write_text(const std::string& path, const std::string& text);
std::string csv_matrix(const std::vector<std::string>& labels, const CMat& m);

// ---- shared setup ---------------------------------------------------------

FlowOptions flow_options(const RunConfig& cfg);
QuadratureOptions quad_options(const RunConfig& cfg);

// Solved H rescaled so that <1 (x) T_0, 1 (x) T_0> = <T_0,T_0>_0.
struct PreparedWeight {
    WeightSolveResult solve;
    double normalization = 1.0;
    WeightModel model;
};
PreparedWeight prepare_weight(const IrrepData& irrep, const RunConfig& cfg);
// Orthogonal NSJPs, or plain monomials when kappa = 0.
std::vector<LaurentVPoly> gram_polys(const IrrepData& irrep, double kappa, const std::vector<GramLabel>& labels);
std::string window_tag(const IrrepData& irrep, double kappa);

// ---- commands -------------------------------------------------------------

std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

Json cmd_repr(const RunConfig& cfg);
Json cmd_nsjp(const RunConfig& cfg, const std::string& alpha, int tableau);
Json cmd_flow(const RunConfig& cfg, const std::string& target);
Json cmd_series(const RunConfig& cfg, double uAngle, int terms);
Json cmd_solve_h(const RunConfig& cfg);
Json cmd_gram(const RunConfig& cfg);
Json cmd_fourier(const RunConfig& cfg, const std::string& alpha);

// ---- check suites ---------------------------------------------------------

struct CheckResult {
    std::string suite;
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool passed = false;
    std::string detail;
};

struct SuiteOutcome {
    std::vector<CheckResult> results;
    bool allPassed() const;
};

// Suites: symgroup, jackpoly, flow-invariants, series, weights, quadrature, fcrec, all.
std::vector<std::string> suite_names();
SuiteOutcome run_check_suite(const RunConfig& cfg, const std::string& suite, int maxNorm = 2);
Json suite_json(const RunConfig& cfg, const std::string& suite, const SuiteOutcome& out,
                const std::vector<std::string>& warnings);

}  // namespace jw::cli
