// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "jackweight/odeflow.hpp"
#include "jackweight/symgroup.hpp"
#include "jackweight/weightsolve.hpp"
#include "jackweight_cli/cli.hpp"

using namespace jw;
using namespace jw::cli;

namespace {

struct Verdict {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            detail << " [failed: " << what << "]";
        }
    }
    // Folds a suite run into the verdict, restricted to the named checks when given.
    void suite(const RunConfig& cfg, const std::string& name, const std::vector<std::string>& only = {}) {
        SuiteOutcome out = run_check_suite(cfg, name);
        for (const auto& r : out.results) {
            if (!only.empty() && std::find(only.begin(), only.end(), r.name) == only.end()) continue;
            require(r.passed, cfg.tau + " kappa=" + std::to_string(cfg.kappa) + " " + r.name + " = " +
                                  std::to_string(r.value) + (r.detail.empty() ? "" : " " + r.detail));
        }
    }
};

RunConfig config(const std::string& tau, double kappa) {
    RunConfig c;
    c.tau = tau;
    c.kappa = kappa;
    return c;
}

int failures = 0;

void criterion(int id, const std::string& title, double budgetSeconds, const std::function<void(Verdict&)>& body) {
    Verdict v;
    auto start = std::chrono::steady_clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs < budgetSeconds, "runtime budget " + std::to_string(budgetSeconds) + " s");
    if (!v.passed) ++failures;
    std::printf("criterion %d: %s  %s  (%.1f s)%s\n", id, v.passed ? "PASS" : "FAIL", title.c_str(), secs,
                v.detail.str().c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    const std::vector<std::string> flowChecks = {
        "contractible loop in C0 returns to I", "L(x w0) = upsilon^{-1} L(x) upsilon", "L(e^{i phi} x) = L(x)",
        "mixed-partials residual decays as h^2 (|order - 2|)"};
    const std::vector<std::string> weightChecks = {
        "singular-value gap",
        "H Hermitian",
        "H positive definite",
        "upsilon H = H upsilon",
        "sigma H1 = H1 sigma (independent chart)",
        "tau H2 = H2 tau (second face, independent chart)"};

    criterion(1, "representation suite, exact braid/JM/G-unitarity", 10, [](Verdict& v) {
        for (const char* tau : {"2,1", "3,1", "2,2", "2,1,1", "4,2"})
            v.suite(config(tau, 0.1), "symgroup",
                    {"braid and involution relations (exact failures)",
                     "Jucys-Murphy eigenvalues equal contents (exact failures)",
                     "G-unitarity of generators (exact failures)"});
    });

    criterion(2, "constants for tau = (4,2)", 1, [](Verdict& v) {
        IrrepData ir = build_irrep(parse_partition("4,2"));
        StembridgeProfile sp = stembridge_profile(ir.tau);
        CommutationSystem sys = build_system(ir, CMat::Identity(ir.nTau, ir.nTau));
        v.require(ir.nTau == 9, "n_tau = 9");
        v.require(ir.mTau == 3, "m_tau = 3");
        v.require(sp.e == std::vector<long long>{2, 1, 2, 1, 2, 1}, "F_tau = 2+q+2q^2+q^3+2q^4+q^5");
        v.require(sp.commutantDim == 15, "commutant dimension 15");
        v.require(sp.unknowns == 45 && sys.unknowns == 45, "45 unknowns");
        v.require(sp.equations == 66 && sys.equations == 66, "66 equations");
        v.detail << " n=" << ir.nTau << " m=" << ir.mTau << " unknowns=" << sys.unknowns
                 << " equations=" << sys.equations;
    });

    criterion(3, "flow suite, tau = (2,1), kappa in {+-0.1, +-0.25}", 60, [&](Verdict& v) {
        for (double k : {0.1, -0.1, 0.25, -0.25}) {
            v.suite(config("2,1", k), "flow-invariants", flowChecks);
            IrrepData ir = build_irrep(parse_partition("2,1"));
            double worst = 0;
            for (const auto& th : std::vector<std::vector<double>>{{0.0, 1.0, 4.0}, {0.3, 2.5, 2.6}, {-2.0, 0.1, 3.0}})
                worst = std::max(worst, std::abs(flow_L(ir, k, TorusPoint::from_angles(th)).value.determinant() - 1.0));
            v.require(worst <= 1e-8, "det L = 1, worst " + std::to_string(worst));
        }
    });

    criterion(4, "series suite, tau in {(2,1), (3,1)}", 60, [](Verdict& v) {
        for (const char* tau : {"2,1", "3,1"})
            for (double k : {0.1, 0.25}) v.suite(config(tau, k), "series");
    });

    criterion(5, "weight solve, tau = (2,1), kappa in {0.05, 0.1, 0.25, -0.25}", 120, [&](Verdict& v) {
        for (double k : {0.05, 0.1, 0.25, -0.25}) v.suite(config("2,1", k), "weights", weightChecks);
    });

    criterion(6, "boundary exponent 1 - 2|kappa|, kappa in {0.1, 0.25}", 60, [](Verdict& v) {
        for (double k : {0.1, 0.25})
            v.suite(config("2,1", k), "weights", {"face jump exponent |slope - (1 - 2|kappa|)|"});
    });

    criterion(7, "orthogonality, tau = (2,1), P = 96, degree <= 2, kappa in {0.05, 0.25}", 600, [](Verdict& v) {
        for (double k : {0.05, 0.25}) {
            RunConfig c = config("2,1", k);
            c.points = 96;
            c.degree = 2;
            v.suite(c, "quadrature",
                    {"Gram off-diagonal / diagonal", "degree-0 diagonal ratios match <T,T>_0", "adjointness of x_i D_i",
                     "isometry of multiplication by x_i"});
            IrrepData ir = build_irrep(parse_partition(c.tau));
            std::string want = k < b_N(3) ? "inside proven window" : "extended window";
            v.require(window_tag(ir, k) == want, "window tag " + want);
        }
    });

    criterion(8, "FCrec residuals, tau = (2,1), kappa = 0.1", 300, [](Verdict& v) {
        v.suite(config("2,1", 0.1), "fcrec");
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
