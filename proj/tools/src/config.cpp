#include <cmath>
#include <fstream>

#include "jackweight/parallel.hpp"
#include "jackweight_cli/cli.hpp"

namespace jw::cli {

void apply_config_json(RunConfig& cfg, const Json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "tau") {
                cfg.tau = value.get<std::string>();
            } else if (key == "kappa") {
                cfg.kappa = value.get<double>();
            } else if (key == "points") {
                cfg.points = value.get<int>();
            } else if (key == "degree") {
                cfg.degree = value.get<int>();
            } else if (key == "flowTol") {
                cfg.flowTol = value.get<double>();
            } else if (key == "quadFlowTol") {
                cfg.quadFlowTol = value.get<double>();
            } else if (key == "tailTol") {
                cfg.tailTol = value.get<double>();
            } else if (key == "gramTol") {
                cfg.gramTol = value.get<double>();
            } else if (key == "extrapolate") {
                cfg.extrapolate = value.get<bool>();
            } else if (key == "threads") {
                cfg.threads = value.get<int>();
            } else if (key == "seed") {
                cfg.seed = value.get<std::uint64_t>();
            } else if (key == "output") {
                cfg.output = value.get<std::string>();
            } else if (key == "csv") {
                cfg.csv = value.get<std::string>();
            } else {
                throw ConfigError("unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config type error: ") + e.what());
    }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("cannot parse config file '" + path + "': " + e.what());
    }
    apply_config_json(cfg, j);
}

std::vector<std::string> validate(const RunConfig& cfg) {
    std::vector<std::string> warnings;
    Partition tau = parse_partition(cfg.tau);
    if (!std::isfinite(cfg.kappa) || std::abs(cfg.kappa) >= 0.5)
        throw ConfigError("kappa must satisfy |kappa| < 1/2");
    if (cfg.points < 4) throw ConfigError("points must be at least 4");
    if (cfg.degree < 0) throw ConfigError("degree must be non-negative");
    if (cfg.flowTol <= 0 || cfg.quadFlowTol <= 0 || cfg.tailTol <= 0 || cfg.gramTol <= 0)
        throw ConfigError("tolerances must be positive");
    if (std::abs(cfg.kappa) >= 1.0 / tau.max_hook())
        warnings.push_back("|kappa| >= 1/h_tau: positivity of the form is not guaranteed");
    return warnings;
}

Json config_json(const RunConfig& cfg) {
    Json j;
    j["tau"] = cfg.tau;
    j["kappa"] = cfg.kappa;
    j["points"] = cfg.points;
    j["degree"] = cfg.degree;
    j["flowTol"] = cfg.flowTol;
    j["quadFlowTol"] = cfg.quadFlowTol;
    j["tailTol"] = cfg.tailTol;
    j["gramTol"] = cfg.gramTol;
    j["extrapolate"] = cfg.extrapolate;
    j["threads"] = cfg.threads;
    j["seed"] = cfg.seed;
    j["output"] = cfg.output;
    j["csv"] = cfg.csv;
    return j;
}

int effective_threads(const RunConfig& cfg) { return cfg.threads > 0 ? cfg.threads : default_threads(); }

}  // namespace jw::cli
