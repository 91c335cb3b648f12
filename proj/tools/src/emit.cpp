#include <cerrno>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "jackweight_cli/cli.hpp"

namespace jw::cli {

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json matrix_json(const CMat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Json matrix_json(const RMat& m) { return matrix_json(CMat(m.cast<cplx>())); }

Json vector_json(const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(x);
    return a;
}

Json report_skeleton(const std::string& command, const RunConfig& cfg, const std::vector<std::string>& warnings) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["command"] = command;
    j["config"] = config_json(cfg);
    j["warnings"] = warnings;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing: " + std::strerror(errno));
    out << text;
    if (!out) throw Error("write to '" + path + "' failed");
}

std::string csv_matrix(const std::vector<std::string>& labels, const CMat& m) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "label";
    for (const auto& l : labels) os << ",\"" << l << "\"";
    os << "\n";
    for (int r = 0; r < m.rows(); ++r) {
        os << "\"" << labels[r] << "\"";
        for (int c = 0; c < m.cols(); ++c) {
            cplx z = m(r, c);
            os << "," << z.real();
            if (z.imag() != 0.0) os << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace jw::cli
