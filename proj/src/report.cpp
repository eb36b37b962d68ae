#include "ocmg/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"

namespace ocmg {

namespace {
std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}
}  // namespace

std::string to_csv(const std::vector<ResultRow>& rows) {
    std::string out = "experiment,beta,h,nu1,nu2,metric,value,runtime_ms,seed\n";
    for (const ResultRow& r : rows) {
        out += r.experiment;
        out += ',';
        out += fmt_double(r.beta);
        out += ',';
        out += std::to_string(r.n_cells);
        out += ',';
        out += std::to_string(r.nu1);
        out += ',';
        out += std::to_string(r.nu2);
        out += ',';
        out += r.metric;
        out += ',';
        out += fmt_double(r.value);
        out += ',';
        out += fmt_double(r.runtime_ms);
        out += ',';
        out += std::to_string(r.seed);
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<ResultRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ResultRow& r : rows) {
        nlohmann::ordered_json obj;
        obj["experiment"] = r.experiment;
        obj["beta"] = r.beta;
        obj["h"] = r.n_cells;
        obj["nu1"] = r.nu1;
        obj["nu2"] = r.nu2;
        obj["metric"] = r.metric;
        obj["value"] = r.value;
        obj["runtime_ms"] = r.runtime_ms;
        obj["seed"] = r.seed;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace ocmg
