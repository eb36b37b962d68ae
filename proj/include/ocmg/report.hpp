/// @file report.hpp
/// @brief Result rows and deterministic CSV/JSON emission.

#ifndef OCMG_REPORT_HPP
#define OCMG_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ocmg/sparse.hpp"

namespace ocmg {

/// One (parameter tuple, metric) result. The h column carries the grid as
/// cells per side (h = 1/n_cells) to keep the output integer-exact.
struct ResultRow {
    std::string experiment;
    double beta = 0.0;
    index_t n_cells = 0;
    int nu1 = 0;
    int nu2 = 0;
    std::string metric;  // mu | rho_lfa | rho_hat | iters
    double value = 0.0;
    double runtime_ms = 0.0;  // stays 0 unless timing is requested, keeping output byte-stable
    std::uint64_t seed = 0;
};

/// Header "experiment,beta,h,nu1,nu2,metric,value,runtime_ms,seed", one line
/// per row, LF endings, %.12g numeric formatting.
std::string to_csv(const std::vector<ResultRow>& rows);

/// JSON array of row objects with the same field order.
std::string to_json(const std::vector<ResultRow>& rows);

/// Writes text to path ("-" or empty = stdout); throws std::runtime_error on
/// I/O failure.
void write_text(const std::string& path, const std::string& text);

}  // namespace ocmg

#endif  // OCMG_REPORT_HPP
