#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corpuscope/dtm.hpp"
#include "corpuscope/matrix.hpp"
#include "corpuscope/warnings.hpp"

namespace corpuscope {

// Year x term cross-tabulation feeding the correspondence analysis.
struct ContingencyTable {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    Matrix counts;
    double grand_total = 0.0;

    void validate() const;  // throws ContractError on zero rows/cols/total
};

struct CAResult {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    Matrix row_coords;  // rows x dims, principal coordinates
    Matrix col_coords;  // cols x dims, principal coordinates (symmetric map)
    std::vector<double> singular_values;  // descending, in [0, 1]
    std::vector<double> row_masses;
    std::vector<double> col_masses;
    double total_inertia = 0.0;  // chi-square / n
    std::size_t dims = 0;
};

// Chi-square standardized residuals, truncated SVD, principal coordinates
// for both rows and columns. Deterministic for a given seed.
CAResult correspondence_analysis(const ContingencyTable& table, std::size_t dims = 2,
                                 std::uint64_t seed = 0);

// Builds the year x term table: one yearly slice per corpus year, the
// per-year frequency/document-share filters applied to each slice, surviving
// counts assembled over the union of surviving terms. Years whose slice ends
// up empty are skipped with a warning.
ContingencyTable build_year_term_table(const DocTermMatrix& dtm, const DtmFilterConfig& cfg,
                                       WarningLog* warnings = nullptr);

}  // namespace corpuscope
