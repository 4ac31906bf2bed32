#include "corpuscope/ca.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "corpuscope/errors.hpp"
#include "corpuscope/svd.hpp"

namespace corpuscope {

void ContingencyTable::validate() const {
    const std::size_t rows = counts.rows(), cols = counts.cols();
    if (rows == 0 || cols == 0) throw ContractError("contingency table: empty");
    if (row_labels.size() != rows || col_labels.size() != cols) {
        throw ContractError("contingency table: label size mismatch");
    }
    double total = 0.0;
    for (double v : counts.data()) {
        if (v < 0.0 || !std::isfinite(v)) throw ContractError("contingency table: bad count");
        total += v;
    }
    if (total <= 0.0) throw ContractError("contingency table: zero grand total");
    for (std::size_t i = 0; i < rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < cols; ++j) s += counts(i, j);
        if (s == 0.0) throw ContractError("contingency table: all-zero row " + row_labels[i]);
    }
    for (std::size_t j = 0; j < cols; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows; ++i) s += counts(i, j);
        if (s == 0.0) throw ContractError("contingency table: all-zero column " + col_labels[j]);
    }
}

CAResult correspondence_analysis(const ContingencyTable& table, std::size_t dims,
                                 std::uint64_t seed) {
    table.validate();
    const std::size_t rows = table.counts.rows(), cols = table.counts.cols();
    if (dims == 0 || dims > std::min(rows, cols)) {
        throw ConfigError("correspondence_analysis: dims must be in [1, min(rows, cols)]");
    }

    double n = 0.0;
    for (double v : table.counts.data()) n += v;

    // correspondence matrix and masses
    std::vector<double> row_mass(rows, 0.0), col_mass(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double p = table.counts(i, j) / n;
            row_mass[i] += p;
            col_mass[j] += p;
        }
    }

    // standardized residuals S_ij = (P_ij - r_i c_j) / sqrt(r_i c_j)
    Matrix s(rows, cols);
    double inertia = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double expected = row_mass[i] * col_mass[j];
            const double resid = (table.counts(i, j) / n - expected) / std::sqrt(expected);
            s(i, j) = resid;
            inertia += resid * resid;
        }
    }

    SvdResult svd = truncated_svd(s, dims, seed);

    CAResult result;
    result.row_labels = table.row_labels;
    result.col_labels = table.col_labels;
    result.row_masses = row_mass;
    result.col_masses = col_mass;
    result.total_inertia = inertia;
    result.dims = dims;
    result.singular_values = svd.singular_values;
    for (double& sv : result.singular_values) sv = std::clamp(sv, 0.0, 1.0);

    // principal coordinates on both sides (symmetric map)
    result.row_coords = Matrix(rows, dims);
    result.col_coords = Matrix(cols, dims);
    for (std::size_t d = 0; d < dims; ++d) {
        const double sigma = result.singular_values[d];
        for (std::size_t i = 0; i < rows; ++i) {
            result.row_coords(i, d) = svd.u(i, d) * sigma / std::sqrt(row_mass[i]);
        }
        for (std::size_t j = 0; j < cols; ++j) {
            result.col_coords(j, d) = svd.v(j, d) * sigma / std::sqrt(col_mass[j]);
        }
    }
    return result;
}

ContingencyTable build_year_term_table(const DocTermMatrix& dtm, const DtmFilterConfig& cfg,
                                       WarningLog* warnings) {
    std::set<int> years(dtm.years().begin(), dtm.years().end());

    // per-year filtered counts
    std::vector<std::pair<int, std::map<std::string, long long>>> year_counts;
    std::set<std::string> surviving_terms;
    for (int year : years) {
        const DocTermMatrix slice = yearly_slice(dtm, year, warnings);
        if (slice.doc_count() == 0) continue;
        const DocTermMatrix filtered = filter_terms(slice, cfg, warnings);
        if (filtered.term_count() == 0) {
            warn(warnings, "ca: year " + std::to_string(year) + " has no terms after filtering");
            continue;
        }
        std::map<std::string, long long> counts;
        for (std::size_t t = 0; t < filtered.term_count(); ++t) {
            counts[filtered.vocab().terms[t]] = filtered.term_total(t);
            surviving_terms.insert(filtered.vocab().terms[t]);
        }
        year_counts.emplace_back(year, std::move(counts));
    }

    ContingencyTable table;
    for (const auto& [year, counts] : year_counts) table.row_labels.push_back(std::to_string(year));
    table.col_labels.assign(surviving_terms.begin(), surviving_terms.end());
    std::map<std::string, std::size_t> col_index;
    for (std::size_t j = 0; j < table.col_labels.size(); ++j) col_index[table.col_labels[j]] = j;

    table.counts = Matrix(year_counts.size(), table.col_labels.size(), 0.0);
    for (std::size_t i = 0; i < year_counts.size(); ++i) {
        for (const auto& [term, count] : year_counts[i].second) {
            table.counts(i, col_index[term]) = double(count);
            table.grand_total += double(count);
        }
    }
    return table;
}

}  // namespace corpuscope
