#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "corpuscope/textprep.hpp"
#include "corpuscope/warnings.hpp"

namespace corpuscope {

// Sorted, unique term list with a term -> column lookup.
struct Vocabulary {
    std::vector<std::string> terms;
    std::unordered_map<std::string, std::size_t> index;

    static Vocabulary from_sorted_terms(std::vector<std::string> sorted_terms);
    std::size_t size() const { return terms.size(); }
    // npos when absent
    std::size_t find(const std::string& term) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// Sparse document x term count matrix kept in both row-major (CSR) and
// column-major (CSC) layouts so either iteration direction is O(non-zeros).
// Immutable after construction; slicing and filtering build new matrices.
class DocTermMatrix {
public:
    struct RowCell {
        std::size_t term = 0;
        int count = 0;
    };
    struct ColCell {
        std::size_t doc = 0;
        int count = 0;
    };

    DocTermMatrix() = default;
    // triplets must be unique (doc, term) pairs with positive counts
    static DocTermMatrix from_triplets(std::vector<std::string> doc_ids, std::vector<int> years,
                                       Vocabulary vocab,
                                       const std::vector<std::tuple<std::size_t, std::size_t, int>>& triplets);

    std::size_t doc_count() const { return doc_ids_.size(); }
    std::size_t term_count() const { return vocab_.size(); }
    long long total_count() const { return total_count_; }

    const std::vector<std::string>& doc_ids() const { return doc_ids_; }
    const std::vector<int>& years() const { return years_; }
    const Vocabulary& vocab() const { return vocab_; }

    std::span<const RowCell> row(std::size_t doc) const {
        return {cells_.data() + row_offsets_[doc], row_offsets_[doc + 1] - row_offsets_[doc]};
    }
    std::span<const ColCell> col(std::size_t term) const {
        return {col_cells_.data() + col_offsets_[term], col_offsets_[term + 1] - col_offsets_[term]};
    }

    long long term_total(std::size_t term) const;
    std::size_t doc_frequency(std::size_t term) const {
        return col_offsets_[term + 1] - col_offsets_[term];
    }
    int count_at(std::size_t doc, const std::string& term) const;

private:
    std::vector<std::string> doc_ids_;
    std::vector<int> years_;
    Vocabulary vocab_;
    std::vector<std::size_t> row_offsets_;
    std::vector<RowCell> cells_;
    std::vector<std::size_t> col_offsets_;
    std::vector<ColCell> col_cells_;
    long long total_count_ = 0;
};

// Per-year term filters; the shipped defaults follow the per-year frequency
// and document-share cutoffs used for the correspondence analysis input.
struct DtmFilterConfig {
    int min_year_count = 50;
    double max_doc_fraction = 0.60;
    // alternative reading of the frequency cutoff: drop by the number of
    // documents containing the term instead of its total count
    bool count_documents_not_occurrences = false;
};

DocTermMatrix build_dtm(const std::vector<TokenStream>& streams, const std::vector<int>& years);

// Rows restricted to one year, all-zero columns removed.
DocTermMatrix yearly_slice(const DocTermMatrix& dtm, int year, WarningLog* warnings = nullptr);

// Drops terms below the frequency cutoff or above the document-share cutoff,
// both evaluated on the given (typically per-year) matrix. Never removes
// documents.
DocTermMatrix filter_terms(const DocTermMatrix& dtm, const DtmFilterConfig& cfg,
                           WarningLog* warnings = nullptr);

// Inspection dump: CSV of (doc_id, term, count), a one-term-per-line vocab
// sidecar, and a (doc_id, year) sidecar so the matrix round-trips.
void write_dtm_dump(const DocTermMatrix& dtm, const std::filesystem::path& csv_path,
                    const std::filesystem::path& vocab_path,
                    const std::filesystem::path& docs_path);
DocTermMatrix read_dtm_dump(const std::filesystem::path& csv_path,
                            const std::filesystem::path& vocab_path,
                            const std::filesystem::path& docs_path);

}  // namespace corpuscope
