#include "corpuscope/dtm.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <tuple>

#include "corpuscope/csv.hpp"
#include "corpuscope/errors.hpp"

namespace corpuscope {

Vocabulary Vocabulary::from_sorted_terms(std::vector<std::string> sorted_terms) {
    Vocabulary v;
    v.terms = std::move(sorted_terms);
    v.index.reserve(v.terms.size());
    for (std::size_t i = 0; i < v.terms.size(); ++i) v.index[v.terms[i]] = i;
    if (v.index.size() != v.terms.size()) throw ContractError("vocabulary: duplicate terms");
    return v;
}

std::size_t Vocabulary::find(const std::string& term) const {
    const auto it = index.find(term);
    return it == index.end() ? npos : it->second;
}

DocTermMatrix DocTermMatrix::from_triplets(
    std::vector<std::string> doc_ids, std::vector<int> years, Vocabulary vocab,
    const std::vector<std::tuple<std::size_t, std::size_t, int>>& triplets) {
    if (doc_ids.size() != years.size()) {
        throw ContractError("dtm: doc_ids and years size mismatch");
    }
    DocTermMatrix m;
    m.doc_ids_ = std::move(doc_ids);
    m.years_ = std::move(years);
    m.vocab_ = std::move(vocab);

    const std::size_t n_docs = m.doc_ids_.size();
    const std::size_t n_terms = m.vocab_.size();

    auto sorted = triplets;
    std::sort(sorted.begin(), sorted.end());

    m.row_offsets_.assign(n_docs + 1, 0);
    m.cells_.reserve(sorted.size());
    for (const auto& [doc, term, count] : sorted) {
        if (doc >= n_docs || term >= n_terms || count <= 0) {
            throw ContractError("dtm: bad triplet");
        }
        ++m.row_offsets_[doc + 1];
        m.cells_.push_back({term, count});
        m.total_count_ += count;
    }
    for (std::size_t d = 0; d < n_docs; ++d) m.row_offsets_[d + 1] += m.row_offsets_[d];

    // column mirror
    m.col_offsets_.assign(n_terms + 1, 0);
    for (const auto& [doc, term, count] : sorted) ++m.col_offsets_[term + 1];
    for (std::size_t t = 0; t < n_terms; ++t) m.col_offsets_[t + 1] += m.col_offsets_[t];
    m.col_cells_.resize(sorted.size());
    std::vector<std::size_t> next(m.col_offsets_.begin(), m.col_offsets_.end() - 1);
    for (const auto& [doc, term, count] : sorted) {
        m.col_cells_[next[term]++] = {doc, count};
    }
    return m;
}

long long DocTermMatrix::term_total(std::size_t term) const {
    long long total = 0;
    for (const auto& cell : col(term)) total += cell.count;
    return total;
}

int DocTermMatrix::count_at(std::size_t doc, const std::string& term) const {
    const std::size_t t = vocab_.find(term);
    if (t == Vocabulary::npos) return 0;
    for (const auto& cell : row(doc)) {
        if (cell.term == t) return cell.count;
    }
    return 0;
}

DocTermMatrix build_dtm(const std::vector<TokenStream>& streams, const std::vector<int>& years) {
    if (streams.size() != years.size()) throw ContractError("build_dtm: years size mismatch");
    {
        std::set<std::string> ids;
        for (const auto& s : streams) {
            if (!ids.insert(s.doc_id).second) {
                throw ContractError("build_dtm: duplicate doc id '" + s.doc_id + "'");
            }
        }
    }

    std::set<std::string> term_set;
    for (const auto& s : streams) term_set.insert(s.tokens.begin(), s.tokens.end());
    Vocabulary vocab = Vocabulary::from_sorted_terms({term_set.begin(), term_set.end()});

    std::vector<std::tuple<std::size_t, std::size_t, int>> triplets;
    std::vector<std::string> doc_ids;
    doc_ids.reserve(streams.size());
    for (std::size_t d = 0; d < streams.size(); ++d) {
        doc_ids.push_back(streams[d].doc_id);
        std::map<std::size_t, int> counts;
        for (const auto& tok : streams[d].tokens) ++counts[vocab.find(tok)];
        for (const auto& [term, count] : counts) triplets.emplace_back(d, term, count);
    }
    return DocTermMatrix::from_triplets(std::move(doc_ids), years, std::move(vocab), triplets);
}

namespace {

// Rebuild keeping `keep_doc` rows and dropping any all-zero columns.
DocTermMatrix select_rows(const DocTermMatrix& dtm, const std::vector<std::size_t>& keep_docs) {
    std::vector<bool> term_used(dtm.term_count(), false);
    for (std::size_t d : keep_docs) {
        for (const auto& cell : dtm.row(d)) term_used[cell.term] = true;
    }
    std::vector<std::size_t> term_map(dtm.term_count(), Vocabulary::npos);
    std::vector<std::string> terms;
    for (std::size_t t = 0; t < dtm.term_count(); ++t) {
        if (term_used[t]) {
            term_map[t] = terms.size();
            terms.push_back(dtm.vocab().terms[t]);
        }
    }

    std::vector<std::string> doc_ids;
    std::vector<int> years;
    std::vector<std::tuple<std::size_t, std::size_t, int>> triplets;
    for (std::size_t row = 0; row < keep_docs.size(); ++row) {
        const std::size_t d = keep_docs[row];
        doc_ids.push_back(dtm.doc_ids()[d]);
        years.push_back(dtm.years()[d]);
        for (const auto& cell : dtm.row(d)) {
            triplets.emplace_back(row, term_map[cell.term], cell.count);
        }
    }
    return DocTermMatrix::from_triplets(std::move(doc_ids), std::move(years),
                                        Vocabulary::from_sorted_terms(std::move(terms)), triplets);
}

}  // namespace

DocTermMatrix yearly_slice(const DocTermMatrix& dtm, int year, WarningLog* warnings) {
    std::vector<std::size_t> keep;
    for (std::size_t d = 0; d < dtm.doc_count(); ++d) {
        if (dtm.years()[d] == year) keep.push_back(d);
    }
    if (keep.empty()) {
        warn(warnings, "yearly_slice: no documents in year " + std::to_string(year));
    }
    return select_rows(dtm, keep);
}

DocTermMatrix filter_terms(const DocTermMatrix& dtm, const DtmFilterConfig& cfg,
                           WarningLog* warnings) {
    if (cfg.min_year_count < 0) throw ConfigError("filter_terms: min_year_count must be >= 0");
    if (cfg.max_doc_fraction <= 0.0 || cfg.max_doc_fraction > 1.0) {
        throw ConfigError("filter_terms: max_doc_fraction must be in (0, 1]");
    }

    const double n_docs = double(dtm.doc_count());
    std::vector<std::size_t> term_map(dtm.term_count(), Vocabulary::npos);
    std::vector<std::string> terms;
    for (std::size_t t = 0; t < dtm.term_count(); ++t) {
        const long long freq = cfg.count_documents_not_occurrences
                                   ? static_cast<long long>(dtm.doc_frequency(t))
                                   : dtm.term_total(t);
        if (freq < cfg.min_year_count) continue;
        if (n_docs > 0 && double(dtm.doc_frequency(t)) / n_docs > cfg.max_doc_fraction) continue;
        term_map[t] = terms.size();
        terms.push_back(dtm.vocab().terms[t]);
    }
    if (terms.empty() && dtm.term_count() > 0) {
        warn(warnings, "filter_terms: all terms filtered out");
    }

    std::vector<std::tuple<std::size_t, std::size_t, int>> triplets;
    for (std::size_t d = 0; d < dtm.doc_count(); ++d) {
        for (const auto& cell : dtm.row(d)) {
            if (term_map[cell.term] != Vocabulary::npos) {
                triplets.emplace_back(d, term_map[cell.term], cell.count);
            }
        }
    }
    return DocTermMatrix::from_triplets(dtm.doc_ids(), dtm.years(),
                                        Vocabulary::from_sorted_terms(std::move(terms)), triplets);
}

void write_dtm_dump(const DocTermMatrix& dtm, const std::filesystem::path& csv_path,
                    const std::filesystem::path& vocab_path,
                    const std::filesystem::path& docs_path) {
    {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) throw IoError("cannot write " + csv_path.string());
        write_csv_row(out, {"doc_id", "term", "count"});
        for (std::size_t d = 0; d < dtm.doc_count(); ++d) {
            for (const auto& cell : dtm.row(d)) {
                write_csv_row(out, {dtm.doc_ids()[d], dtm.vocab().terms[cell.term],
                                    std::to_string(cell.count)});
            }
        }
    }
    {
        std::ofstream out(vocab_path, std::ios::binary);
        if (!out) throw IoError("cannot write " + vocab_path.string());
        for (const auto& t : dtm.vocab().terms) out << t << '\n';
    }
    {
        std::ofstream out(docs_path, std::ios::binary);
        if (!out) throw IoError("cannot write " + docs_path.string());
        write_csv_row(out, {"doc_id", "year"});
        for (std::size_t d = 0; d < dtm.doc_count(); ++d) {
            write_csv_row(out, {dtm.doc_ids()[d], std::to_string(dtm.years()[d])});
        }
    }
}

DocTermMatrix read_dtm_dump(const std::filesystem::path& csv_path,
                            const std::filesystem::path& vocab_path,
                            const std::filesystem::path& docs_path) {
    std::vector<std::string> terms;
    {
        std::ifstream in(vocab_path);
        if (!in) throw IoError("cannot open " + vocab_path.string());
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) terms.push_back(line);
        }
    }
    Vocabulary vocab = Vocabulary::from_sorted_terms(std::move(terms));

    std::vector<std::string> doc_ids;
    std::vector<int> years;
    std::unordered_map<std::string, std::size_t> doc_index;
    const auto doc_rows = read_csv(docs_path);
    for (std::size_t i = 1; i < doc_rows.size(); ++i) {
        const auto& row = doc_rows[i];
        if (row.size() < 2) continue;
        doc_index[row[0]] = doc_ids.size();
        doc_ids.push_back(row[0]);
        years.push_back(std::stoi(row[1]));
    }

    std::vector<std::tuple<std::size_t, std::size_t, int>> triplets;
    const auto cell_rows = read_csv(csv_path);
    for (std::size_t i = 1; i < cell_rows.size(); ++i) {
        const auto& row = cell_rows[i];
        if (row.size() < 3) continue;
        const auto d = doc_index.find(row[0]);
        const std::size_t t = vocab.find(row[1]);
        if (d == doc_index.end() || t == Vocabulary::npos) {
            throw IoError("dtm dump: unknown doc or term in " + csv_path.string());
        }
        triplets.emplace_back(d->second, t, std::stoi(row[2]));
    }
    return DocTermMatrix::from_triplets(std::move(doc_ids), std::move(years), std::move(vocab),
                                        triplets);
}

}  // namespace corpuscope
