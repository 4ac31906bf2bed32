#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "corpuscope/textprep.hpp"
#include "corpuscope/warnings.hpp"

namespace corpuscope {

struct LexConfig {
    double mtld_threshold = 0.72;
    int hdd_sample_size = 42;
    std::unordered_set<std::string> easy_words;  // lowercase; bundled list by default
    // Flesch-Kincaid grade-level coefficients
    double fk_sentence_weight = 0.39;
    double fk_syllable_weight = 11.8;
    double fk_offset = 15.59;

    static LexConfig defaults();
    void validate() const;
};

struct ReadabilityReport {
    long word_count = 0;
    long sentence_count = 0;
    double sentence_length = 0.0;   // words / sentences
    double difficult_ratio = 0.0;   // uncommon words with >= 2 syllables
    double fk_grade = 0.0;
};

struct DiversityReport {
    double ttr = 0.0;
    std::optional<double> mtld;  // empty when no factor completes
    std::optional<double> hdd;   // empty when tokens < sample size
};

// Computed on raw prose (the readability formulas are defined over natural
// text, not the stopword-filtered token stream).
ReadabilityReport readability(const std::string& text, const LexConfig& cfg,
                              WarningLog* warnings = nullptr);
ReadabilityReport readability(const std::string& text, const LexConfig& cfg,
                              const std::unordered_set<std::string>& abbreviations,
                              WarningLog* warnings);

// types / tokens; throws ContractError on an empty stream
double ttr(const TokenStream& tokens);

// Bidirectional MTLD: sequential factor counting against the running-TTR
// threshold, forward and reversed, mean of the two passes.
std::optional<double> mtld(const TokenStream& tokens, double threshold);

// HD-D: expected TTR of a random `sample_size`-token sample, via the
// hypergeometric distribution.
std::optional<double> hdd(const TokenStream& tokens, int sample_size);

struct DocLexRecord {
    std::string doc_id;
    int year = 0;
    ReadabilityReport readability;
    DiversityReport diversity;
};

struct YearlyLexRow {
    int year = 0;
    std::size_t docs = 0;
    double word_count = 0.0;
    double sentence_count = 0.0;
    double sentence_length = 0.0;
    double difficult_ratio = 0.0;
    double fk_grade = 0.0;
    double ttr = 0.0;
    double mtld = 0.0;  // mean over defined values; NaN when none defined
    double hdd = 0.0;
    std::size_t mtld_excluded = 0;
    std::size_t hdd_excluded = 0;
};

// Arithmetic mean per measure per year; undefined diversity values are
// excluded from their mean and counted. Rows sorted by year.
std::vector<YearlyLexRow> yearly_aggregate(const std::vector<DocLexRecord>& docs);

}  // namespace corpuscope
