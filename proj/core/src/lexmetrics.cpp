#include "corpuscope/lexmetrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

#include "corpuscope/errors.hpp"
#include "corpuscope/wordlists.hpp"

namespace corpuscope {

LexConfig LexConfig::defaults() {
    LexConfig cfg;
    cfg.easy_words.insert(bundled_easy_words().begin(), bundled_easy_words().end());
    return cfg;
}

void LexConfig::validate() const {
    if (mtld_threshold <= 0.0 || mtld_threshold >= 1.0) {
        throw ConfigError("lex: mtld_threshold must be in (0, 1)");
    }
    if (hdd_sample_size < 1) throw ConfigError("lex: hdd_sample_size must be >= 1");
    if (fk_sentence_weight <= 0.0 || fk_syllable_weight <= 0.0 || fk_offset <= 0.0) {
        throw ConfigError("lex: Flesch-Kincaid coefficients must be positive");
    }
}

namespace {

std::vector<std::string> whitespace_words(const std::string& text) {
    std::vector<std::string> words;
    std::string cur;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) words.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) words.push_back(std::move(cur));
    return words;
}

std::string alpha_core(const std::string& word) {
    std::string out;
    for (char c : word) {
        if (c >= 'a' && c <= 'z') out += c;
        else if (c >= 'A' && c <= 'Z') out += char(c - 'A' + 'a');
    }
    return out;
}

}  // namespace

ReadabilityReport readability(const std::string& text, const LexConfig& cfg,
                              WarningLog* warnings) {
    return readability(text, cfg, default_abbreviations(), warnings);
}

ReadabilityReport readability(const std::string& text, const LexConfig& cfg,
                              const std::unordered_set<std::string>& abbreviations,
                              WarningLog* warnings) {
    cfg.validate();
    const auto words = whitespace_words(text);
    if (words.empty()) throw ContractError("readability: empty text");

    ReadabilityReport report;
    report.word_count = long(words.size());
    report.sentence_count = long(split_sentences(text, abbreviations).size());
    if (report.sentence_count == 0) {
        warn(warnings, "readability: no sentence terminator found, counting one sentence");
        report.sentence_count = 1;
    }

    long syllable_total = 0;
    long difficult = 0;
    for (const auto& w : words) {
        const std::string core = alpha_core(w);
        // tokens with no letters still count as one spoken unit
        const int syllables = core.empty() ? 1 : count_syllables(core);
        syllable_total += syllables;
        if (!core.empty() && syllables >= 2 && cfg.easy_words.count(core) == 0) ++difficult;
    }

    report.sentence_length = double(report.word_count) / double(report.sentence_count);
    report.difficult_ratio = double(difficult) / double(report.word_count);
    report.fk_grade = cfg.fk_sentence_weight * report.sentence_length +
                      cfg.fk_syllable_weight * (double(syllable_total) / double(report.word_count)) -
                      cfg.fk_offset;
    return report;
}

double ttr(const TokenStream& tokens) {
    if (tokens.tokens.empty()) throw ContractError("ttr: empty token stream");
    std::unordered_set<std::string> types(tokens.tokens.begin(), tokens.tokens.end());
    return double(types.size()) / double(tokens.tokens.size());
}

namespace {

// One directional MTLD pass; returns the factor total (complete + partial),
// 0 when the running TTR never reaches the threshold.
template <typename Iter>
double mtld_factor_total(Iter begin, Iter end, double threshold) {
    double factors = 0.0;
    std::unordered_map<std::string, int> seen;
    std::size_t segment_tokens = 0;
    double segment_ttr = 1.0;
    for (Iter it = begin; it != end; ++it) {
        ++segment_tokens;
        ++seen[*it];
        segment_ttr = double(seen.size()) / double(segment_tokens);
        if (segment_ttr <= threshold) {
            factors += 1.0;
            seen.clear();
            segment_tokens = 0;
            segment_ttr = 1.0;
        }
    }
    if (segment_tokens > 0) {
        factors += (1.0 - segment_ttr) / (1.0 - threshold);
    }
    return factors;
}

}  // namespace

std::optional<double> mtld(const TokenStream& tokens, double threshold) {
    if (threshold <= 0.0 || threshold >= 1.0) {
        throw ConfigError("mtld: threshold must be in (0, 1)");
    }
    if (tokens.tokens.empty()) throw ContractError("mtld: empty token stream");

    const double n = double(tokens.tokens.size());
    const double forward = mtld_factor_total(tokens.tokens.begin(), tokens.tokens.end(), threshold);
    const double reverse = mtld_factor_total(tokens.tokens.rbegin(), tokens.tokens.rend(), threshold);
    if (forward <= 0.0 || reverse <= 0.0) return std::nullopt;
    return (n / forward + n / reverse) / 2.0;
}

std::optional<double> hdd(const TokenStream& tokens, int sample_size) {
    if (sample_size < 1) throw ConfigError("hdd: sample_size must be >= 1");
    if (tokens.tokens.empty()) throw ContractError("hdd: empty token stream");
    const long long n_tokens = static_cast<long long>(tokens.tokens.size());
    if (n_tokens < sample_size) return std::nullopt;

    std::map<std::string, long long> counts;
    for (const auto& t : tokens.tokens) ++counts[t];

    // P(type absent from the sample) as a product of ratios; every factor is
    // in [0, 1], so this neither overflows nor needs log-space at any N
    double sum = 0.0;
    for (const auto& [type, count] : counts) {
        const long long absent = n_tokens - count;
        double p_zero = 0.0;
        if (absent >= sample_size) {
            p_zero = 1.0;
            for (int i = 0; i < sample_size; ++i) {
                p_zero *= double(absent - i) / double(n_tokens - i);
            }
        }
        sum += (1.0 - p_zero) / double(sample_size);
    }
    return sum;
}

std::vector<YearlyLexRow> yearly_aggregate(const std::vector<DocLexRecord>& docs) {
    std::map<int, std::vector<const DocLexRecord*>> by_year;
    for (const auto& d : docs) by_year[d.year].push_back(&d);

    std::vector<YearlyLexRow> rows;
    for (const auto& [year, group] : by_year) {
        YearlyLexRow row;
        row.year = year;
        row.docs = group.size();
        double mtld_sum = 0.0, hdd_sum = 0.0;
        std::size_t mtld_n = 0, hdd_n = 0;
        for (const auto* d : group) {
            row.word_count += double(d->readability.word_count);
            row.sentence_count += double(d->readability.sentence_count);
            row.sentence_length += d->readability.sentence_length;
            row.difficult_ratio += d->readability.difficult_ratio;
            row.fk_grade += d->readability.fk_grade;
            row.ttr += d->diversity.ttr;
            if (d->diversity.mtld) {
                mtld_sum += *d->diversity.mtld;
                ++mtld_n;
            } else {
                ++row.mtld_excluded;
            }
            if (d->diversity.hdd) {
                hdd_sum += *d->diversity.hdd;
                ++hdd_n;
            } else {
                ++row.hdd_excluded;
            }
        }
        const double n = double(group.size());
        row.word_count /= n;
        row.sentence_count /= n;
        row.sentence_length /= n;
        row.difficult_ratio /= n;
        row.fk_grade /= n;
        row.ttr /= n;
        row.mtld = mtld_n > 0 ? mtld_sum / double(mtld_n)
                              : std::numeric_limits<double>::quiet_NaN();
        row.hdd = hdd_n > 0 ? hdd_sum / double(hdd_n)
                            : std::numeric_limits<double>::quiet_NaN();
        rows.push_back(row);
    }
    return rows;
}

}  // namespace corpuscope
