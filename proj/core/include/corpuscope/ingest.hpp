#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace corpuscope {

// One publication's metadata as loaded from an export file.
struct BiblioRecord {
    std::string id;
    std::string title;          // empty when absent
    std::string abstract_text;  // empty when absent
    int year = 0;
    std::vector<std::string> affiliations;
    std::vector<std::string> country_tags;  // derived, may be empty
};

struct YearSpan {
    int first = 2000;
    int last = 2020;
    bool contains(int y) const { return y >= first && y <= last; }
};

enum class RecordFormat { kCsv, kJsonl };
RecordFormat parse_record_format(const std::string& token);
std::string record_format_name(RecordFormat format);

struct LoadResult {
    std::vector<BiblioRecord> records;
    std::size_t skipped_rows = 0;  // rows with an unparseable year
};

// Reads records from a CSV (header: id,title,abstract,year,affiliations with
// ';'-separated affiliations) or a JSONL file with the same field names.
LoadResult load_records(const std::filesystem::path& path, RecordFormat format);

// title + ". " + abstract when both present, the sole present field
// otherwise. Throws ContractError when both are empty.
std::string merge_title_abstract(const BiblioRecord& record);

struct DropReport {
    std::size_t input_count = 0;
    std::size_t kept = 0;
    std::size_t missing_text = 0;    // neither title nor abstract
    std::size_t out_of_span = 0;     // year outside the configured span
    std::size_t duplicate_text = 0;  // normalized title+abstract seen before
    std::size_t duplicate_id = 0;    // id seen before
    std::size_t load_skipped = 0;    // carried over from LoadResult

    std::string to_json() const;
};

struct CorpusManifest {
    std::vector<BiblioRecord> records;
    YearSpan span;
    std::vector<std::string> merged_text;  // parallel to records, never empty

    std::size_t size() const { return records.size(); }
};

// Drops text-less, out-of-span and duplicate records (first occurrence wins,
// input order preserved) and merges title+abstract for the survivors.
std::pair<CorpusManifest, DropReport> filter_and_dedupe(const std::vector<BiblioRecord>& records,
                                                        YearSpan span);

// Case-insensitive substring match of each country name against each
// affiliation string; names of three characters or fewer ("UK", "USA") must
// sit on word boundaries.
void tag_countries(std::vector<BiblioRecord>& records, const std::vector<std::string>& countries);

}  // namespace corpuscope
