#include "corpuscope/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "corpuscope/csv.hpp"
#include "corpuscope/errors.hpp"

namespace corpuscope {

namespace {

using nlohmann::json;

std::string lower_copy(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    return out;
}

// lowercase + collapse whitespace runs to single spaces; the dedup key
std::string normalize_for_dedup(const std::string& s) {
    std::string out;
    bool pending_space = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out += ' ';
            pending_space = false;
            out += char(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    return out;
}

bool parse_year(const std::string& text, int& year) {
    std::string t;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    long v = 0;
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        v = v * 10 + (t[i] - '0');
        if (v > 1000000) return false;
    }
    year = t[0] == '-' ? int(-v) : int(v);
    return true;
}

std::vector<std::string> split_affiliations(const std::string& field) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : field) {
        if (c == ';') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    // trim edges
    for (auto& a : out) {
        std::size_t b = 0, e = a.size();
        while (b < e && std::isspace(static_cast<unsigned char>(a[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(a[e - 1]))) --e;
        a = a.substr(b, e - b);
    }
    std::erase_if(out, [](const std::string& a) { return a.empty(); });
    return out;
}

LoadResult load_csv_records(const std::filesystem::path& path) {
    const auto rows = read_csv(path);
    if (rows.empty()) return {};

    std::unordered_map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < rows[0].size(); ++i) col[lower_copy(rows[0][i])] = i;
    for (const char* required : {"id", "title", "abstract", "year", "affiliations"}) {
        if (col.find(required) == col.end()) {
            throw ConfigError(std::string("csv: missing required column '") + required + "' in " +
                              path.string());
        }
    }

    LoadResult result;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const auto field = [&](const char* name) -> std::string {
            const std::size_t idx = col.at(name);
            return idx < row.size() ? row[idx] : std::string{};
        };
        int year = 0;
        if (!parse_year(field("year"), year)) {
            ++result.skipped_rows;
            continue;
        }
        BiblioRecord rec;
        rec.id = field("id");
        if (rec.id.empty()) rec.id = "row" + std::to_string(r);
        rec.title = field("title");
        rec.abstract_text = field("abstract");
        rec.year = year;
        rec.affiliations = split_affiliations(field("affiliations"));
        result.records.push_back(std::move(rec));
    }
    return result;
}

LoadResult load_jsonl_records(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path.string());

    LoadResult result;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            throw IoError("jsonl: parse error at line " + std::to_string(lineno) + ": " + e.what());
        }

        int year = 0;
        bool year_ok = false;
        if (obj.contains("year")) {
            if (obj["year"].is_number_integer()) {
                year = obj["year"].get<int>();
                year_ok = true;
            } else if (obj["year"].is_string()) {
                year_ok = parse_year(obj["year"].get<std::string>(), year);
            }
        }
        if (!year_ok) {
            ++result.skipped_rows;
            continue;
        }

        BiblioRecord rec;
        rec.id = obj.value("id", std::string{});
        if (rec.id.empty()) rec.id = "row" + std::to_string(lineno);
        rec.title = obj.value("title", std::string{});
        rec.abstract_text = obj.value("abstract", std::string{});
        rec.year = year;
        if (obj.contains("affiliations")) {
            const auto& aff = obj["affiliations"];
            if (aff.is_array()) {
                for (const auto& a : aff) {
                    if (a.is_string() && !a.get<std::string>().empty()) {
                        rec.affiliations.push_back(a.get<std::string>());
                    }
                }
            } else if (aff.is_string()) {
                rec.affiliations = split_affiliations(aff.get<std::string>());
            }
        }
        result.records.push_back(std::move(rec));
    }
    return result;
}

}  // namespace

RecordFormat parse_record_format(const std::string& token) {
    const std::string t = lower_copy(token);
    if (t == "csv") return RecordFormat::kCsv;
    if (t == "jsonl") return RecordFormat::kJsonl;
    throw ConfigError("unknown record format '" + token + "' (expected csv or jsonl)");
}

std::string record_format_name(RecordFormat format) {
    return format == RecordFormat::kCsv ? "csv" : "jsonl";
}

LoadResult load_records(const std::filesystem::path& path, RecordFormat format) {
    if (!std::filesystem::exists(path)) throw IoError("input file not found: " + path.string());
    return format == RecordFormat::kCsv ? load_csv_records(path) : load_jsonl_records(path);
}

std::string merge_title_abstract(const BiblioRecord& record) {
    const bool has_title = !record.title.empty();
    const bool has_abstract = !record.abstract_text.empty();
    if (!has_title && !has_abstract) {
        throw ContractError("merge_title_abstract: record '" + record.id +
                            "' has neither title nor abstract");
    }
    if (!has_abstract) return record.title;
    if (!has_title) return record.abstract_text;
    return record.title + ". " + record.abstract_text;
}

std::string DropReport::to_json() const {
    nlohmann::ordered_json j;
    j["input_count"] = input_count;
    j["kept"] = kept;
    j["dropped"] = {{"missing_text", missing_text},
                    {"out_of_span", out_of_span},
                    {"duplicate_text", duplicate_text},
                    {"duplicate_id", duplicate_id}};
    j["load_skipped_rows"] = load_skipped;
    return j.dump(2) + "\n";
}

std::pair<CorpusManifest, DropReport> filter_and_dedupe(const std::vector<BiblioRecord>& records,
                                                        YearSpan span) {
    CorpusManifest manifest;
    manifest.span = span;
    DropReport report;
    report.input_count = records.size();

    std::unordered_set<std::string> seen_text;
    std::unordered_set<std::string> seen_ids;
    for (const auto& rec : records) {
        if (rec.title.empty() && rec.abstract_text.empty()) {
            ++report.missing_text;
            continue;
        }
        if (!span.contains(rec.year)) {
            ++report.out_of_span;
            continue;
        }
        const std::string key =
            normalize_for_dedup(rec.title) + '\x1f' + normalize_for_dedup(rec.abstract_text);
        if (!seen_text.insert(key).second) {
            ++report.duplicate_text;
            continue;
        }
        if (!seen_ids.insert(rec.id).second) {
            ++report.duplicate_id;
            continue;
        }
        manifest.merged_text.push_back(merge_title_abstract(rec));
        manifest.records.push_back(rec);
    }
    report.kept = manifest.records.size();
    return {std::move(manifest), report};
}

void tag_countries(std::vector<BiblioRecord>& records, const std::vector<std::string>& countries) {
    std::vector<std::string> lowered;
    lowered.reserve(countries.size());
    for (const auto& c : countries) lowered.push_back(lower_copy(c));

    const auto is_word_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0;
    };

    for (auto& rec : records) {
        rec.country_tags.clear();
        for (std::size_t ci = 0; ci < countries.size(); ++ci) {
            const std::string& needle = lowered[ci];
            if (needle.empty()) continue;
            bool found = false;
            for (const auto& aff : rec.affiliations) {
                const std::string hay = lower_copy(aff);
                std::size_t pos = hay.find(needle);
                while (pos != std::string::npos && !found) {
                    bool ok = true;
                    if (needle.size() <= 3) {
                        // short aliases must sit on word boundaries
                        if (pos > 0 && is_word_char(hay[pos - 1])) ok = false;
                        const std::size_t end = pos + needle.size();
                        if (end < hay.size() && is_word_char(hay[end])) ok = false;
                    }
                    if (ok) found = true;
                    else pos = hay.find(needle, pos + 1);
                }
                if (found) break;
            }
            if (found) rec.country_tags.push_back(countries[ci]);
        }
    }
}

}  // namespace corpuscope
