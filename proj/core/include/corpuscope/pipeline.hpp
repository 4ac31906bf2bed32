#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "corpuscope/dtm.hpp"
#include "corpuscope/embed.hpp"
#include "corpuscope/ingest.hpp"
#include "corpuscope/lexmetrics.hpp"
#include "corpuscope/report.hpp"
#include "corpuscope/topics.hpp"
#include "corpuscope/warnings.hpp"

namespace corpuscope {

struct StageSet {
    bool trend = true;
    bool ca = true;
    bool lex = true;
    bool similarity = true;
    bool topics = true;
    bool evolution = true;

    bool any() const { return trend || ca || lex || similarity || topics || evolution; }
};

StageSet parse_stage_list(const std::string& comma_separated);

struct PipelineConfig {
    std::filesystem::path input_path;
    RecordFormat input_format = RecordFormat::kCsv;
    YearSpan span;
    StageSet stages;
    std::uint64_t seed = 0;
    std::filesystem::path out_dir = "out";
    bool force = false;
    int threads = 1;

    std::string highlight_country;  // empty: single-series trend chart

    // word-list overrides (bundled lists by default)
    std::filesystem::path stopword_file;
    std::filesystem::path abbreviation_file;
    std::filesystem::path easy_word_file;
    std::filesystem::path country_file;

    DtmFilterConfig dtm_filter;
    std::size_t ca_dims = 2;

    double mtld_threshold = 0.72;
    int hdd_sample_size = 42;

    EmbedConfig embed;
    bool similarity_median = false;

    TopicModelConfig topics;
    CoherenceConfig coherence;
    double frex_weight = 0.7;
    int sweep_k_min = 3;
    int sweep_k_max = 20;

    std::string trend_basis = "auto";  // auto | linear | bspline
    double ci_level = 0.95;

    static PipelineConfig from_json_file(const std::filesystem::path& path);
    static PipelineConfig from_json_text(const std::string& text,
                                         const std::filesystem::path& base_dir);
    // stable serialization used for the config echo and cache keys
    std::string canonical_json() const;
    void validate() const;
};

struct TrendTable {
    std::vector<int> years;
    std::vector<long> totals;
    std::vector<long> highlighted;
    bool has_highlight = false;
};

// Per-year publication counts, plus counts of records tagged with the
// highlight country when one is configured.
TrendTable publications_trend(const CorpusManifest& manifest, const std::string& highlight_country,
                              WarningLog* warnings = nullptr);

// Executes the enabled stages in dependency order, emitting tables, plots,
// models, the drop report and report.json under the output directory.
AnalysisReport run_pipeline(const PipelineConfig& cfg);

// `topics sweep`: fits one model per K over the configured range and emits
// the coherence table and chart.
AnalysisReport run_sweep(const PipelineConfig& cfg);

// `ingest` standalone: load, filter, dedupe; emits the drop report only.
AnalysisReport run_ingest_only(const PipelineConfig& cfg);

}  // namespace corpuscope
