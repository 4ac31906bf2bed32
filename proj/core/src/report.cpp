#include "corpuscope/report.hpp"

#include <fstream>

#include <json.hpp>

#include "corpuscope/errors.hpp"
#include "corpuscope/pipeline.hpp"
#include "corpuscope/sha256.hpp"

namespace corpuscope {

OutputWriter::OutputWriter(std::filesystem::path out_dir, bool force)
    : out_dir_(std::move(out_dir)), force_(force) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir_, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir_.string());
}

std::filesystem::path OutputWriter::resolve(const std::string& rel_path) const {
    return out_dir_ / rel_path;
}

bool OutputWriter::exists(const std::string& rel_path) const {
    return std::filesystem::exists(resolve(rel_path));
}

void OutputWriter::write_file(const std::string& rel_path, const std::string& content) {
    const auto path = resolve(rel_path);
    if (!force_ && std::filesystem::exists(path)) {
        throw IoError("refusing to overwrite " + path.string() + " (use --force)");
    }
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(content.data(), std::streamsize(content.size()));
    if (!out) throw IoError("short write to " + path.string());
    out.close();
    manifest_.push_back({rel_path, sha256_hex(content)});
}

std::string AnalysisReport::to_json() const {
    nlohmann::ordered_json j;
    j["ok"] = ok();
    j["config"] = nlohmann::ordered_json::parse(config_echo.empty() ? "{}" : config_echo);
    auto stage_list = nlohmann::ordered_json::array();
    for (const auto& s : stages) {
        nlohmann::ordered_json e;
        e["name"] = s.name;
        e["status"] = s.status;
        if (!s.detail.empty()) e["detail"] = s.detail;
        e["seconds"] = s.seconds;
        e["from_cache"] = s.from_cache;
        stage_list.push_back(e);
    }
    j["stages"] = stage_list;
    auto file_list = nlohmann::ordered_json::array();
    for (const auto& f : files) {
        file_list.push_back({{"path", f.path}, {"sha256", f.sha256}});
    }
    j["files"] = file_list;
    j["warnings"] = warnings;
    return j.dump(2) + "\n";
}

namespace {

std::filesystem::path resolve_relative(const std::string& p,
                                       const std::filesystem::path& base_dir) {
    if (p.empty()) return {};
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base_dir / path;
}

}  // namespace

PipelineConfig PipelineConfig::from_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json_text(text, path.parent_path());
}

PipelineConfig PipelineConfig::from_json_text(const std::string& text,
                                              const std::filesystem::path& base_dir) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }

    PipelineConfig cfg;
    if (j.contains("input")) {
        cfg.input_path = resolve_relative(j["input"].value("path", std::string{}), base_dir);
        cfg.input_format = parse_record_format(j["input"].value("format", std::string("csv")));
    }
    if (j.contains("span") && j["span"].is_array() && j["span"].size() == 2) {
        cfg.span.first = j["span"][0].get<int>();
        cfg.span.last = j["span"][1].get<int>();
    }
    if (j.contains("stages")) {
        std::string joined;
        for (const auto& s : j["stages"]) {
            if (!joined.empty()) joined += ',';
            joined += s.get<std::string>();
        }
        cfg.stages = parse_stage_list(joined);
    }
    cfg.seed = j.value("seed", std::uint64_t(0));
    if (j.contains("out_dir")) {
        cfg.out_dir = resolve_relative(j["out_dir"].get<std::string>(), base_dir);
    }
    cfg.threads = j.value("threads", 1);
    cfg.highlight_country = j.value("highlight_country", std::string{});

    if (j.contains("word_lists")) {
        const auto& w = j["word_lists"];
        cfg.stopword_file = resolve_relative(w.value("stopwords", std::string{}), base_dir);
        cfg.abbreviation_file = resolve_relative(w.value("abbreviations", std::string{}), base_dir);
        cfg.easy_word_file = resolve_relative(w.value("easy_words", std::string{}), base_dir);
        cfg.country_file = resolve_relative(w.value("countries", std::string{}), base_dir);
    }
    if (j.contains("dtm")) {
        const auto& d = j["dtm"];
        cfg.dtm_filter.min_year_count = d.value("min_year_count", 50);
        cfg.dtm_filter.max_doc_fraction = d.value("max_doc_fraction", 0.60);
        cfg.dtm_filter.count_documents_not_occurrences = d.value("count_documents", false);
    }
    if (j.contains("ca")) cfg.ca_dims = j["ca"].value("dims", 2);
    if (j.contains("lex")) {
        cfg.mtld_threshold = j["lex"].value("mtld_threshold", 0.72);
        cfg.hdd_sample_size = j["lex"].value("hdd_sample_size", 42);
    }
    if (j.contains("embed")) {
        const auto& e = j["embed"];
        cfg.embed.dimension = e.value("dimension", 100);
        cfg.embed.epochs = e.value("epochs", 20);
        cfg.embed.negative_samples = e.value("negative_samples", 5);
        cfg.embed.initial_learning_rate = e.value("initial_learning_rate", 0.025);
        cfg.embed.noise_exponent = e.value("noise_exponent", 0.75);
        cfg.embed.min_term_count = e.value("min_term_count", 5);
    }
    if (j.contains("similarity")) {
        cfg.similarity_median = j["similarity"].value("aggregate", std::string("mean")) == "median";
    }
    if (j.contains("topics")) {
        const auto& t = j["topics"];
        cfg.topics.k = t.value("k", 12);
        cfg.topics.alpha = t.value("alpha", 0.0);
        cfg.topics.beta = t.value("beta", 0.01);
        cfg.topics.iterations = t.value("iterations", 1000);
        cfg.topics.burn_in = t.value("burn_in", 200);
        cfg.topics.average_after_burn_in = t.value("average_after_burn_in", false);
        cfg.topics.debug_checks = t.value("debug_checks", false);
    }
    if (j.contains("coherence")) {
        const auto& c = j["coherence"];
        cfg.coherence.top_n = c.value("top_n", 10);
        cfg.coherence.window_size = c.value("window_size", 110);
        cfg.coherence.epsilon = c.value("epsilon", 1e-12);
    }
    cfg.frex_weight = j.value("frex_weight", 0.7);
    if (j.contains("sweep")) {
        cfg.sweep_k_min = j["sweep"].value("k_min", 3);
        cfg.sweep_k_max = j["sweep"].value("k_max", 20);
    }
    if (j.contains("evolution")) {
        cfg.trend_basis = j["evolution"].value("basis", std::string("auto"));
        cfg.ci_level = j["evolution"].value("ci_level", 0.95);
    }
    return cfg;
}

std::string PipelineConfig::canonical_json() const {
    nlohmann::ordered_json j;
    j["input"] = {{"path", input_path.string()}, {"format", record_format_name(input_format)}};
    j["span"] = {span.first, span.last};
    std::vector<std::string> stage_names;
    if (stages.trend) stage_names.push_back("trend");
    if (stages.ca) stage_names.push_back("ca");
    if (stages.lex) stage_names.push_back("lex");
    if (stages.similarity) stage_names.push_back("similarity");
    if (stages.topics) stage_names.push_back("topics");
    if (stages.evolution) stage_names.push_back("evolution");
    j["stages"] = stage_names;
    j["seed"] = seed;
    j["out_dir"] = out_dir.string();
    j["threads"] = threads;
    j["highlight_country"] = highlight_country;
    j["word_lists"] = {{"stopwords", stopword_file.string()},
                       {"abbreviations", abbreviation_file.string()},
                       {"easy_words", easy_word_file.string()},
                       {"countries", country_file.string()}};
    j["dtm"] = {{"min_year_count", dtm_filter.min_year_count},
                {"max_doc_fraction", dtm_filter.max_doc_fraction},
                {"count_documents", dtm_filter.count_documents_not_occurrences}};
    j["ca"] = {{"dims", ca_dims}};
    j["lex"] = {{"mtld_threshold", mtld_threshold}, {"hdd_sample_size", hdd_sample_size}};
    j["embed"] = {{"dimension", embed.dimension},
                  {"epochs", embed.epochs},
                  {"negative_samples", embed.negative_samples},
                  {"initial_learning_rate", embed.initial_learning_rate},
                  {"noise_exponent", embed.noise_exponent},
                  {"min_term_count", embed.min_term_count}};
    j["similarity"] = {{"aggregate", similarity_median ? "median" : "mean"}};
    j["topics"] = {{"k", topics.k},
                   {"alpha", topics.alpha},
                   {"beta", topics.beta},
                   {"iterations", topics.iterations},
                   {"burn_in", topics.burn_in},
                   {"average_after_burn_in", topics.average_after_burn_in},
                   {"debug_checks", topics.debug_checks}};
    j["coherence"] = {{"top_n", coherence.top_n},
                      {"window_size", coherence.window_size},
                      {"epsilon", coherence.epsilon}};
    j["frex_weight"] = frex_weight;
    j["sweep"] = {{"k_min", sweep_k_min}, {"k_max", sweep_k_max}};
    j["evolution"] = {{"basis", trend_basis}, {"ci_level", ci_level}};
    return j.dump();
}

void PipelineConfig::validate() const {
    if (input_path.empty()) throw ConfigError("config: input.path is required");
    if (span.first > span.last) throw ConfigError("config: span must be [first <= last]");
    if (threads < 1) throw ConfigError("config: threads must be >= 1");
    if (ci_level <= 0.0 || ci_level >= 1.0) throw ConfigError("config: ci_level must be in (0, 1)");
    if (frex_weight <= 0.0 || frex_weight >= 1.0) {
        throw ConfigError("config: frex_weight must be in (0, 1)");
    }
    if (trend_basis != "auto" && trend_basis != "linear" && trend_basis != "bspline") {
        throw ConfigError("config: evolution.basis must be auto, linear or bspline");
    }
    if (ca_dims < 1) throw ConfigError("config: ca.dims must be >= 1");
}

StageSet parse_stage_list(const std::string& comma_separated) {
    StageSet set;
    set.trend = set.ca = set.lex = set.similarity = set.topics = set.evolution = false;
    std::string token;
    const auto apply = [&](const std::string& name) {
        if (name.empty()) return;
        if (name == "trend") set.trend = true;
        else if (name == "ca") set.ca = true;
        else if (name == "lex") set.lex = true;
        else if (name == "similarity" || name == "sim") set.similarity = true;
        else if (name == "topics") set.topics = true;
        else if (name == "evolution" || name == "evolve") set.evolution = true;
        else throw ConfigError("unknown stage '" + name + "'");
    };
    for (char c : comma_separated) {
        if (c == ',') {
            apply(token);
            token.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            token += c;
        }
    }
    apply(token);
    return set;
}

}  // namespace corpuscope
