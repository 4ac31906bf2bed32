#include "corpuscope/pipeline.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "corpuscope/ca.hpp"
#include "corpuscope/csv.hpp"
#include "corpuscope/errors.hpp"
#include "corpuscope/evolution.hpp"
#include "corpuscope/plots.hpp"
#include "corpuscope/sha256.hpp"
#include "corpuscope/wordlists.hpp"

namespace corpuscope {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// cache files round-trip doubles exactly; emitted tables use format_g9
std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class StageTimer {
public:
    StageTimer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string join_list(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// Lazy shared state threaded through the stages. Heavy intermediates are
// cached under out/cache keyed by content hashes, so re-runs that change one
// stage's config recompute only downstream work.
struct Context {
    const PipelineConfig& cfg;
    OutputWriter& writer;
    WarningLog warnings;
    std::filesystem::path cache_dir;

    std::string input_hash;
    std::string ingest_key;
    std::string tokens_key;
    std::string dtm_key;
    std::string embed_key;
    std::string topics_key;

    StopwordList stopwords;
    std::unordered_set<std::string> abbreviations;
    std::unordered_set<std::string> easy_words;
    std::vector<std::string> countries;

    std::optional<CorpusManifest> manifest;
    DropReport drop_report;
    std::size_t load_skipped = 0;
    bool ingest_from_cache = false;

    std::optional<std::vector<TokenStream>> filtered_streams;  // stopword-removed
    std::optional<DocTermMatrix> dtm;

    std::optional<EmbeddingModel> embedding;
    bool embedding_from_cache = false;

    struct TopicsState {
        TopicModel model;
        std::vector<TopicQualityRow> quality;
        bool from_cache = false;
    };
    std::optional<TopicsState> topics;

    explicit Context(const PipelineConfig& config, OutputWriter& out)
        : cfg(config), writer(out), cache_dir(out.out_dir() / "cache") {}

    std::filesystem::path cache_entry(const std::string& name, const std::string& key) const {
        return cache_dir / (name + "-" + key.substr(0, 16));
    }
};

// ---------------------------------------------------------------------------
// word lists and cache keys

void resolve_word_lists(Context& ctx) {
    const auto& cfg = ctx.cfg;
    ctx.stopwords = cfg.stopword_file.empty() ? StopwordList::bundled()
                                              : StopwordList::from_file(cfg.stopword_file);
    if (cfg.abbreviation_file.empty()) {
        ctx.abbreviations = default_abbreviations();
    } else {
        ctx.abbreviations = load_abbreviations(cfg.abbreviation_file);
    }
    if (cfg.easy_word_file.empty()) {
        ctx.easy_words.insert(bundled_easy_words().begin(), bundled_easy_words().end());
    } else {
        for (auto& w : load_word_list(cfg.easy_word_file)) ctx.easy_words.insert(std::move(w));
    }
    ctx.countries =
        cfg.country_file.empty() ? bundled_country_names() : load_word_list(cfg.country_file);
}

std::string hash_word_set(const std::unordered_set<std::string>& words) {
    std::vector<std::string> sorted(words.begin(), words.end());
    std::sort(sorted.begin(), sorted.end());
    Sha256 h;
    for (const auto& w : sorted) {
        h.update(w);
        h.update("\n", 1);
    }
    return h.hex_digest();
}

void compute_cache_keys(Context& ctx) {
    const auto& cfg = ctx.cfg;
    ctx.input_hash = sha256_file_hex(cfg.input_path);

    {
        Sha256 h;
        h.update(ctx.input_hash);
        h.update(record_format_name(cfg.input_format));
        h.update(std::to_string(cfg.span.first) + ":" + std::to_string(cfg.span.last));
        Sha256 ch;
        for (const auto& c : ctx.countries) ch.update(c + "\n");
        h.update(ch.hex_digest());
        ctx.ingest_key = h.hex_digest();
    }
    {
        Sha256 h;
        h.update(ctx.ingest_key);
        h.update(hash_word_set(ctx.stopwords.words));
        ctx.tokens_key = h.hex_digest();
    }
    ctx.dtm_key = sha256_hex(ctx.tokens_key + "|dtm");
    {
        ordered_json e = {{"dimension", cfg.embed.dimension},
                          {"epochs", cfg.embed.epochs},
                          {"negative_samples", cfg.embed.negative_samples},
                          {"initial_learning_rate", cfg.embed.initial_learning_rate},
                          {"noise_exponent", cfg.embed.noise_exponent},
                          {"min_term_count", cfg.embed.min_term_count},
                          {"seed", cfg.seed}};
        ctx.embed_key = sha256_hex(ctx.tokens_key + "|embed|" + e.dump());
    }
    {
        ordered_json t = {{"k", cfg.topics.k},
                          {"alpha", cfg.topics.alpha},
                          {"beta", cfg.topics.beta},
                          {"iterations", cfg.topics.iterations},
                          {"burn_in", cfg.topics.burn_in},
                          {"average_after_burn_in", cfg.topics.average_after_burn_in},
                          {"seed", cfg.seed},
                          {"top_n", cfg.coherence.top_n},
                          {"window_size", cfg.coherence.window_size},
                          {"epsilon", cfg.coherence.epsilon},
                          {"frex_weight", cfg.frex_weight}};
        ctx.topics_key = sha256_hex(ctx.dtm_key + "|topics|" + t.dump());
    }
}

// ---------------------------------------------------------------------------
// ingest (with manifest cache)

void save_manifest_cache(const Context& ctx) {
    const auto dir = ctx.cache_entry("manifest", ctx.ingest_key);
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / "records.csv", std::ios::binary);
    write_csv_row(out, {"id", "title", "abstract", "year", "affiliations", "countries"});
    for (const auto& rec : ctx.manifest->records) {
        write_csv_row(out, {rec.id, rec.title, rec.abstract_text, std::to_string(rec.year),
                            join_list(rec.affiliations, ';'), join_list(rec.country_tags, ';')});
    }
    ordered_json j;
    j["input_count"] = ctx.drop_report.input_count;
    j["kept"] = ctx.drop_report.kept;
    j["missing_text"] = ctx.drop_report.missing_text;
    j["out_of_span"] = ctx.drop_report.out_of_span;
    j["duplicate_text"] = ctx.drop_report.duplicate_text;
    j["duplicate_id"] = ctx.drop_report.duplicate_id;
    j["load_skipped"] = ctx.drop_report.load_skipped;
    std::ofstream meta(dir / "drop.json", std::ios::binary);
    meta << j.dump(2) << '\n';
}

bool load_manifest_cache(Context& ctx) {
    const auto dir = ctx.cache_entry("manifest", ctx.ingest_key);
    if (!std::filesystem::exists(dir / "records.csv") || !std::filesystem::exists(dir / "drop.json")) {
        return false;
    }
    try {
        CorpusManifest manifest;
        manifest.span = ctx.cfg.span;
        const auto split_semicolons = [](const std::string& field) {
            std::vector<std::string> parts;
            std::string cur;
            for (char c : field) {

                if (c == ';') {
                    if (!cur.empty()) parts.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            if (!cur.empty()) parts.push_back(cur);
            return parts;
        };
        const auto rows = read_csv(dir / "records.csv");
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto& row = rows[i];
            if (row.size() < 6) continue;
            BiblioRecord rec;
            rec.id = row[0];
            rec.title = row[1];
            rec.abstract_text = row[2];
            rec.year = std::stoi(row[3]);
            rec.affiliations = split_semicolons(row[4]);
            rec.country_tags = split_semicolons(row[5]);
            manifest.merged_text.push_back(merge_title_abstract(rec));
            manifest.records.push_back(std::move(rec));
        }
        std::ifstream meta(dir / "drop.json");
        const json j = json::parse(meta);
        ctx.drop_report.input_count = j.value("input_count", std::size_t(0));
        ctx.drop_report.kept = j.value("kept", std::size_t(0));
        ctx.drop_report.missing_text = j.value("missing_text", std::size_t(0));
        ctx.drop_report.out_of_span = j.value("out_of_span", std::size_t(0));
        ctx.drop_report.duplicate_text = j.value("duplicate_text", std::size_t(0));
        ctx.drop_report.duplicate_id = j.value("duplicate_id", std::size_t(0));
        ctx.drop_report.load_skipped = j.value("load_skipped", std::size_t(0));
        ctx.manifest = std::move(manifest);
        return true;
    } catch (const std::exception& e) {
        warn(&ctx.warnings, std::string("cache: manifest entry unreadable, recomputing: ") +
                                e.what());
        return false;
    }
}

void ensure_manifest(Context& ctx) {
    if (ctx.manifest) return;
    if (load_manifest_cache(ctx)) {
        ctx.ingest_from_cache = true;
        return;
    }
    LoadResult loaded = load_records(ctx.cfg.input_path, ctx.cfg.input_format);
    tag_countries(loaded.records, ctx.countries);
    auto [manifest, report] = filter_and_dedupe(loaded.records, ctx.cfg.span);
    report.load_skipped = loaded.skipped_rows;
    if (loaded.skipped_rows > 0) {
        warn(&ctx.warnings, "ingest: skipped " + std::to_string(loaded.skipped_rows) +
                                " rows with unparseable year");
    }
    ctx.manifest = std::move(manifest);
    ctx.drop_report = report;
    save_manifest_cache(ctx);
}

// ---------------------------------------------------------------------------
// token streams + dtm (cached)

void save_tokens_cache(const Context& ctx) {
    const auto dir = ctx.cache_entry("tokens", ctx.tokens_key);
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / "filtered.tsv", std::ios::binary);
    for (const auto& s : *ctx.filtered_streams) {
        out << s.doc_id << '\t' << join_list(s.tokens, ' ') << '\n';
    }
}

bool load_tokens_cache(Context& ctx) {
    const auto path = ctx.cache_entry("tokens", ctx.tokens_key) / "filtered.tsv";
    if (!std::filesystem::exists(path)) return false;
    std::ifstream in(path, std::ios::binary);
    std::vector<TokenStream> streams;
    std::string line;
    while (std::getline(in, line)) {
        const auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        TokenStream s;
        s.doc_id = line.substr(0, tab);
        std::string token;
        for (std::size_t i = tab + 1; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ' ') {
                if (!token.empty()) s.tokens.push_back(std::move(token));
                token.clear();
            } else {
                token += line[i];
            }
        }
        streams.push_back(std::move(s));
    }
    if (streams.size() != ctx.manifest->size()) return false;
    ctx.filtered_streams = std::move(streams);
    return true;
}

void ensure_streams(Context& ctx) {
    ensure_manifest(ctx);
    if (ctx.filtered_streams) return;
    if (load_tokens_cache(ctx)) return;
    std::vector<TokenStream> filtered;
    filtered.reserve(ctx.manifest->size());
    for (std::size_t i = 0; i < ctx.manifest->size(); ++i) {
        filtered.push_back(normalize_and_tokenize(ctx.manifest->merged_text[i], ctx.stopwords,
                                                  ctx.manifest->records[i].id));
    }
    ctx.filtered_streams = std::move(filtered);
    save_tokens_cache(ctx);
}

void ensure_dtm(Context& ctx) {
    ensure_streams(ctx);
    if (ctx.dtm) return;
    const auto dir = ctx.cache_entry("dtm", ctx.dtm_key);
    if (std::filesystem::exists(dir / "dtm.csv")) {
        try {
            ctx.dtm = read_dtm_dump(dir / "dtm.csv", dir / "vocab.txt", dir / "docs.csv");
            return;
        } catch (const std::exception& e) {
            warn(&ctx.warnings, std::string("cache: dtm entry unreadable, recomputing: ") + e.what());
        }
    }
    std::vector<int> years;
    years.reserve(ctx.manifest->size());
    for (const auto& rec : ctx.manifest->records) years.push_back(rec.year);
    ctx.dtm = build_dtm(*ctx.filtered_streams, years);
    std::filesystem::create_directories(dir);
    write_dtm_dump(*ctx.dtm, dir / "dtm.csv", dir / "vocab.txt", dir / "docs.csv");
}

// ---------------------------------------------------------------------------
// embedding model (cached at full precision)

void ensure_embedding(Context& ctx) {
    ensure_streams(ctx);
    if (ctx.embedding) return;
    const auto dir = ctx.cache_entry("embed", ctx.embed_key);
    if (std::filesystem::exists(dir / "vectors.csv")) {
        try {
            ctx.embedding = read_embedding_dump(dir / "vectors.csv", dir / "config.json");
            ctx.embedding_from_cache = true;
            return;
        } catch (const std::exception& e) {
            warn(&ctx.warnings,
                 std::string("cache: embedding entry unreadable, recomputing: ") + e.what());
        }
    }
    EmbedConfig cfg = ctx.cfg.embed;
    cfg.seed = ctx.cfg.seed;
    ctx.embedding = train_doc_embeddings(*ctx.filtered_streams, cfg);
    std::filesystem::create_directories(dir);
    // full-precision cache copy
    {
        std::ofstream out(dir / "vectors.csv", std::ios::binary);
        std::vector<std::string> header = {"doc_id"};
        for (std::size_t i = 0; i < ctx.embedding->doc_vectors.cols(); ++i) {
            header.push_back("v" + std::to_string(i));
        }
        write_csv_row(out, header);
        for (std::size_t d = 0; d < ctx.embedding->doc_ids.size(); ++d) {
            std::vector<std::string> row = {ctx.embedding->doc_ids[d]};
            for (std::size_t i = 0; i < ctx.embedding->doc_vectors.cols(); ++i) {
                row.push_back(format_full(ctx.embedding->doc_vectors(d, i)));
            }
            write_csv_row(out, row);
        }
    }
    {
        ordered_json j;
        j["dimension"] = cfg.dimension;
        j["epochs"] = cfg.epochs;
        j["negative_samples"] = cfg.negative_samples;
        j["initial_learning_rate"] = cfg.initial_learning_rate;
        j["noise_exponent"] = cfg.noise_exponent;
        j["min_term_count"] = cfg.min_term_count;
        j["seed"] = cfg.seed;
        j["final_loss"] = ctx.embedding->final_loss;
        std::ofstream out(dir / "config.json", std::ios::binary);
        out << j.dump(2) << '\n';
    }
}

// ---------------------------------------------------------------------------
// topic model (cached at full precision)

void save_topics_cache(const Context& ctx) {
    const auto& state = *ctx.topics;
    const auto dir = ctx.cache_entry("topics", ctx.topics_key);
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "phi.csv", std::ios::binary);
        for (std::size_t t = 0; t < state.model.num_topics(); ++t) {
            std::vector<std::string> row;
            for (std::size_t w = 0; w < state.model.vocab_size(); ++w) {
                row.push_back(format_full(state.model.phi(t, w)));
            }
            write_csv_row(out, row);
        }
    }
    {
        std::ofstream out(dir / "theta.csv", std::ios::binary);
        for (std::size_t d = 0; d < state.model.doc_count(); ++d) {
            std::vector<std::string> row = {state.model.doc_ids[d]};
            for (std::size_t t = 0; t < state.model.num_topics(); ++t) {
                row.push_back(format_full(state.model.theta(d, t)));
            }
            write_csv_row(out, row);
        }
    }
    {
        ordered_json j;
        j["k"] = state.model.config.k;
        j["alpha"] = state.model.config.alpha;
        j["beta"] = state.model.config.beta;
        j["iterations"] = state.model.config.iterations;
        j["burn_in"] = state.model.config.burn_in;
        j["average_after_burn_in"] = state.model.config.average_after_burn_in;
        j["seed"] = state.model.config.seed;
        j["vocab"] = state.model.vocab;
        j["doc_indices"] = state.model.doc_indices;
        auto trace = ordered_json::array();
        for (double v : state.model.log_likelihood_trace) trace.push_back(format_full(v));
        j["log_likelihood_trace"] = trace;
        auto quality = ordered_json::array();
        for (const auto& q : state.quality) {
            quality.push_back({{"topic", q.topic},
                               {"coherence", format_full(q.coherence)},
                               {"exclusivity", format_full(q.exclusivity)},
                               {"proportion", format_full(q.proportion)}});
        }
        j["quality"] = quality;
        std::ofstream out(dir / "model.json", std::ios::binary);
        out << j.dump(2) << '\n';
    }
}

bool load_topics_cache(Context& ctx) {
    const auto dir = ctx.cache_entry("topics", ctx.topics_key);
    if (!std::filesystem::exists(dir / "model.json")) return false;
    try {
        Context::TopicsState state;
        std::ifstream meta(dir / "model.json");
        const json j = json::parse(meta);
        state.model.config.k = j.at("k").get<int>();
        state.model.config.alpha = j.at("alpha").get<double>();
        state.model.config.beta = j.at("beta").get<double>();
        state.model.config.iterations = j.at("iterations").get<int>();
        state.model.config.burn_in = j.at("burn_in").get<int>();
        state.model.config.average_after_burn_in = j.at("average_after_burn_in").get<bool>();
        state.model.config.seed = j.at("seed").get<std::uint64_t>();
        state.model.vocab = j.at("vocab").get<std::vector<std::string>>();
        state.model.doc_indices = j.at("doc_indices").get<std::vector<std::size_t>>();
        for (const auto& v : j.at("log_likelihood_trace")) {
            state.model.log_likelihood_trace.push_back(std::stod(v.get<std::string>()));
        }
        for (const auto& q : j.at("quality")) {
            TopicQualityRow row;
            row.topic = q.at("topic").get<int>();
            row.coherence = std::stod(q.at("coherence").get<std::string>());
            row.exclusivity = std::stod(q.at("exclusivity").get<std::string>());
            row.proportion = std::stod(q.at("proportion").get<std::string>());
            state.quality.push_back(row);
        }

        const auto phi_rows = read_csv(dir / "phi.csv");
        const std::size_t k = phi_rows.size();
        const std::size_t v = state.model.vocab.size();
        if (k != std::size_t(state.model.config.k)) return false;
        state.model.phi = Matrix(k, v);
        for (std::size_t t = 0; t < k; ++t) {
            for (std::size_t w = 0; w < v; ++w) state.model.phi(t, w) = std::stod(phi_rows[t][w]);
        }
        const auto theta_rows = read_csv(dir / "theta.csv");
        state.model.theta = Matrix(theta_rows.size(), k);
        for (std::size_t d = 0; d < theta_rows.size(); ++d) {
            state.model.doc_ids.push_back(theta_rows[d][0]);
            for (std::size_t t = 0; t < k; ++t) {
                state.model.theta(d, t) = std::stod(theta_rows[d][t + 1]);
            }
        }
        state.from_cache = true;
        ctx.topics = std::move(state);
        return true;
    } catch (const std::exception& e) {
        warn(&ctx.warnings, std::string("cache: topics entry unreadable, recomputing: ") + e.what());
        return false;
    }
}

void ensure_topics(Context& ctx) {
    if (ctx.topics) return;
    ensure_dtm(ctx);
    if (load_topics_cache(ctx)) return;

    Context::TopicsState state;
    TopicModelConfig cfg = ctx.cfg.topics;
    cfg.seed = ctx.cfg.seed;
    state.model = fit_lda(*ctx.dtm, cfg, &ctx.warnings);
    state.quality = topic_quality(state.model, *ctx.filtered_streams, ctx.cfg.coherence,
                                  ctx.cfg.frex_weight, &ctx.warnings);
    ctx.topics = std::move(state);
    save_topics_cache(ctx);
}

// true when a previously cached topic model exists for the current config
bool topics_cache_available(const Context& ctx) {
    return std::filesystem::exists(ctx.cache_entry("topics", ctx.topics_key) / "model.json");
}

void emit_artifacts(Context& ctx, const StageArtifacts& artifacts) {
    for (const auto& [rel_path, content] : artifacts.files) {
        ctx.writer.write_file(rel_path, content);
    }
}

void run_stage(Context& ctx, AnalysisReport& report, const std::string& name, bool enabled,
               const std::string& blocked_reason, const std::function<bool(Context&)>& body) {
    StageOutcome outcome;
    outcome.name = name;
    if (!enabled) {
        outcome.status = "disabled";
        report.stages.push_back(outcome);
        return;
    }
    if (!blocked_reason.empty()) {
        outcome.status = "skipped";
        outcome.detail = blocked_reason;
        report.stages.push_back(outcome);
        return;
    }
    StageTimer timer;
    try {
        outcome.from_cache = body(ctx);
        outcome.status = "ok";
    } catch (const std::exception& e) {
        outcome.status = "failed";
        outcome.detail = e.what();
    }
    outcome.seconds = timer.seconds();
    report.stages.push_back(outcome);
}

}  // namespace

TrendTable publications_trend(const CorpusManifest& manifest, const std::string& highlight_country,
                              WarningLog* warnings) {
    if (manifest.records.empty()) throw ContractError("publications_trend: empty manifest");

    TrendTable table;
    table.has_highlight = !highlight_country.empty();

    std::map<int, std::pair<long, long>> per_year;
    bool highlight_seen = false;
    for (const auto& rec : manifest.records) {
        auto& [total, tagged] = per_year[rec.year];
        ++total;
        if (table.has_highlight) {
            for (const auto& tag : rec.country_tags) {
                if (tag.size() == highlight_country.size() &&
                    std::equal(tag.begin(), tag.end(), highlight_country.begin(),
                               [](char a, char b) {
                                   return std::tolower(static_cast<unsigned char>(a)) ==
                                          std::tolower(static_cast<unsigned char>(b));
                               })) {
                    ++tagged;
                    highlight_seen = true;
                    break;
                }
            }
        }
    }
    for (const auto& [year, counts] : per_year) {
        table.years.push_back(year);
        table.totals.push_back(counts.first);
        table.highlighted.push_back(counts.second);
    }
    if (table.has_highlight && !highlight_seen) {
        warn(warnings, "trend: no record tagged with country '" + highlight_country +
                           "', highlighted series is all zero");
    }
    return table;
}

AnalysisReport run_pipeline(const PipelineConfig& cfg) {
    cfg.validate();
    if (!cfg.stages.any()) throw ConfigError("config: at least one stage must be enabled");

    AnalysisReport report;
    report.config_echo = cfg.canonical_json();

    OutputWriter writer(cfg.out_dir, cfg.force);
    Context ctx(cfg, writer);

    // ingest is the root dependency of every stage
    bool ingest_ok = false;
    {
        StageOutcome outcome;
        outcome.name = "ingest";
        StageTimer timer;
        try {
            resolve_word_lists(ctx);
            compute_cache_keys(ctx);
            ensure_manifest(ctx);
            writer.write_file("drop_report.json", ctx.drop_report.to_json());
            outcome.status = "ok";
            outcome.from_cache = ctx.ingest_from_cache;
            ingest_ok = true;
        } catch (const std::exception& e) {
            outcome.status = "failed";
            outcome.detail = e.what();
        }
        outcome.seconds = timer.seconds();
        report.stages.push_back(outcome);
    }
    const std::string blocked = ingest_ok ? "" : "ingest failed";

    run_stage(ctx, report, "trend", cfg.stages.trend, blocked, [](Context& c) {
        const TrendTable table =
            publications_trend(*c.manifest, c.cfg.highlight_country, &c.warnings);
        emit_artifacts(c, trend_artifacts(table, c.cfg.highlight_country));
        return false;
    });

    run_stage(ctx, report, "ca", cfg.stages.ca, blocked, [](Context& c) {
        ensure_dtm(c);
        const ContingencyTable table =
            build_year_term_table(*c.dtm, c.cfg.dtm_filter, &c.warnings);
        const CAResult result = correspondence_analysis(table, c.cfg.ca_dims, c.cfg.seed);
        emit_artifacts(c, ca_artifacts(result));
        return false;
    });

    run_stage(ctx, report, "lex", cfg.stages.lex, blocked, [](Context& c) {
        ensure_manifest(c);
        LexConfig lex;
        lex.mtld_threshold = c.cfg.mtld_threshold;
        lex.hdd_sample_size = c.cfg.hdd_sample_size;
        lex.easy_words = c.easy_words;

        std::vector<DocLexRecord> docs;
        docs.reserve(c.manifest->size());
        const StopwordList no_stopwords = StopwordList::empty();
        for (std::size_t i = 0; i < c.manifest->size(); ++i) {
            const auto& rec = c.manifest->records[i];
            // abstracts carry the prose; fall back to the merged text when absent
            const std::string& text =
                rec.abstract_text.empty() ? c.manifest->merged_text[i] : rec.abstract_text;
            DocLexRecord doc;
            doc.doc_id = rec.id;
            doc.year = rec.year;
            doc.readability = readability(text, lex, c.abbreviations, &c.warnings);
            const TokenStream tokens = normalize_and_tokenize(text, no_stopwords, rec.id);
            if (!tokens.tokens.empty()) {
                doc.diversity.ttr = ttr(tokens);
                doc.diversity.mtld = mtld(tokens, lex.mtld_threshold);
                doc.diversity.hdd = hdd(tokens, lex.hdd_sample_size);
            } else {
                warn(&c.warnings, "lex: document '" + rec.id + "' has no alphabetic tokens");
                continue;
            }
            docs.push_back(std::move(doc));
        }
        emit_artifacts(c, lex_artifacts(yearly_aggregate(docs)));
        return false;
    });

    run_stage(ctx, report, "similarity", cfg.stages.similarity, blocked, [](Context& c) {
        ensure_embedding(c);
        std::vector<int> years;
        for (const auto& rec : c.manifest->records) years.push_back(rec.year);
        const SimilarityMatrix matrix = year_similarity_matrix(
            *c.embedding, years, &c.warnings,
            c.cfg.similarity_median ? SimilarityAggregate::kMedian : SimilarityAggregate::kMean);
        const auto series = consecutive_year_series(matrix, &c.warnings);
        emit_artifacts(c, similarity_artifacts(matrix, series));
        // emitted model dump (9-digit contract copy)
        std::ostringstream vec_csv;
        std::vector<std::string> header = {"doc_id"};
        for (std::size_t i = 0; i < c.embedding->doc_vectors.cols(); ++i) {
            header.push_back("v" + std::to_string(i));
        }
        write_csv_row(vec_csv, header);
        for (std::size_t d = 0; d < c.embedding->doc_ids.size(); ++d) {
            std::vector<std::string> row = {c.embedding->doc_ids[d]};
            for (std::size_t i = 0; i < c.embedding->doc_vectors.cols(); ++i) {
                row.push_back(format_g9(c.embedding->doc_vectors(d, i)));
            }
            write_csv_row(vec_csv, row);
        }
        c.writer.write_file("models/embedding_vectors.csv", vec_csv.str());
        ordered_json j;
        j["dimension"] = c.embedding->config.dimension;
        j["epochs"] = c.embedding->config.epochs;
        j["negative_samples"] = c.embedding->config.negative_samples;
        j["initial_learning_rate"] = c.embedding->config.initial_learning_rate;
        j["noise_exponent"] = c.embedding->config.noise_exponent;
        j["min_term_count"] = c.embedding->config.min_term_count;
        j["seed"] = c.embedding->config.seed;
        j["final_loss"] = c.embedding->final_loss;
        j["deterministic"] = true;  // single-threaded training path
        c.writer.write_file("models/embedding_config.json", j.dump(2) + "\n");
        return c.embedding_from_cache;
    });

    run_stage(ctx, report, "topics", cfg.stages.topics, blocked, [](Context& c) {
        ensure_topics(c);
        const auto keywords =
            frex_keywords(c.topics->model, c.cfg.frex_weight, c.cfg.coherence.top_n);
        emit_artifacts(c, topics_artifacts(c.topics->model, c.topics->quality, keywords));
        return c.topics->from_cache;
    });

    {
        std::string evolution_blocked = blocked;
        if (ingest_ok && cfg.stages.evolution && !cfg.stages.topics) {
            // allowed only when a cached model exists for this exact config
            if (!topics_cache_available(ctx)) {
                evolution_blocked = "missing dependency stage: topics";
            }
        }
        if (cfg.stages.evolution && !evolution_blocked.empty() && ingest_ok) {
            StageOutcome outcome;
            outcome.name = "evolution";
            outcome.status = "failed";
            outcome.detail = evolution_blocked;
            report.stages.push_back(outcome);
        } else {
            run_stage(ctx, report, "evolution", cfg.stages.evolution, evolution_blocked,
                      [](Context& c) {
                          ensure_topics(c);
                          const TopicModel& model = c.topics->model;
                          ensure_manifest(c);
                          std::unordered_map<std::string, int> year_of;
                          for (const auto& rec : c.manifest->records) year_of[rec.id] = rec.year;
                          std::vector<int> years;
                          years.reserve(model.doc_count());
                          for (const auto& id : model.doc_ids) {
                              const auto it = year_of.find(id);
                              if (it == year_of.end()) {
                                  throw ContractError("evolution: doc '" + id +
                                                      "' missing from manifest");
                              }
                              years.push_back(it->second);
                          }
                          TrendBasis basis;
                          if (c.cfg.trend_basis == "linear") basis = TrendBasis::kLinear;
                          else if (c.cfg.trend_basis == "bspline") basis = TrendBasis::kBSpline;
                          else basis = auto_basis(years);
                          const auto trends = prevalence_regression(model.theta, years, basis,
                                                                    c.cfg.ci_level, &c.warnings);
                          const auto correlation = topic_correlation(model.theta, &c.warnings);
                          const auto dominant = dominant_distribution(model.theta, years);
                          emit_artifacts(c, evolution_artifacts(trends, correlation, dominant));
                          return c.topics->from_cache;
                      });
        }
    }

    report.warnings = ctx.warnings.messages;
    report.files = writer.manifest();
    writer.write_file("report.json", report.to_json());
    return report;
}

AnalysisReport run_ingest_only(const PipelineConfig& cfg) {
    cfg.validate();

    AnalysisReport report;
    report.config_echo = cfg.canonical_json();

    OutputWriter writer(cfg.out_dir, cfg.force);
    Context ctx(cfg, writer);

    StageOutcome outcome;
    outcome.name = "ingest";
    StageTimer timer;
    try {
        resolve_word_lists(ctx);
        compute_cache_keys(ctx);
        ensure_manifest(ctx);
        writer.write_file("drop_report.json", ctx.drop_report.to_json());
        outcome.status = "ok";
        outcome.from_cache = ctx.ingest_from_cache;
    } catch (const std::exception& e) {
        outcome.status = "failed";
        outcome.detail = e.what();
    }
    outcome.seconds = timer.seconds();
    report.stages.push_back(outcome);

    report.warnings = ctx.warnings.messages;
    report.files = writer.manifest();
    writer.write_file("report.json", report.to_json());
    return report;
}

AnalysisReport run_sweep(const PipelineConfig& cfg) {
    cfg.validate();

    AnalysisReport report;
    report.config_echo = cfg.canonical_json();

    OutputWriter writer(cfg.out_dir, cfg.force);
    Context ctx(cfg, writer);

    StageOutcome outcome;
    outcome.name = "topics-sweep";
    StageTimer timer;
    try {
        resolve_word_lists(ctx);
        compute_cache_keys(ctx);
        ensure_dtm(ctx);
        TopicModelConfig tmpl = cfg.topics;
        tmpl.seed = cfg.seed;
        const SweepResult sweep =
            sweep_topic_count(*ctx.dtm, cfg.sweep_k_min, cfg.sweep_k_max, tmpl, cfg.coherence,
                              *ctx.filtered_streams, &ctx.warnings, cfg.threads);
        emit_artifacts(ctx, sweep_artifacts(sweep));
        outcome.status = "ok";
    } catch (const std::exception& e) {
        outcome.status = "failed";
        outcome.detail = e.what();
    }
    outcome.seconds = timer.seconds();
    report.stages.push_back(outcome);

    report.warnings = ctx.warnings.messages;
    report.files = writer.manifest();
    writer.write_file("report.json", report.to_json());
    return report;
}

}  // namespace corpuscope
