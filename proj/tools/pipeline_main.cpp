// corpuscope command line: runs the corpus analysis pipeline end to end or
// one stage at a time against cached artifacts.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "corpuscope/pipeline.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string stages;
    std::string out_dir;
    std::string input_path;
    std::string input_format;
    std::int64_t seed = -1;
    int threads = 0;
    bool force = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_stages) {
    cmd->add_option("--config", opts.config_path, "pipeline config JSON")->required();
    if (with_stages) {
        cmd->add_option("--stages", opts.stages, "comma-separated stage list, e.g. trend,lex");
    }
    cmd->add_option("--seed", opts.seed, "override the global seed");
    cmd->add_option("--out", opts.out_dir, "override the output directory");
    cmd->add_option("--threads", opts.threads, "worker threads for the sweep");
    cmd->add_flag("--force", opts.force, "overwrite existing output files");
}

corpuscope::PipelineConfig load_config(const CommonOptions& opts) {
    auto cfg = corpuscope::PipelineConfig::from_json_file(opts.config_path);
    if (!opts.stages.empty()) cfg.stages = corpuscope::parse_stage_list(opts.stages);
    if (opts.seed >= 0) cfg.seed = std::uint64_t(opts.seed);
    if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
    if (!opts.input_path.empty()) cfg.input_path = opts.input_path;
    if (!opts.input_format.empty()) {
        cfg.input_format = corpuscope::parse_record_format(opts.input_format);
    }
    if (opts.threads > 0) cfg.threads = opts.threads;
    if (opts.force) cfg.force = true;
    return cfg;
}

int report_result(const corpuscope::AnalysisReport& report) {
    for (const auto& stage : report.stages) {
        std::printf("%-14s %s%s%s\n", stage.name.c_str(), stage.status.c_str(),
                    stage.from_cache ? " (cache)" : "",
                    stage.detail.empty() ? "" : (": " + stage.detail).c_str());
    }
    std::printf("%zu files emitted\n", report.files.size());
    return report.ok() ? 0 : 1;
}

corpuscope::StageSet only(const std::string& name) {
    return corpuscope::parse_stage_list(name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"corpuscope: temporal analysis of a bibliographic corpus"};
    app.require_subcommand(1);

    CommonOptions opts;

    auto* run = app.add_subcommand("run", "run the enabled pipeline stages");
    add_common(run, opts, true);
    run->add_option("--input", opts.input_path, "override the input records file");
    run->add_option("--format", opts.input_format, "input format: csv or jsonl");

    auto* ingest = app.add_subcommand("ingest", "load, filter and dedupe records");
    add_common(ingest, opts, false);
    ingest->add_option("--input", opts.input_path, "override the input records file");
    ingest->add_option("--format", opts.input_format, "input format: csv or jsonl");

    auto* ca = app.add_subcommand("ca", "correspondence analysis of yearly terms");
    add_common(ca, opts, false);
    auto* lex = app.add_subcommand("lex", "lexical readability and diversity profile");
    add_common(lex, opts, false);
    auto* sim = app.add_subcommand("sim", "publication similarity over time");
    add_common(sim, opts, false);
    auto* evolve = app.add_subcommand("evolve", "temporal topic analyses (needs a topic model)");
    add_common(evolve, opts, false);

    auto* topics = app.add_subcommand("topics", "topic modeling");
    topics->require_subcommand(1);
    auto* fit = topics->add_subcommand("fit", "fit the topic model at the configured K");
    add_common(fit, opts, false);
    auto* sweep = topics->add_subcommand("sweep", "fit across a K range, report coherence");
    add_common(sweep, opts, false);

    CLI11_PARSE(app, argc, argv);

    try {
        auto cfg = load_config(opts);
        if (run->parsed()) {
            return report_result(corpuscope::run_pipeline(cfg));
        }
        if (ingest->parsed()) {
            return report_result(corpuscope::run_ingest_only(cfg));
        }
        if (topics->parsed() && sweep->parsed()) {
            return report_result(corpuscope::run_sweep(cfg));
        }
        if (topics->parsed() && fit->parsed()) cfg.stages = only("topics");
        else if (ca->parsed()) cfg.stages = only("ca");
        else if (lex->parsed()) cfg.stages = only("lex");
        else if (sim->parsed()) cfg.stages = only("sim");
        else if (evolve->parsed()) cfg.stages = only("evolve");
        return report_result(corpuscope::run_pipeline(cfg));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
