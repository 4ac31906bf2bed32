#include "corpuscope/plots.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "corpuscope/charts.hpp"
#include "corpuscope/csv.hpp"

namespace corpuscope {

namespace {

std::string topic_label(std::size_t zero_based) {
    return "Topic " + std::to_string(zero_based + 1);
}

// NaN-safe cell: undefined values emitted as empty fields
std::string num_cell(double v) { return std::isfinite(v) ? format_g9(v) : std::string{}; }

}  // namespace

StageArtifacts trend_artifacts(const TrendTable& table, const std::string& highlight_country) {
    StageArtifacts artifacts;

    std::ostringstream csv;
    if (table.has_highlight) {
        write_csv_row(csv, {"year", "total", "highlighted"});
    } else {
        write_csv_row(csv, {"year", "total"});
    }
    for (std::size_t i = 0; i < table.years.size(); ++i) {
        std::vector<std::string> row = {std::to_string(table.years[i]),
                                        std::to_string(table.totals[i])};
        if (table.has_highlight) row.push_back(std::to_string(table.highlighted[i]));
        write_csv_row(csv, row);
    }
    artifacts.files.emplace_back("tables/publications_trend.csv", csv.str());

    std::vector<std::string> labels;
    for (int y : table.years) labels.push_back(std::to_string(y));
    std::vector<std::pair<std::string, std::vector<double>>> series;
    series.emplace_back("all publications",
                        std::vector<double>(table.totals.begin(), table.totals.end()));
    if (table.has_highlight) {
        series.emplace_back(highlight_country,
                            std::vector<double>(table.highlighted.begin(), table.highlighted.end()));
    }
    artifacts.files.emplace_back("plots/publications_trend.svg",
                                 chart_grouped_bars("Publications per year", labels, series));
    return artifacts;
}

StageArtifacts ca_artifacts(const CAResult& result) {
    StageArtifacts artifacts;

    std::ostringstream csv;
    write_csv_row(csv, {"label", "dim1", "dim2", "mass", "type"});
    for (std::size_t i = 0; i < result.row_labels.size(); ++i) {
        write_csv_row(csv, {result.row_labels[i], format_g9(result.row_coords(i, 0)),
                            format_g9(result.dims > 1 ? result.row_coords(i, 1) : 0.0),
                            format_g9(result.row_masses[i]), "row"});
    }
    for (std::size_t j = 0; j < result.col_labels.size(); ++j) {
        write_csv_row(csv, {result.col_labels[j], format_g9(result.col_coords(j, 0)),
                            format_g9(result.dims > 1 ? result.col_coords(j, 1) : 0.0),
                            format_g9(result.col_masses[j]), "col"});
    }
    artifacts.files.emplace_back("tables/ca_coords.csv", csv.str());

    std::vector<ChartScatterPoint> points;
    for (std::size_t j = 0; j < result.col_labels.size(); ++j) {
        points.push_back({result.col_coords(j, 0),
                          result.dims > 1 ? result.col_coords(j, 1) : 0.0, result.col_labels[j], 0,
                          3.0});
    }
    for (std::size_t i = 0; i < result.row_labels.size(); ++i) {
        points.push_back({result.row_coords(i, 0),
                          result.dims > 1 ? result.row_coords(i, 1) : 0.0, result.row_labels[i], 1,
                          4.5});
    }
    artifacts.files.emplace_back(
        "plots/ca_map.svg", chart_scatter("Correspondence analysis of yearly frequent terms",
                                          "dimension 1", "dimension 2", points,
                                          {"terms", "years"}, true));
    return artifacts;
}

StageArtifacts lex_artifacts(const std::vector<YearlyLexRow>& rows) {
    StageArtifacts artifacts;

    std::ostringstream csv;
    write_csv_row(csv, {"year", "word_count", "sentence_count", "sentence_length",
                        "difficult_ratio", "fk_grade", "ttr", "mtld", "hdd", "mtld_excluded",
                        "hdd_excluded", "docs"});
    for (const auto& r : rows) {
        write_csv_row(csv, {std::to_string(r.year), format_g9(r.word_count),
                            format_g9(r.sentence_count), format_g9(r.sentence_length),
                            format_g9(r.difficult_ratio), format_g9(r.fk_grade), format_g9(r.ttr),
                            num_cell(r.mtld), num_cell(r.hdd), std::to_string(r.mtld_excluded),
                            std::to_string(r.hdd_excluded), std::to_string(r.docs)});
    }
    artifacts.files.emplace_back("tables/lexical_yearly.csv", csv.str());

    std::vector<double> years;
    for (const auto& r : rows) years.push_back(double(r.year));
    const auto panel = [&](const char* name, auto getter) {
        ChartSeries s;
        s.name = name;
        for (const auto& r : rows) {
            const double v = getter(r);
            if (!std::isfinite(v)) continue;
            s.xs.push_back(double(r.year));
            s.ys.push_back(v);
        }
        return s;
    };

    const std::vector<ChartSeries> readability_panels = {
        panel("average word count", [](const YearlyLexRow& r) { return r.word_count; }),
        panel("average sentence count", [](const YearlyLexRow& r) { return r.sentence_count; }),
        panel("average sentence length", [](const YearlyLexRow& r) { return r.sentence_length; }),
        panel("average difficult-word ratio",
              [](const YearlyLexRow& r) { return r.difficult_ratio; }),
        panel("average Flesch-Kincaid grade", [](const YearlyLexRow& r) { return r.fk_grade; })};
    artifacts.files.emplace_back("plots/lex_readability.svg",
                                 chart_line_panels("Lexical readability", readability_panels, 3));

    const std::vector<ChartSeries> diversity_panels = {
        panel("average TTR", [](const YearlyLexRow& r) { return r.ttr; }),
        panel("average HD-D", [](const YearlyLexRow& r) { return r.hdd; }),
        panel("average MTLD", [](const YearlyLexRow& r) { return r.mtld; })};
    artifacts.files.emplace_back("plots/lex_diversity.svg",
                                 chart_line_panels("Lexical richness", diversity_panels, 3));
    return artifacts;
}

StageArtifacts similarity_artifacts(const SimilarityMatrix& matrix,
                                    const std::vector<YearPairSimilarity>& series) {
    StageArtifacts artifacts;

    std::ostringstream csv;
    std::vector<std::string> header = {"year"};
    for (int y : matrix.years) header.push_back(std::to_string(y));
    write_csv_row(csv, header);
    for (std::size_t i = 0; i < matrix.years.size(); ++i) {
        std::vector<std::string> row = {std::to_string(matrix.years[i])};
        for (std::size_t j = 0; j < matrix.years.size(); ++j) {
            row.push_back(num_cell(matrix.values(i, j)));
        }
        write_csv_row(csv, row);
    }
    artifacts.files.emplace_back("tables/similarity_matrix.csv", csv.str());

    std::ostringstream series_csv;
    write_csv_row(series_csv, {"year_a", "year_b", "similarity"});
    for (const auto& p : series) {
        write_csv_row(series_csv, {std::to_string(p.year_a), std::to_string(p.year_b),
                                   format_g9(p.value)});
    }
    artifacts.files.emplace_back("tables/similarity_consecutive.csv", series_csv.str());

    std::vector<std::string> labels;
    for (int y : matrix.years) labels.push_back(std::to_string(y));
    artifacts.files.emplace_back(
        "plots/similarity_heatmap.svg",
        chart_heatmap("Between-years publication similarity", labels, labels, matrix.values,
                      false));

    ChartSeries line;
    line.name = "consecutive years";
    for (const auto& p : series) {
        line.xs.push_back(double(p.year_a));
        line.ys.push_back(p.value);
    }
    artifacts.files.emplace_back(
        "plots/similarity_consecutive.svg",
        chart_line("Consecutive-years similarity", "first year of the pair", "mean cosine",
                   {line}));
    return artifacts;
}

StageArtifacts topics_artifacts(const TopicModel& model,
                                const std::vector<TopicQualityRow>& quality,
                                const std::vector<std::vector<RankedWord>>& keywords) {
    StageArtifacts artifacts;
    const std::size_t k = model.num_topics();

    std::ostringstream phi_csv;
    std::vector<std::string> phi_header = {"topic"};
    for (const auto& term : model.vocab) phi_header.push_back(term);
    write_csv_row(phi_csv, phi_header);
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<std::string> row = {std::to_string(t + 1)};
        for (std::size_t w = 0; w < model.vocab_size(); ++w) row.push_back(format_g9(model.phi(t, w)));
        write_csv_row(phi_csv, row);
    }
    artifacts.files.emplace_back("tables/phi.csv", phi_csv.str());

    std::ostringstream theta_csv;
    std::vector<std::string> theta_header = {"doc_id"};
    for (std::size_t t = 0; t < k; ++t) theta_header.push_back("topic_" + std::to_string(t + 1));
    write_csv_row(theta_csv, theta_header);
    for (std::size_t d = 0; d < model.doc_count(); ++d) {
        std::vector<std::string> row = {model.doc_ids[d]};
        for (std::size_t t = 0; t < k; ++t) row.push_back(format_g9(model.theta(d, t)));
        write_csv_row(theta_csv, row);
    }
    artifacts.files.emplace_back("tables/theta.csv", theta_csv.str());

    std::ostringstream quality_csv;
    write_csv_row(quality_csv, {"topic", "coherence", "exclusivity", "proportion"});
    for (const auto& q : quality) {
        write_csv_row(quality_csv, {std::to_string(q.topic + 1), format_g9(q.coherence),
                                    format_g9(q.exclusivity), format_g9(q.proportion)});
    }
    artifacts.files.emplace_back("tables/quality.csv", quality_csv.str());

    std::ostringstream kw_csv;
    write_csv_row(kw_csv, {"topic", "rank", "word", "frex", "probability"});
    for (std::size_t t = 0; t < keywords.size(); ++t) {
        for (std::size_t r = 0; r < keywords[t].size(); ++r) {
            write_csv_row(kw_csv, {std::to_string(t + 1), std::to_string(r + 1),
                                   keywords[t][r].word, format_g9(keywords[t][r].frex),
                                   format_g9(keywords[t][r].probability)});
        }
    }
    artifacts.files.emplace_back("tables/keywords.csv", kw_csv.str());

    nlohmann::ordered_json mj;
    mj["k"] = model.config.k;
    mj["alpha"] = model.config.resolved_alpha();
    mj["beta"] = model.config.beta;
    mj["iterations"] = model.config.iterations;
    mj["burn_in"] = model.config.burn_in;
    mj["average_after_burn_in"] = model.config.average_after_burn_in;
    mj["seed"] = model.config.seed;
    mj["documents"] = model.doc_count();
    mj["vocabulary"] = model.vocab_size();
    mj["log_likelihood_trace"] = model.log_likelihood_trace;
    artifacts.files.emplace_back("models/topic_model.json", mj.dump(2) + "\n");

    // coherence x exclusivity scatter, marker area by corpus share
    std::vector<ChartScatterPoint> points;
    double max_prop = 0.0;
    for (const auto& q : quality) max_prop = std::max(max_prop, q.proportion);
    for (const auto& q : quality) {
        const double size = 4.0 + 14.0 * std::sqrt(max_prop > 0 ? q.proportion / max_prop : 0.0);
        points.push_back({q.coherence, q.exclusivity, topic_label(std::size_t(q.topic)),
                          q.topic % int(chart_palette().size()), size});
    }
    artifacts.files.emplace_back(
        "plots/topic_quality.svg",
        chart_scatter("Topic quality (marker size = publication share)", "semantic coherence",
                      "exclusivity", points, {}, true));
    return artifacts;
}

StageArtifacts evolution_artifacts(const std::vector<PrevalenceTrend>& trends,
                                   const TopicCorrelation& correlation,
                                   const DominantDistribution& dominant) {
    StageArtifacts artifacts;

    std::ostringstream trend_csv;
    write_csv_row(trend_csv, {"topic", "year", "fitted", "ci_low", "ci_high", "classification"});
    for (const auto& t : trends) {
        for (std::size_t i = 0; i < t.years.size(); ++i) {
            write_csv_row(trend_csv,
                          {std::to_string(t.topic + 1), std::to_string(t.years[i]),
                           format_g9(t.fitted[i]), format_g9(t.ci_low[i]),
                           format_g9(t.ci_high[i]), trend_class_name(t.classification)});
        }
    }
    artifacts.files.emplace_back("tables/prevalence_trends.csv", trend_csv.str());

    const std::size_t k = correlation.matrix.rows();
    std::ostringstream corr_csv;
    std::vector<std::string> header = {"topic"};
    for (std::size_t t = 0; t < k; ++t) header.push_back("topic_" + std::to_string(t + 1));
    write_csv_row(corr_csv, header);
    for (std::size_t a = 0; a < k; ++a) {
        std::vector<std::string> row = {std::to_string(a + 1)};
        for (std::size_t b = 0; b < k; ++b) row.push_back(num_cell(correlation.matrix(a, b)));
        write_csv_row(corr_csv, row);
    }
    artifacts.files.emplace_back("tables/topic_correlation.csv", corr_csv.str());

    std::ostringstream edges_csv;
    write_csv_row(edges_csv, {"topic_a", "topic_b", "correlation"});
    for (const auto& e : correlation.edges) {
        write_csv_row(edges_csv,
                      {std::to_string(e.a + 1), std::to_string(e.b + 1), format_g9(e.r)});
    }
    artifacts.files.emplace_back("tables/topic_edges.csv", edges_csv.str());

    std::ostringstream dom_csv;
    std::vector<std::string> dom_header = {"year"};
    const std::size_t n_topics = dominant.counts.empty() ? 0 : dominant.counts[0].size();
    for (std::size_t t = 0; t < n_topics; ++t) {
        dom_header.push_back("topic_" + std::to_string(t + 1));
    }
    dom_header.push_back("ties");
    write_csv_row(dom_csv, dom_header);
    for (std::size_t y = 0; y < dominant.years.size(); ++y) {
        std::vector<std::string> row = {std::to_string(dominant.years[y])};
        for (std::size_t t = 0; t < n_topics; ++t) {
            row.push_back(std::to_string(dominant.counts[y][t]));
        }
        row.push_back(std::to_string(dominant.tie_counts[y]));
        write_csv_row(dom_csv, row);
    }
    artifacts.files.emplace_back("tables/dominant_topics.csv", dom_csv.str());

    // prevalence curves with shaded bands
    std::vector<ChartBandSeries> bands;
    for (const auto& t : trends) {
        ChartBandSeries b;
        b.name = topic_label(std::size_t(t.topic));
        for (std::size_t i = 0; i < t.years.size(); ++i) {
            b.xs.push_back(double(t.years[i]));
            b.fitted.push_back(t.fitted[i]);
            b.lo.push_back(t.ci_low[i]);
            b.hi.push_back(t.ci_high[i]);
        }
        bands.push_back(std::move(b));
    }
    artifacts.files.emplace_back(
        "plots/prevalence.svg",
        chart_curves_with_bands("Topic prevalence over time", "year", "expected proportion",
                                bands));

    std::vector<std::string> topic_names;
    for (std::size_t t = 0; t < k; ++t) topic_names.push_back(topic_label(t));
    artifacts.files.emplace_back(
        "plots/topic_correlation.svg",
        chart_heatmap("Topic correlations", topic_names, topic_names, correlation.matrix, true));

    std::vector<ChartEdge> graph_edges;
    for (const auto& e : correlation.edges) graph_edges.push_back({e.a, e.b, e.r});
    artifacts.files.emplace_back(
        "plots/topic_graph.svg",
        chart_graph("Positively correlated topics", topic_names, graph_edges));

    std::vector<std::string> year_labels;
    for (int y : dominant.years) year_labels.push_back(std::to_string(y));
    std::vector<std::pair<std::string, std::vector<double>>> stacked;
    for (std::size_t t = 0; t < n_topics; ++t) {
        std::vector<double> vals;
        for (std::size_t y = 0; y < dominant.years.size(); ++y) {
            vals.push_back(double(dominant.counts[y][t]));
        }
        stacked.emplace_back(topic_label(t), std::move(vals));
    }
    artifacts.files.emplace_back(
        "plots/dominant_topics.svg",
        chart_stacked_bars("Dominant topic distribution per year", year_labels, stacked));
    return artifacts;
}

StageArtifacts sweep_artifacts(const SweepResult& sweep) {
    StageArtifacts artifacts;

    std::ostringstream csv;
    write_csv_row(csv, {"k", "mean_coherence", "within_one_se", "failed"});
    for (const auto& row : sweep.rows) {
        write_csv_row(csv, {std::to_string(row.k),
                            row.failed ? std::string{} : format_g9(row.mean_coherence),
                            row.within_one_se ? "1" : "0", row.failed ? "1" : "0"});
    }
    artifacts.files.emplace_back("tables/coherence_sweep.csv", csv.str());

    ChartSeries line;
    line.name = "mean C_v";
    for (const auto& row : sweep.rows) {
        if (row.failed) continue;
        line.xs.push_back(double(row.k));
        line.ys.push_back(row.mean_coherence);
    }
    artifacts.files.emplace_back(
        "plots/coherence_sweep.svg",
        chart_line("Topic-count sweep (best K = " + std::to_string(sweep.best_k) +
                       ", near-best range [" + std::to_string(sweep.flagged_range.first) + ", " +
                       std::to_string(sweep.flagged_range.second) + "])",
                   "number of topics", "mean coherence", {line}));
    return artifacts;
}

}  // namespace corpuscope
