#include "corpuscope/embed.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>

#include <json.hpp>

#include "corpuscope/csv.hpp"
#include "corpuscope/errors.hpp"
#include "corpuscope/rng.hpp"

namespace corpuscope {

void EmbedConfig::validate() const {
    if (dimension < 2) throw ConfigError("embed: dimension must be >= 2");
    if (epochs < 1) throw ConfigError("embed: epochs must be >= 1");
    if (negative_samples < 1) throw ConfigError("embed: negative_samples must be >= 1");
    if (initial_learning_rate <= 0.0) throw ConfigError("embed: learning rate must be > 0");
    if (min_term_count < 0) throw ConfigError("embed: min_term_count must be >= 0");
}

namespace {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

EmbeddingModel train_doc_embeddings(const std::vector<TokenStream>& streams,
                                    const EmbedConfig& cfg) {
    cfg.validate();
    if (streams.size() < 2) throw ContractError("embed: need at least 2 documents");

    // vocabulary restricted to frequent terms, sorted for determinism
    std::map<std::string, long long> counts;
    for (const auto& s : streams) {
        for (const auto& t : s.tokens) ++counts[t];
    }
    std::vector<std::string> vocab;
    std::vector<long long> vocab_counts;
    for (const auto& [term, count] : counts) {
        if (count >= cfg.min_term_count) {
            vocab.push_back(term);
            vocab_counts.push_back(count);
        }
    }
    if (vocab.empty()) {
        throw ConfigError("embed: vocabulary empty after min_term_count pruning");
    }
    std::map<std::string, std::size_t> vocab_index;
    for (std::size_t i = 0; i < vocab.size(); ++i) vocab_index[vocab[i]] = i;

    std::vector<std::vector<std::size_t>> docs(streams.size());
    long long total_tokens = 0;
    for (std::size_t d = 0; d < streams.size(); ++d) {
        for (const auto& t : streams[d].tokens) {
            const auto it = vocab_index.find(t);
            if (it != vocab_index.end()) docs[d].push_back(it->second);
        }
        total_tokens += static_cast<long long>(docs[d].size());
    }
    if (total_tokens == 0) throw ConfigError("embed: no tokens survive pruning");

    // noise distribution: unigram counts ^ noise_exponent, sampled by binary
    // search over the cumulative weights
    std::vector<double> noise_cdf(vocab.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < vocab.size(); ++i) {
        acc += std::pow(double(vocab_counts[i]), cfg.noise_exponent);
        noise_cdf[i] = acc;
    }

    const std::size_t dim = std::size_t(cfg.dimension);
    Rng rng(derive_seed(cfg.seed, 0xd0c));

    EmbeddingModel model;
    model.config = cfg;
    model.doc_ids.reserve(streams.size());
    for (const auto& s : streams) model.doc_ids.push_back(s.doc_id);
    model.doc_vectors = Matrix(streams.size(), dim);
    for (auto& x : model.doc_vectors.data()) {
        x = (rng.uniform01() - 0.5) / double(dim);
    }
    Matrix word_out(vocab.size(), dim, 0.0);

    const auto sample_noise = [&] {
        const double u = rng.uniform01() * acc;
        return std::size_t(std::lower_bound(noise_cdf.begin(), noise_cdf.end(), u) -
                           noise_cdf.begin());
    };

    const double lr0 = cfg.initial_learning_rate;
    const double lr_floor = lr0 * 1e-4;
    const long long total_steps = total_tokens * cfg.epochs;
    long long processed = 0;

    std::vector<double> grad(dim);
    double epoch_loss = 0.0;
    long long epoch_terms = 0;

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        epoch_loss = 0.0;
        epoch_terms = 0;
        for (std::size_t d = 0; d < docs.size(); ++d) {
            double* dv = model.doc_vectors.row(d);
            for (const std::size_t token : docs[d]) {
                const double lr =
                    std::max(lr_floor, lr0 * (1.0 - double(processed) / double(total_steps)));
                ++processed;
                std::fill(grad.begin(), grad.end(), 0.0);
                for (int s = 0; s <= cfg.negative_samples; ++s) {
                    std::size_t target;
                    double label;
                    if (s == 0) {
                        target = token;
                        label = 1.0;
                    } else {
                        target = sample_noise();
                        if (target == token) continue;
                        label = 0.0;
                    }
                    double* wv = word_out.row(target);
                    double f = 0.0;
                    for (std::size_t i = 0; i < dim; ++i) f += dv[i] * wv[i];
                    const double p = sigmoid(f);
                    const double g = (label - p) * lr;
                    epoch_loss += label > 0.5 ? -std::log(std::max(p, 1e-300))
                                              : -std::log(std::max(1.0 - p, 1e-300));
                    ++epoch_terms;
                    for (std::size_t i = 0; i < dim; ++i) {
                        grad[i] += g * wv[i];
                        wv[i] += g * dv[i];
                    }
                }
                for (std::size_t i = 0; i < dim; ++i) dv[i] += grad[i];
            }
        }
    }
    model.final_loss = epoch_terms > 0 ? epoch_loss / double(epoch_terms) : 0.0;

    for (double v : model.doc_vectors.data()) {
        if (!std::isfinite(v)) throw ContractError("embed: training diverged (non-finite vector)");
    }
    return model;
}

double cosine(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) throw ContractError("cosine: dimension mismatch");
    if (u.empty()) throw ContractError("cosine: empty vectors");
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    if (nu == 0.0 || nv == 0.0) throw ContractError("cosine: zero vector");
    return dot / (std::sqrt(nu) * std::sqrt(nv));
}

SimilarityMatrix year_similarity_matrix(const EmbeddingModel& model, const std::vector<int>& years,
                                        WarningLog* warnings, SimilarityAggregate aggregate) {
    if (years.size() != model.doc_ids.size()) {
        throw ContractError("year_similarity_matrix: years size mismatch");
    }
    const std::size_t dim = model.doc_vectors.cols();

    // unit vectors grouped by year; the mean of pairwise cosines then
    // factorizes through per-year sums
    std::map<int, std::vector<std::vector<double>>> groups;
    for (std::size_t d = 0; d < model.doc_ids.size(); ++d) {
        const double* v = model.doc_vectors.row(d);
        double norm = 0.0;
        for (std::size_t i = 0; i < dim; ++i) norm += v[i] * v[i];
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            warn(warnings, "similarity: zero vector for doc " + model.doc_ids[d] + ", skipped");
            continue;
        }
        std::vector<double> unit(dim);
        for (std::size_t i = 0; i < dim; ++i) unit[i] = v[i] / norm;
        groups[years[d]].push_back(std::move(unit));
    }

    SimilarityMatrix matrix;
    for (const auto& [year, entry] : groups) matrix.years.push_back(year);
    const std::size_t n_years = matrix.years.size();
    matrix.values = Matrix(n_years, n_years, 0.0);

    std::vector<std::vector<double>> sums;
    for (std::size_t a = 0; a < n_years; ++a) {
        const auto& group = groups.at(matrix.years[a]);
        std::vector<double> sum(dim, 0.0);
        for (const auto& u : group) {
            for (std::size_t i = 0; i < dim; ++i) sum[i] += u[i];
        }
        sums.push_back(std::move(sum));
    }

    const auto median_of = [](std::vector<double>& xs) {
        std::sort(xs.begin(), xs.end());
        const std::size_t n = xs.size();
        return n % 2 == 1 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
    };

    for (std::size_t a = 0; a < n_years; ++a) {
        const auto& group_a = groups.at(matrix.years[a]);
        const std::size_t n_a = group_a.size();
        for (std::size_t b = a; b < n_years; ++b) {
            const auto& group_b = groups.at(matrix.years[b]);
            const std::size_t n_b = group_b.size();
            double value;
            if (a == b && n_a < 2) {
                warn(warnings, "similarity: year " + std::to_string(matrix.years[a]) +
                                   " has fewer than 2 documents, diagonal undefined");
                value = std::numeric_limits<double>::quiet_NaN();
            } else if (aggregate == SimilarityAggregate::kMedian) {
                std::vector<double> cosines;
                if (a == b) {
                    for (std::size_t i = 0; i < n_a; ++i) {
                        for (std::size_t j = i + 1; j < n_a; ++j) {
                            double dot = 0.0;
                            for (std::size_t q = 0; q < dim; ++q) dot += group_a[i][q] * group_a[j][q];
                            cosines.push_back(dot);
                        }
                    }
                } else {
                    for (const auto& u : group_a) {
                        for (const auto& w : group_b) {
                            double dot = 0.0;
                            for (std::size_t q = 0; q < dim; ++q) dot += u[q] * w[q];
                            cosines.push_back(dot);
                        }
                    }
                }
                value = median_of(cosines);
            } else if (a == b) {
                double self = 0.0;
                for (std::size_t i = 0; i < dim; ++i) self += sums[a][i] * sums[a][i];
                value = (self - double(n_a)) / (double(n_a) * double(n_a - 1));
            } else {
                double dot = 0.0;
                for (std::size_t i = 0; i < dim; ++i) dot += sums[a][i] * sums[b][i];
                value = dot / (double(n_a) * double(n_b));
            }
            matrix.values(a, b) = value;
            matrix.values(b, a) = value;
        }
    }
    return matrix;
}

std::vector<YearPairSimilarity> consecutive_year_series(const SimilarityMatrix& matrix,
                                                        WarningLog* warnings) {
    std::vector<YearPairSimilarity> series;
    for (std::size_t i = 0; i + 1 < matrix.years.size(); ++i) {
        if (matrix.years[i + 1] != matrix.years[i] + 1) {
            warn(warnings, "similarity: gap between years " + std::to_string(matrix.years[i]) +
                               " and " + std::to_string(matrix.years[i + 1]) + ", pair omitted");
            continue;
        }
        series.push_back({matrix.years[i], matrix.years[i + 1], matrix.values(i, i + 1)});
    }
    return series;
}

void write_embedding_dump(const EmbeddingModel& model, const std::filesystem::path& csv_path,
                          const std::filesystem::path& config_path) {
    {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) throw IoError("cannot write " + csv_path.string());
        std::vector<std::string> header = {"doc_id"};
        for (std::size_t i = 0; i < model.doc_vectors.cols(); ++i) {
            header.push_back("v" + std::to_string(i));
        }
        write_csv_row(out, header);
        for (std::size_t d = 0; d < model.doc_ids.size(); ++d) {
            std::vector<std::string> row = {model.doc_ids[d]};
            for (std::size_t i = 0; i < model.doc_vectors.cols(); ++i) {
                row.push_back(format_g9(model.doc_vectors(d, i)));
            }
            write_csv_row(out, row);
        }
    }
    {
        nlohmann::ordered_json j;
        j["dimension"] = model.config.dimension;
        j["epochs"] = model.config.epochs;
        j["negative_samples"] = model.config.negative_samples;
        j["initial_learning_rate"] = model.config.initial_learning_rate;
        j["noise_exponent"] = model.config.noise_exponent;
        j["min_term_count"] = model.config.min_term_count;
        j["seed"] = model.config.seed;
        j["final_loss"] = model.final_loss;
        std::ofstream out(config_path, std::ios::binary);
        if (!out) throw IoError("cannot write " + config_path.string());
        out << j.dump(2) << '\n';
    }
}

EmbeddingModel read_embedding_dump(const std::filesystem::path& csv_path,
                                   const std::filesystem::path& config_path) {
    EmbeddingModel model;
    {
        std::ifstream in(config_path);
        if (!in) throw IoError("cannot open " + config_path.string());
        nlohmann::json j = nlohmann::json::parse(in);
        model.config.dimension = j.value("dimension", 100);
        model.config.epochs = j.value("epochs", 20);
        model.config.negative_samples = j.value("negative_samples", 5);
        model.config.initial_learning_rate = j.value("initial_learning_rate", 0.025);
        model.config.noise_exponent = j.value("noise_exponent", 0.75);
        model.config.min_term_count = j.value("min_term_count", 5);
        model.config.seed = j.value("seed", std::uint64_t(0));
        model.final_loss = j.value("final_loss", 0.0);
    }
    const auto rows = read_csv(csv_path);
    if (rows.empty()) throw IoError("embedding dump: empty csv");
    const std::size_t dim = rows[0].size() - 1;
    model.doc_vectors = Matrix(rows.size() - 1, dim);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        model.doc_ids.push_back(rows[r][0]);
        for (std::size_t i = 0; i < dim; ++i) {
            model.doc_vectors(r - 1, i) = std::stod(rows[r][i + 1]);
        }
    }
    return model;
}

}  // namespace corpuscope
