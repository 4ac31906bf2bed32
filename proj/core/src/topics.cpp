#include "corpuscope/topics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>

#include "corpuscope/errors.hpp"
#include "corpuscope/rng.hpp"

namespace corpuscope {

void TopicModelConfig::validate() const {
    if (k < 1) throw ConfigError("lda: k must be >= 1");
    if (beta <= 0.0) throw ConfigError("lda: beta must be > 0");
    if (alpha < 0.0) throw ConfigError("lda: alpha must be > 0 (or 0 for 50/k)");
    if (iterations < 1) throw ConfigError("lda: iterations must be >= 1");
    if (burn_in < 0 || burn_in >= iterations) {
        throw ConfigError("lda: burn_in must be in [0, iterations)");
    }
}

std::vector<std::size_t> TopicModel::top_terms(std::size_t topic, std::size_t n) const {
    std::vector<std::size_t> order(vocab_size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return phi(topic, a) > phi(topic, b);
    });
    order.resize(std::min(n, order.size()));
    return order;
}

namespace {

// joint log p(w, z) in the collapsed representation
double joint_log_likelihood(const std::vector<std::vector<int>>& n_dk,
                            const std::vector<std::vector<int>>& n_kv,
                            const std::vector<long long>& n_k,
                            const std::vector<std::size_t>& doc_len, int k, std::size_t v,
                            double alpha, double beta) {
    const double lg_beta = std::lgamma(beta);
    double ll = double(k) * (std::lgamma(double(v) * beta) - double(v) * lg_beta);
    for (int t = 0; t < k; ++t) {
        for (std::size_t w = 0; w < v; ++w) {
            if (n_kv[t][w] > 0) ll += std::lgamma(n_kv[t][w] + beta) - lg_beta;
        }
        ll -= std::lgamma(double(n_k[t]) + double(v) * beta);
    }
    const double lg_alpha = std::lgamma(alpha);
    const double k_alpha = double(k) * alpha;
    ll += double(n_dk.size()) * (std::lgamma(k_alpha) - double(k) * lg_alpha);
    for (std::size_t d = 0; d < n_dk.size(); ++d) {
        for (int t = 0; t < k; ++t) {
            if (n_dk[d][t] > 0) ll += std::lgamma(n_dk[d][t] + alpha) - lg_alpha;
        }
        ll -= std::lgamma(double(doc_len[d]) + k_alpha);
    }
    return ll;
}

void check_count_conservation(const std::vector<std::vector<int>>& n_dk,
                              const std::vector<std::vector<int>>& n_kv,
                              const std::vector<long long>& n_k,
                              const std::vector<std::size_t>& doc_len) {
    for (std::size_t d = 0; d < n_dk.size(); ++d) {
        long long sum = 0;
        for (int c : n_dk[d]) sum += c;
        if (sum != static_cast<long long>(doc_len[d])) {
            throw ContractError("lda: doc-topic counts do not sum to document length");
        }
    }
    for (std::size_t t = 0; t < n_kv.size(); ++t) {
        long long sum = 0;
        for (int c : n_kv[t]) sum += c;
        if (sum != n_k[t]) {
            throw ContractError("lda: topic-word counts do not sum to topic total");
        }
    }
}

}  // namespace

TopicModel fit_lda_tokens(std::vector<std::vector<int>> docs, std::vector<std::string> doc_ids,
                          std::vector<std::string> vocab, const TopicModelConfig& cfg,
                          WarningLog* warnings) {
    cfg.validate();
    const std::size_t v = vocab.size();
    const int k = cfg.k;
    if (v == 0) throw ContractError("lda: empty vocabulary");
    if (std::size_t(k) > v) throw ConfigError("lda: k exceeds vocabulary size");
    if (docs.size() != doc_ids.size()) throw ContractError("lda: doc_ids size mismatch");

    // drop empty documents, remember original positions
    std::vector<std::size_t> doc_indices;
    {
        std::vector<std::vector<int>> kept;
        std::vector<std::string> kept_ids;
        for (std::size_t d = 0; d < docs.size(); ++d) {
            if (docs[d].empty()) {
                warn(warnings, "lda: document '" + doc_ids[d] + "' has no tokens, dropped");
                continue;
            }
            doc_indices.push_back(d);
            kept.push_back(std::move(docs[d]));
            kept_ids.push_back(std::move(doc_ids[d]));
        }
        docs = std::move(kept);
        doc_ids = std::move(kept_ids);
    }
    if (docs.empty()) throw ContractError("lda: corpus has no non-empty documents");

    const std::size_t n_docs = docs.size();
    const double alpha = cfg.resolved_alpha();
    const double beta = cfg.beta;
    const double v_beta = double(v) * beta;

    std::vector<std::vector<int>> n_dk(n_docs, std::vector<int>(k, 0));
    std::vector<std::vector<int>> n_kv(k, std::vector<int>(v, 0));
    std::vector<long long> n_k(k, 0);
    std::vector<std::size_t> doc_len(n_docs);
    std::vector<std::vector<int>> z(n_docs);

    Rng rng(derive_seed(cfg.seed, 0x1da));

    for (std::size_t d = 0; d < n_docs; ++d) {
        doc_len[d] = docs[d].size();
        z[d].resize(docs[d].size());
        for (std::size_t i = 0; i < docs[d].size(); ++i) {
            const int topic = int(rng.below(std::uint64_t(k)));
            z[d][i] = topic;
            ++n_dk[d][topic];
            ++n_kv[topic][docs[d][i]];
            ++n_k[topic];
        }
    }

    TopicModel model;
    model.config = cfg;
    model.doc_ids = std::move(doc_ids);
    model.doc_indices = std::move(doc_indices);
    model.vocab = std::move(vocab);
    model.log_likelihood_trace.reserve(cfg.iterations);

    Matrix phi_acc, theta_acc;
    int acc_samples = 0;
    if (cfg.average_after_burn_in) {
        phi_acc = Matrix(k, v, 0.0);
        theta_acc = Matrix(n_docs, std::size_t(k), 0.0);
    }

    std::vector<double> cumulative(k);
    for (int sweep = 0; sweep < cfg.iterations; ++sweep) {
        for (std::size_t d = 0; d < n_docs; ++d) {
            auto& zd = z[d];
            auto& dk = n_dk[d];
            const auto& tokens = docs[d];
            for (std::size_t i = 0; i < tokens.size(); ++i) {
                const int w = tokens[i];
                const int old_topic = zd[i];
                --dk[old_topic];
                --n_kv[old_topic][w];
                --n_k[old_topic];

                double total = 0.0;
                for (int t = 0; t < k; ++t) {
                    total += (dk[t] + alpha) * (n_kv[t][w] + beta) / (double(n_k[t]) + v_beta);
                    cumulative[t] = total;
                }
                const double u = rng.uniform01() * total;
                const int new_topic =
                    int(std::lower_bound(cumulative.begin(), cumulative.end(), u) -
                        cumulative.begin());

                zd[i] = new_topic;
                ++dk[new_topic];
                ++n_kv[new_topic][w];
                ++n_k[new_topic];
            }
        }
        model.log_likelihood_trace.push_back(
            joint_log_likelihood(n_dk, n_kv, n_k, doc_len, k, v, alpha, beta));
        if (cfg.debug_checks) check_count_conservation(n_dk, n_kv, n_k, doc_len);

        if (cfg.average_after_burn_in && sweep >= cfg.burn_in) {
            for (int t = 0; t < k; ++t) {
                const double denom = double(n_k[t]) + v_beta;
                for (std::size_t w = 0; w < v; ++w) {
                    phi_acc(t, w) += (n_kv[t][w] + beta) / denom;
                }
            }
            for (std::size_t d = 0; d < n_docs; ++d) {
                const double denom = double(doc_len[d]) + double(k) * alpha;
                for (int t = 0; t < k; ++t) theta_acc(d, t) += (n_dk[d][t] + alpha) / denom;
            }
            ++acc_samples;
        }
    }

    model.phi = Matrix(k, v);
    model.theta = Matrix(n_docs, std::size_t(k));
    if (cfg.average_after_burn_in && acc_samples > 0) {
        for (std::size_t i = 0; i < phi_acc.data().size(); ++i) {
            model.phi.data()[i] = phi_acc.data()[i] / acc_samples;
        }
        for (std::size_t i = 0; i < theta_acc.data().size(); ++i) {
            model.theta.data()[i] = theta_acc.data()[i] / acc_samples;
        }
    } else {
        for (int t = 0; t < k; ++t) {
            const double denom = double(n_k[t]) + v_beta;
            for (std::size_t w = 0; w < v; ++w) model.phi(t, w) = (n_kv[t][w] + beta) / denom;
        }
        for (std::size_t d = 0; d < n_docs; ++d) {
            const double denom = double(doc_len[d]) + double(k) * alpha;
            for (int t = 0; t < k; ++t) model.theta(d, t) = (n_dk[d][t] + alpha) / denom;
        }
    }
    model.assignments = std::move(z);
    return model;
}

TopicModel fit_lda(const DocTermMatrix& dtm, const TopicModelConfig& cfg, WarningLog* warnings) {
    if (dtm.doc_count() == 0 || dtm.term_count() == 0) {
        throw ContractError("lda: empty document-term matrix");
    }
    std::vector<std::vector<int>> docs(dtm.doc_count());
    for (std::size_t d = 0; d < dtm.doc_count(); ++d) {
        for (const auto& cell : dtm.row(d)) {
            docs[d].insert(docs[d].end(), std::size_t(cell.count), int(cell.term));
        }
    }
    return fit_lda_tokens(std::move(docs), dtm.doc_ids(), dtm.vocab().terms, cfg, warnings);
}

std::vector<std::vector<RankedWord>> frex_keywords(const TopicModel& model, double frex_weight,
                                                   int n) {
    if (frex_weight <= 0.0 || frex_weight >= 1.0) {
        throw ConfigError("frex: weight must be in (0, 1)");
    }
    const std::size_t k = model.num_topics(), v = model.vocab_size();

    // exclusivity: phi normalized over topics per word
    Matrix exclusivity(k, v);
    for (std::size_t w = 0; w < v; ++w) {
        double col = 0.0;
        for (std::size_t t = 0; t < k; ++t) col += model.phi(t, w);
        for (std::size_t t = 0; t < k; ++t) exclusivity(t, w) = model.phi(t, w) / col;
    }

    // ECDF of a value within its own row: fraction of words with value <= x
    const auto ecdf_row = [v](const double* row) {
        std::vector<double> sorted(row, row + v);
        std::sort(sorted.begin(), sorted.end());
        std::vector<double> out(v);
        for (std::size_t w = 0; w < v; ++w) {
            const auto ub = std::upper_bound(sorted.begin(), sorted.end(), row[w]);
            out[w] = double(ub - sorted.begin()) / double(v);
        }
        return out;
    };

    std::vector<std::vector<RankedWord>> result(k);
    for (std::size_t t = 0; t < k; ++t) {
        const auto ecdf_ex = ecdf_row(exclusivity.row(t));
        const auto ecdf_fr = ecdf_row(model.phi.row(t));
        std::vector<double> score(v);
        for (std::size_t w = 0; w < v; ++w) {
            score[w] = 1.0 / (frex_weight / ecdf_ex[w] + (1.0 - frex_weight) / ecdf_fr[w]);
        }
        std::vector<std::size_t> order(v);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });
        const std::size_t take = std::min(std::size_t(n), v);
        for (std::size_t i = 0; i < take; ++i) {
            const std::size_t w = order[i];
            result[t].push_back(
                {model.vocab[w], score[w], model.phi(t, w), exclusivity(t, w)});
        }
    }
    return result;
}

DominantTopic dominant_topic(std::span<const double> theta_row) {
    if (theta_row.empty()) throw ContractError("dominant_topic: empty row");
    double sum = 0.0;
    for (double p : theta_row) {
        if (p < 0.0 || !std::isfinite(p)) throw ContractError("dominant_topic: bad probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-6) {
        throw ContractError("dominant_topic: row does not sum to 1");
    }
    DominantTopic result;
    double best = theta_row[0];
    for (std::size_t t = 1; t < theta_row.size(); ++t) {
        if (theta_row[t] > best) {
            best = theta_row[t];
            result.topic = t;
        }
    }
    for (std::size_t t = 0; t < theta_row.size(); ++t) {
        if (t != result.topic && std::abs(theta_row[t] - best) <= 1e-12) {
            result.tie = true;
            break;
        }
    }
    return result;
}

std::vector<TopicQualityRow> topic_quality(const TopicModel& model,
                                           const std::vector<TokenStream>& streams,
                                           const CoherenceConfig& coh, double frex_weight,
                                           WarningLog* warnings) {
    const std::size_t k = model.num_topics();
    const auto coherence = coherence_cv(model, streams, coh, warnings);
    const auto keywords = frex_keywords(model, frex_weight, coh.top_n);

    // token share per topic from the final assignments
    std::vector<long long> assigned(k, 0);
    long long total = 0;
    for (const auto& doc : model.assignments) {
        for (int t : doc) {
            ++assigned[std::size_t(t)];
            ++total;
        }
    }

    std::vector<TopicQualityRow> rows(k);
    for (std::size_t t = 0; t < k; ++t) {
        rows[t].topic = int(t);
        rows[t].coherence = coherence[t];
        double ex = 0.0;
        for (const auto& w : keywords[t]) ex += w.exclusivity;
        rows[t].exclusivity = keywords[t].empty() ? 0.0 : ex / double(keywords[t].size());
        rows[t].proportion = total > 0 ? double(assigned[t]) / double(total) : 0.0;
    }
    return rows;
}

SweepResult sweep_topic_count(const DocTermMatrix& dtm, int k_min, int k_max,
                              const TopicModelConfig& config_template, const CoherenceConfig& coh,
                              const std::vector<TokenStream>& streams, WarningLog* warnings,
                              int threads) {
    if (k_min < 2 || std::size_t(k_max) >= dtm.term_count() + 1 || k_min > k_max) {
        throw ConfigError("sweep: range must satisfy 2 <= k_min <= k_max <= vocabulary size - 1");
    }

    struct FitOutcome {
        bool failed = false;
        double mean = 0.0;
        double se = 0.0;
        std::string error;
    };

    const auto run_one = [&](int k) -> FitOutcome {
        FitOutcome out;
        try {
            TopicModelConfig cfg = config_template;
            cfg.k = k;
            cfg.alpha = config_template.alpha;  // <=0 keeps the 50/k rule per fit
            cfg.seed = derive_seed(config_template.seed, std::uint64_t(k));
            WarningLog local;
            const TopicModel model = fit_lda(dtm, cfg, &local);
            const auto coherence = coherence_cv(model, streams, coh, &local);
            double mean = 0.0;
            for (double c : coherence) mean += c;
            mean /= double(coherence.size());
            double var = 0.0;
            for (double c : coherence) var += (c - mean) * (c - mean);
            var = coherence.size() > 1 ? var / double(coherence.size() - 1) : 0.0;
            out.mean = mean;
            out.se = std::sqrt(var / double(coherence.size()));
        } catch (const std::exception& e) {
            out.failed = true;
            out.error = e.what();
        }
        return out;
    };

    const int n_fits = k_max - k_min + 1;
    std::vector<FitOutcome> outcomes(n_fits);
    if (threads <= 1) {
        for (int i = 0; i < n_fits; ++i) outcomes[i] = run_one(k_min + i);
    } else {
        std::vector<std::future<FitOutcome>> futures;
        futures.reserve(n_fits);
        for (int i = 0; i < n_fits; ++i) {
            futures.push_back(std::async(std::launch::async, run_one, k_min + i));
        }
        for (int i = 0; i < n_fits; ++i) outcomes[i] = futures[i].get();
    }

    SweepResult result;
    int best_index = -1;
    for (int i = 0; i < n_fits; ++i) {
        SweepRow row;
        row.k = k_min + i;
        row.failed = outcomes[i].failed;
        row.mean_coherence = outcomes[i].mean;
        if (outcomes[i].failed) {
            warn(warnings, "sweep: fit for k=" + std::to_string(row.k) +
                               " failed: " + outcomes[i].error);
        } else if (best_index < 0 || outcomes[i].mean > outcomes[best_index].mean) {
            best_index = i;
        }
        result.rows.push_back(row);
    }
    if (best_index < 0) throw ConfigError("sweep: every fit failed");

    result.best_k = k_min + best_index;
    const double cutoff = outcomes[best_index].mean - outcomes[best_index].se;
    for (int i = 0; i < n_fits; ++i) {
        result.rows[i].within_one_se = !outcomes[i].failed && outcomes[i].mean >= cutoff;
    }
    int lo = best_index, hi = best_index;
    while (lo > 0 && result.rows[lo - 1].within_one_se) --lo;
    while (hi + 1 < n_fits && result.rows[hi + 1].within_one_se) ++hi;
    result.flagged_range = {k_min + lo, k_min + hi};
    return result;
}

}  // namespace corpuscope
