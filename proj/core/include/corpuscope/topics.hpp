#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corpuscope/dtm.hpp"
#include "corpuscope/matrix.hpp"
#include "corpuscope/textprep.hpp"
#include "corpuscope/warnings.hpp"

namespace corpuscope {

struct TopicModelConfig {
    int k = 12;
    double alpha = 0.0;  // <= 0 resolves to 50/k
    double beta = 0.01;
    int iterations = 1000;
    int burn_in = 200;
    bool average_after_burn_in = false;  // default: summarize the final state
    bool debug_checks = false;           // verify count conservation every sweep
    std::uint64_t seed = 0;

    double resolved_alpha() const { return alpha > 0.0 ? alpha : 50.0 / double(k); }
    void validate() const;
};

struct TopicModel {
    Matrix phi;    // k x vocab, rows sum to 1
    Matrix theta;  // docs x k, rows sum to 1
    std::vector<std::vector<int>> assignments;  // final-state topic per token
    std::vector<std::string> doc_ids;           // retained (non-empty) docs
    std::vector<std::size_t> doc_indices;       // positions in the source dtm
    std::vector<std::string> vocab;
    TopicModelConfig config;
    std::vector<double> log_likelihood_trace;  // joint log p(w, z), one per sweep

    std::size_t num_topics() const { return phi.rows(); }
    std::size_t vocab_size() const { return phi.cols(); }
    std::size_t doc_count() const { return theta.rows(); }
    // top-n terms of one topic by probability, ties by term order
    std::vector<std::size_t> top_terms(std::size_t topic, std::size_t n) const;
};

// Collapsed Gibbs sampling. Deterministic for a given seed; single-threaded.
// Documents with no tokens are dropped with a warning.
TopicModel fit_lda(const DocTermMatrix& dtm, const TopicModelConfig& cfg,
                   WarningLog* warnings = nullptr);

// Same sampler on explicit token-id sequences (token visit order = sequence
// order). fit_lda expands each dtm row in column order.
TopicModel fit_lda_tokens(std::vector<std::vector<int>> docs, std::vector<std::string> doc_ids,
                          std::vector<std::string> vocab, const TopicModelConfig& cfg,
                          WarningLog* warnings = nullptr);

struct CoherenceConfig {
    int top_n = 10;
    int window_size = 110;
    double epsilon = 1e-12;

    void validate() const;
};

// C_v coherence per topic: boolean sliding-window probabilities, NPMI
// context vectors over the topic's top words, one-set segmentation, mean
// cosine against the summed vector.
std::vector<double> coherence_cv(const TopicModel& model, const std::vector<TokenStream>& streams,
                                 const CoherenceConfig& cfg, WarningLog* warnings = nullptr);

struct SweepRow {
    int k = 0;
    double mean_coherence = 0.0;
    bool within_one_se = false;  // within one standard error of the best mean
    bool failed = false;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    int best_k = 0;
    std::pair<int, int> flagged_range{0, 0};  // contiguous near-best range
};

// Fits one model per K with a derived seed and reports mean C_v. Fits run in
// parallel when threads > 1; results do not depend on the thread count.
SweepResult sweep_topic_count(const DocTermMatrix& dtm, int k_min, int k_max,
                              const TopicModelConfig& config_template, const CoherenceConfig& coh,
                              const std::vector<TokenStream>& streams,
                              WarningLog* warnings = nullptr, int threads = 1);

struct RankedWord {
    std::string word;
    double frex = 0.0;
    double probability = 0.0;
    double exclusivity = 0.0;
};

// FREX ranking per topic: harmonic combination of the per-topic ECDFs of
// exclusivity (weight w) and frequency (weight 1-w).
std::vector<std::vector<RankedWord>> frex_keywords(const TopicModel& model, double frex_weight,
                                                   int n);

struct TopicQualityRow {
    int topic = 0;  // 0-based
    double coherence = 0.0;
    double exclusivity = 0.0;  // mean exclusivity of the topic's top words
    double proportion = 0.0;   // share of corpus tokens assigned to the topic
};

std::vector<TopicQualityRow> topic_quality(const TopicModel& model,
                                           const std::vector<TokenStream>& streams,
                                           const CoherenceConfig& coh, double frex_weight,
                                           WarningLog* warnings = nullptr);

struct DominantTopic {
    std::size_t topic = 0;  // 0-based
    bool tie = false;       // ties resolve to the lowest index
};

// argmax of one theta row; the row must sum to 1.
DominantTopic dominant_topic(std::span<const double> theta_row);

}  // namespace corpuscope
