#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "corpuscope/matrix.hpp"
#include "corpuscope/textprep.hpp"
#include "corpuscope/warnings.hpp"

namespace corpuscope {

struct EmbedConfig {
    int dimension = 100;
    int epochs = 20;
    int negative_samples = 5;
    double initial_learning_rate = 0.025;  // linear decay to lr/10000
    double noise_exponent = 0.75;          // unigram distribution power
    int min_term_count = 5;
    std::uint64_t seed = 0;

    void validate() const;
};

struct EmbeddingModel {
    std::vector<std::string> doc_ids;
    Matrix doc_vectors;  // docs x dimension
    EmbedConfig config;
    double final_loss = 0.0;  // mean negative-sampling loss over the last epoch
};

// Distributed bag-of-words paragraph vectors: each document vector learns to
// score its own tokens above noise tokens drawn from the unigram
// distribution raised to noise_exponent. Single-threaded and deterministic
// for a given seed.
EmbeddingModel train_doc_embeddings(const std::vector<TokenStream>& streams,
                                    const EmbedConfig& cfg);

// dot(u, v) / (|u| |v|); throws ContractError on zero vectors or mismatched
// dimensions.
double cosine(std::span<const double> u, std::span<const double> v);

struct SimilarityMatrix {
    std::vector<int> years;  // ascending
    Matrix values;           // years x years aggregated cosine; NaN when undefined
};

enum class SimilarityAggregate { kMean, kMedian };

// Aggregated pairwise cosine between (and within) years; mean by default,
// median behind the flag. Within-year entries use distinct pairs only; a
// year with fewer than two documents gets NaN.
SimilarityMatrix year_similarity_matrix(const EmbeddingModel& model, const std::vector<int>& years,
                                        WarningLog* warnings = nullptr,
                                        SimilarityAggregate aggregate = SimilarityAggregate::kMean);

struct YearPairSimilarity {
    int year_a = 0;
    int year_b = 0;
    double value = 0.0;
};

// [(y, y+1)] for adjacent years present in the matrix; gaps are omitted with
// a warning.
std::vector<YearPairSimilarity> consecutive_year_series(const SimilarityMatrix& matrix,
                                                        WarningLog* warnings = nullptr);

// Portable dump: CSV of doc_id + vector components, JSON config sidecar.
void write_embedding_dump(const EmbeddingModel& model, const std::filesystem::path& csv_path,
                          const std::filesystem::path& config_path);
EmbeddingModel read_embedding_dump(const std::filesystem::path& csv_path,
                                   const std::filesystem::path& config_path);

}  // namespace corpuscope
