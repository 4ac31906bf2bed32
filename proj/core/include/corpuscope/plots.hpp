#pragma once

#include <string>
#include <utility>
#include <vector>

#include "corpuscope/ca.hpp"
#include "corpuscope/embed.hpp"
#include "corpuscope/evolution.hpp"
#include "corpuscope/lexmetrics.hpp"
#include "corpuscope/pipeline.hpp"
#include "corpuscope/topics.hpp"

namespace corpuscope {

// Rendered output documents for one stage: (path relative to the output
// directory, file content). Tables are CSV/JSON, plots are SVG; topic
// indices are 1-based everywhere in emitted files.
struct StageArtifacts {
    std::vector<std::pair<std::string, std::string>> files;
};

StageArtifacts trend_artifacts(const TrendTable& table, const std::string& highlight_country);
StageArtifacts ca_artifacts(const CAResult& result);
StageArtifacts lex_artifacts(const std::vector<YearlyLexRow>& rows);
StageArtifacts similarity_artifacts(const SimilarityMatrix& matrix,
                                    const std::vector<YearPairSimilarity>& series);
StageArtifacts topics_artifacts(const TopicModel& model,
                                const std::vector<TopicQualityRow>& quality,
                                const std::vector<std::vector<RankedWord>>& keywords);
StageArtifacts evolution_artifacts(const std::vector<PrevalenceTrend>& trends,
                                   const TopicCorrelation& correlation,
                                   const DominantDistribution& dominant);
StageArtifacts sweep_artifacts(const SweepResult& sweep);

}  // namespace corpuscope
