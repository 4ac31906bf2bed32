#include <benchmark/benchmark.h>

#include "corpuscope/rng.hpp"
#include "corpuscope/topics.hpp"

namespace {

using namespace corpuscope;

// synthetic corpus with 3 planted topics over a 60-term vocabulary
std::vector<TokenStream> synthetic_streams(std::size_t docs, std::size_t tokens_per_doc) {
    Rng rng(99);
    std::vector<TokenStream> streams(docs);
    for (std::size_t d = 0; d < docs; ++d) {
        streams[d].doc_id = "d" + std::to_string(d);
        const std::size_t topic = rng.below(3);
        for (std::size_t i = 0; i < tokens_per_doc; ++i) {
            const std::size_t term = topic * 20 + rng.below(20);
            streams[d].tokens.push_back("t" + std::to_string(term));
        }
    }
    return streams;
}

void BM_GibbsSweep(benchmark::State& state) {
    const auto streams = synthetic_streams(std::size_t(state.range(0)), 100);
    const auto dtm = build_dtm(streams, std::vector<int>(streams.size(), 2000));

    TopicModelConfig cfg;
    cfg.k = 5;
    cfg.alpha = 0.5;
    cfg.iterations = 10;
    cfg.burn_in = 0;
    cfg.seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_lda(dtm, cfg));
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(dtm.total_count()) *
                            cfg.iterations);
}

BENCHMARK(BM_GibbsSweep)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_CoherenceCv(benchmark::State& state) {
    const auto streams = synthetic_streams(std::size_t(state.range(0)), 100);
    const auto dtm = build_dtm(streams, std::vector<int>(streams.size(), 2000));
    TopicModelConfig cfg;
    cfg.k = 5;
    cfg.alpha = 0.5;
    cfg.iterations = 30;
    cfg.burn_in = 0;
    cfg.seed = 1;
    const auto model = fit_lda(dtm, cfg);
    const CoherenceConfig coh;
    for (auto _ : state) {
        benchmark::DoNotOptimize(coherence_cv(model, streams, coh));
    }
}

BENCHMARK(BM_CoherenceCv)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
