#include <benchmark/benchmark.h>

#include "corpuscope/embed.hpp"
#include "corpuscope/rng.hpp"

namespace {

using namespace corpuscope;

std::vector<TokenStream> embedding_corpus(std::size_t docs) {
    Rng rng(7);
    std::vector<TokenStream> streams(docs);
    for (std::size_t d = 0; d < docs; ++d) {
        streams[d].doc_id = "d" + std::to_string(d);
        for (int i = 0; i < 80; ++i) {
            streams[d].tokens.push_back("w" + std::to_string(rng.below(300)));
        }
    }
    return streams;
}

void BM_TrainDocEmbeddings(benchmark::State& state) {
    const auto streams = embedding_corpus(std::size_t(state.range(0)));
    EmbedConfig cfg;
    cfg.dimension = 64;
    cfg.epochs = 5;
    cfg.min_term_count = 1;
    cfg.seed = 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(train_doc_embeddings(streams, cfg));
    }
    state.SetItemsProcessed(int64_t(state.iterations()) * int64_t(streams.size()) * 80 *
                            cfg.epochs);
}

BENCHMARK(BM_TrainDocEmbeddings)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

}  // namespace
