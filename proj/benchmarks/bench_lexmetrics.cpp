#include <benchmark/benchmark.h>

#include "corpuscope/lexmetrics.hpp"
#include "corpuscope/rng.hpp"

namespace {

using namespace corpuscope;

TokenStream long_stream(std::size_t tokens) {
    Rng rng(5);
    TokenStream s;
    s.doc_id = "bench";
    for (std::size_t i = 0; i < tokens; ++i) {
        s.tokens.push_back("tok" + std::to_string(rng.below(120)));
    }
    return s;
}

void BM_Hdd(benchmark::State& state) {
    const auto stream = long_stream(std::size_t(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hdd(stream, 42));
    }
}
BENCHMARK(BM_Hdd)->Arg(200)->Arg(2000);

void BM_Mtld(benchmark::State& state) {
    const auto stream = long_stream(std::size_t(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mtld(stream, 0.72));
    }
}
BENCHMARK(BM_Mtld)->Arg(200)->Arg(2000);

void BM_Readability(benchmark::State& state) {
    Rng rng(9);
    std::string text;
    for (int s = 0; s < 12; ++s) {
        for (int w = 0; w < 15; ++w) {
            text += w ? " " : (s ? " " : "");
            text += "lorem";
        }
        text += ".";
    }
    const LexConfig cfg = LexConfig::defaults();
    for (auto _ : state) {
        benchmark::DoNotOptimize(readability(text, cfg));
    }
}
BENCHMARK(BM_Readability);

}  // namespace
