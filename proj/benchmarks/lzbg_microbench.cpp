#include "lzbg/conversions.hpp"
#include "lzbg/lz_parse.hpp"
#include "lzbg/phi_builder.hpp"
#include "lzbg/sa_induce.hpp"
#include "lzbg/textgen.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <string>

namespace {

enum Kind { kRandom4, kRepetitive, kEnglish };

const std::string& corpus(int kind, std::size_t n) {
    static std::map<std::pair<int, std::size_t>, std::string> cache;
    auto [it, fresh] = cache.try_emplace({kind, n});
    if (fresh) {
        switch (kind) {
        case kRandom4: it->second = lzbg::textgen::random_text(n, 4, 7); break;
        case kRepetitive: it->second = lzbg::textgen::repetitive_text(n, 7); break;
        default: it->second = lzbg::textgen::english_like_text(n, 7); break;
        }
    }
    return it->second;
}

void set_rate(benchmark::State& state, std::size_t n) {
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

void BM_SuffixArray(benchmark::State& state) {
    const std::string& s = corpus(int(state.range(0)), std::size_t(state.range(1)));
    const lzbg::Text t{std::string_view(s)};
    lzbg::Workspace ws(t.size());
    for (auto _ : state) {
        ws.set_state(lzbg::WorkspaceState::Raw);
        lzbg::build_suffix_array(t, ws);
        benchmark::DoNotOptimize(ws.data());
    }
    set_rate(state, t.size());
}

void BM_PhiFromText(benchmark::State& state) {
    const std::string& s = corpus(int(state.range(0)), std::size_t(state.range(1)));
    const lzbg::Text t{std::string_view(s)};
    lzbg::Workspace ws(t.size());
    for (auto _ : state) {
        ws.set_state(lzbg::WorkspaceState::Raw);
        lzbg::build_phi_from_text(t, ws);
        benchmark::DoNotOptimize(ws.data());
    }
    set_rate(state, t.size());
}

void BM_SaToPhi(benchmark::State& state) {
    const std::string& s = corpus(int(state.range(0)), std::size_t(state.range(1)));
    const lzbg::Text t{std::string_view(s)};
    lzbg::Workspace ws(t.size());
    for (auto _ : state) {
        state.PauseTiming();
        ws.set_state(lzbg::WorkspaceState::Raw);
        lzbg::build_suffix_array(t, ws);
        state.ResumeTiming();
        lzbg::sa_to_phi_inplace(t, ws);
        benchmark::DoNotOptimize(ws.data());
    }
    set_rate(state, t.size());
}

void BM_PhiToNsvAndBack(benchmark::State& state) {
    const std::string& s = corpus(int(state.range(0)), std::size_t(state.range(1)));
    const lzbg::Text t{std::string_view(s)};
    lzbg::Workspace ws(t.size());
    lzbg::build_phi_from_text(t, ws);
    for (auto _ : state) {
        lzbg::phi_to_nsv_inplace(ws);
        lzbg::nsv_to_phi_with_visitor(ws, [](lzbg::word_t, lzbg::word_t, lzbg::word_t) {});
        benchmark::DoNotOptimize(ws.data());
    }
    set_rate(state, t.size());
}

void BM_Factorize(benchmark::State& state) {
    const std::string& s = corpus(int(state.range(0)), std::size_t(state.range(1)));
    const lzbg::Text t{std::string_view(s)};
    const auto v = lzbg::kAllVariants[std::size_t(state.range(2))];
    state.SetLabel(std::string(lzbg::variant_name(v)));
    for (auto _ : state) benchmark::DoNotOptimize(lzbg::factorize(t, v).factors.size());
    set_rate(state, t.size());
}

void structure_args(benchmark::internal::Benchmark* b) {
    for (int kind : {kRandom4, kRepetitive, kEnglish})
        for (std::int64_t n : {1 << 16, 1 << 20, 1 << 22}) b->Args({kind, n});
    b->Unit(benchmark::kMillisecond);
}

void variant_args(benchmark::internal::Benchmark* b) {
    for (int kind : {kRandom4, kRepetitive, kEnglish})
        for (std::int64_t v = 0; v < 4; ++v) b->Args({kind, 1 << 22, v});
    b->Unit(benchmark::kMillisecond);
}

} // namespace

BENCHMARK(BM_SuffixArray)->Apply(structure_args);
BENCHMARK(BM_PhiFromText)->Apply(structure_args);
BENCHMARK(BM_SaToPhi)->Apply(structure_args);
BENCHMARK(BM_PhiToNsvAndBack)->Apply(structure_args);
BENCHMARK(BM_Factorize)->Apply(variant_args);

BENCHMARK_MAIN();
