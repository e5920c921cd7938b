// Microbenchmarks for the hot paths: canonical basis construction, the
// distinguished products, raw T-basis multiplication, weight multiplicities
// and cell classification.  Tables and classifiers are rebuilt inside the
// timed region wherever caching would otherwise turn the benchmark into a
// map lookup.

#include <benchmark/benchmark.h>

#include <vector>

#include "b2hecke/bernstein.hpp"
#include "b2hecke/cells.hpp"
#include "b2hecke/coxeter.hpp"
#include "b2hecke/hecke.hpp"
#include "b2hecke/klbasis.hpp"
#include "b2hecke/phimaps.hpp"
#include "b2hecke/weights.hpp"

using namespace b2hecke;

namespace {

// Cold construction of C_w for every w in one length layer; the recursion
// fills in all shorter lengths as it goes.
void BM_canonical_basis_layer(benchmark::State& state) {
    const int len = static_cast<int>(state.range(0));
    std::vector<GroupElt> layer;
    for (const GroupElt& w : enumerate_elements(len, true))
        if (w.length() == len) layer.push_back(w);
    for (auto _ : state) {
        KLTable tab;
        for (const GroupElt& w : layer) benchmark::DoNotOptimize(tab.c_basis(w));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(layer.size()));
}
BENCHMARK(BM_canonical_basis_layer)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

// The headline product C_rt * S_lambda, cold, including the base change of
// the result into the C basis.
void BM_crt_s_product(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        KLTable tab;
        CellClassifier cells;
        benchmark::DoNotOptimize(crt_s_product({d, d}, false, tab, cells));
    }
}
BENCHMARK(BM_crt_s_product)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

// Raw T-basis multiplication of two dense central elements (63 terms each).
void BM_t_mul_central(benchmark::State& state) {
    const HeckeElt h = s_element({1, 1}).expansion;
    for (auto _ : state) benchmark::DoNotOptimize(t_mul(h, h));
}
BENCHMARK(BM_t_mul_central)->Unit(benchmark::kMillisecond);

// Full weight diagram of a square-shaped highest weight.
void BM_character(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(character({d, d}));
}
BENCHMARK(BM_character)->Arg(4)->Arg(6)->Arg(8);

// Cell classification of the whole length <= 12 ball with a cold memo.
void BM_cell_classify(benchmark::State& state) {
    const std::vector<GroupElt> ball = enumerate_elements(12, true);
    for (auto _ : state) {
        CellClassifier cells;
        for (const GroupElt& w : ball) benchmark::DoNotOptimize(cells.classify(w));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(ball.size()));
}
BENCHMARK(BM_cell_classify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
