#include <benchmark/benchmark.h>

#include "tessella/audit.hpp"
#include "tessella/coset_table.hpp"
#include "tessella/svg.hpp"

using namespace tessella;

// Order of the finite triangle groups *pq2.
static void BM_ToddCoxeterFinite(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    auto pres = build_triangle_group(p, 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(coset_enumerate({pres, {}}).size());
}
BENCHMARK(BM_ToddCoxeterFinite)->Arg(3)->Arg(4)->Arg(5);

static void BM_ToddCoxeterPaperSubgroup(benchmark::State& state) {
    SubgroupSpec sub{build_triangle_group(6, 4, 2), parse_word_list("PQRQRP,Q,R")};
    for (auto _ : state) benchmark::DoNotOptimize(coset_enumerate(sub).size());
}
BENCHMARK(BM_ToddCoxeterPaperSubgroup);

static void BM_LowIndex(benchmark::State& state) {
    auto pres = build_triangle_group(6, 4, 2);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(low_index_subgroups(pres, n, {}).size());
}
BENCHMARK(BM_LowIndex)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_RealizePatch(benchmark::State& state) {
    auto real = realize(parse_instance("quasi:7,3"));
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(realize_patch(real, r).tiles.size());
}
BENCHMARK(BM_RealizePatch)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_EnumeratePrecise(benchmark::State& state, const char* spec) {
    auto inst = parse_instance(spec);
    EnumerateOptions opt;
    opt.precise_only = true;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_colorings(inst, Mode::Full, inst.valency(), opt).size());
}
BENCHMARK_CAPTURE(BM_EnumeratePrecise, quasi_12_12, "quasi:12,12")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EnumeratePrecise, snub5_12_6, "snub5:12,6")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EnumeratePrecise, hex6neq_15_12, "hex6neq:15,12")->Unit(benchmark::kMillisecond);

static void BM_Render(benchmark::State& state) {
    auto inst = parse_instance("quasi:6,4");
    auto real = realize(inst);
    auto patch = realize_patch(real, 3);
    EnumerateOptions opt;
    opt.precise_only = true;
    auto s = enumerate_colorings(inst, Mode::Full, 4, opt).front();
    for (auto _ : state) benchmark::DoNotOptimize(render(patch, &s).size());
}
BENCHMARK(BM_Render)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
