#include <hamcensus/canonical.hpp>
#include <hamcensus/constructions.hpp>
#include <hamcensus/cycle_engine.hpp>

#include <benchmark/benchmark.h>

using namespace hamcensus;

namespace
{
    SearchOptions single() { return SearchOptions{1}; }

    void BM_count_antihole(benchmark::State & state)
    {
        auto g = antihole_graph(7);
        for (auto _ : state)
            benchmark::DoNotOptimize(count_hamiltonian_cycles(g, {}, single()));
    }
    BENCHMARK(BM_count_antihole);

    void BM_count_gadget(benchmark::State & state)
    {
        auto g = gadget_5regular().graph;
        for (auto _ : state)
            benchmark::DoNotOptimize(count_hamiltonian_cycles(g, {}, single()));
    }
    BENCHMARK(BM_count_gadget)->Unit(benchmark::kMillisecond);

    void BM_count_cubic56(benchmark::State & state)
    {
        auto g = chia_thomassen().G;
        for (auto _ : state)
            benchmark::DoNotOptimize(count_hamiltonian_cycles(g, {}, single()));
    }
    BENCHMARK(BM_count_cubic56)->Unit(benchmark::kMillisecond);

    void BM_edge_profile_petersen(benchmark::State & state)
    {
        auto g = petersen_graph();
        for (auto _ : state)
            benchmark::DoNotOptimize(edge_traversal_profile(g, single()));
    }
    BENCHMARK(BM_edge_profile_petersen);

    void BM_canonical_form(benchmark::State & state)
    {
        auto g = generalized_petersen_graph(int(state.range(0)), 2);
        for (auto _ : state)
            benchmark::DoNotOptimize(canonical_form(g));
    }
    BENCHMARK(BM_canonical_form)->Arg(9)->Arg(15)->Arg(25);

    void BM_generate_cubic(benchmark::State & state)
    {
        int n = int(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(generate_regular_graphs(n, 3).size());
    }
    BENCHMARK(BM_generate_cubic)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
}
BENCHMARK_MAIN();
