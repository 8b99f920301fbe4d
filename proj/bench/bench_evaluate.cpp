#include <benchmark/benchmark.h>

#include <fstream>

#include "bocd/benchmark.hpp"
#include "bocd/objectives.hpp"

namespace {

bocd::Graph football() {
    std::ifstream in(BOCD_DATA_DIR "/football.edges");
    return bocd::load_edge_list(in);
}

bocd::Graph planted() {
    bocd::BenchmarkSpec spec;
    spec.mixing = 0.3;
    return bocd::generate(spec).graph;
}

std::vector<bocd::Chromosome> population(std::size_t n, std::size_t size) {
    bocd::Rng rng(42);
    std::vector<bocd::Chromosome> pop;
    for (std::size_t i = 0; i < size; ++i) pop.push_back(bocd::random_chromosome(n, rng));
    return pop;
}

template <class MakeGraph>
void run(benchmark::State& state, MakeGraph make, bool serial) {
    const auto g = make();
    const auto pop = population(g.node_count(), 400);
    std::vector<bocd::ObjectivePair> out(pop.size());
    for (auto _ : state) {
        if (serial)
            bocd::evaluate_population_serial(g, pop, {}, out);
        else
            bocd::evaluate_population(g, pop, {}, out, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(pop.size()));
}

void BM_FootballSerial(benchmark::State& s) { run(s, football, true); }
void BM_FootballOpenMP(benchmark::State& s) { run(s, football, false); }
void BM_PlantedSerial(benchmark::State& s) { run(s, planted, true); }
void BM_PlantedOpenMP(benchmark::State& s) { run(s, planted, false); }

BENCHMARK(BM_FootballSerial)->UseRealTime();
BENCHMARK(BM_FootballOpenMP)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime();
BENCHMARK(BM_PlantedSerial)->UseRealTime();
BENCHMARK(BM_PlantedOpenMP)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
