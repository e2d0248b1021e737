#include <ams/generate.hpp>
#include <ams/oracle.hpp>
#include <ams/solver.hpp>

#include <benchmark/benchmark.h>

namespace {

ams::CnfTheory benchTheory(std::size_t atoms) {
    ams::Rng rng(11);
    return ams::randomCnf(rng, ams::letters(atoms), ams::CnfShape{atoms, 3 * atoms, 3, 0.0});
}

void materialize(benchmark::State& state, ams::Exec exec) {
    auto f = benchTheory(static_cast<std::size_t>(state.range(0)));
    auto m = ams::unitPropagateModule(f);
    for (auto _ : state) {
        auto e = exec == ams::Exec::Serial ? ams::materializeSerial(m) : ams::materializeParallel(m);
        benchmark::DoNotOptimize(e.nodes.size());
    }
}

void graph(benchmark::State& state, ams::Exec exec) {
    ams::ModularSystem a;
    a.add("F", ams::unitPropagateModule(benchTheory(static_cast<std::size_t>(state.range(0)))));
    for (auto _ : state) {
        auto g = ams::enumerateTransitionGraph(a, 5, exec);
        benchmark::DoNotOptimize(g.edges.size());
    }
}

void cnfModels(benchmark::State& state, ams::Exec exec) {
    auto f = benchTheory(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ams::enumerateCnfModels(f, exec).size());
}

} // namespace

BENCHMARK_CAPTURE(materialize, serial, ams::Exec::Serial)->DenseRange(6, 10, 2);
BENCHMARK_CAPTURE(materialize, parallel, ams::Exec::Parallel)->DenseRange(6, 10, 2);
BENCHMARK_CAPTURE(graph, serial, ams::Exec::Serial)->DenseRange(3, 5, 1);
BENCHMARK_CAPTURE(graph, parallel, ams::Exec::Parallel)->DenseRange(3, 5, 1);
BENCHMARK_CAPTURE(cnfModels, serial, ams::Exec::Serial)->DenseRange(12, 20, 4);
BENCHMARK_CAPTURE(cnfModels, parallel, ams::Exec::Parallel)->DenseRange(12, 20, 4);

BENCHMARK_MAIN();
