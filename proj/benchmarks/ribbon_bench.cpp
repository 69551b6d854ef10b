#include <fstream>
#include <random>
#include <sstream>

#include <benchmark/benchmark.h>

#include "ribbon/bollobas_riordan.hpp"
#include "ribbon/duality.hpp"
#include "ribbon/links.hpp"

namespace {

using namespace ribbon;

std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(RIBBON_FIXTURE_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// One vertex with a chain of interleaved loops: e edges, every occurrence Along.
SignedRibbonGraph interleaved_loops(std::size_t edges) {
    std::string text = "ribbon-graph v1\nedges:";
    for (std::size_t i = 0; i < edges; ++i) text += " e" + std::to_string(i) + (i % 3 == 0 ? ":-" : ":+");
    text += "\ncircle:";
    for (std::size_t i = 0; i < edges; ++i) text += " e" + std::to_string(i);
    for (std::size_t i = 0; i < edges; ++i) text += " e" + std::to_string(i);
    return parse_ribbon_graph(text + "\n");
}

VirtualLinkDiagram chain_diagram(std::size_t crossings) {
    // Passes O1 U2 O3 ... followed by the opposite passes of the same crossings.
    std::vector<Pass> comp;
    for (CrossingId c = 1; c <= crossings; ++c) comp.push_back({c, c % 2 ? Role::Over : Role::Under});
    for (CrossingId c = 1; c <= crossings; ++c) comp.push_back({c, c % 2 ? Role::Under : Role::Over});
    std::vector<std::pair<CrossingId, Sign>> signs;
    for (CrossingId c = 1; c <= crossings; ++c) signs.emplace_back(c, Sign::Positive);
    return VirtualLinkDiagram({comp}, signs);
}

void BM_StateSum(benchmark::State& state) {
    const SignedRibbonGraph g = interleaved_loops(static_cast<std::size_t>(state.range(0)));
    const unsigned workers = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(bollobas_riordan(g, kDefaultEdgeGuard, workers));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StateSum)->ArgsProduct({{8, 12, 16}, {1, 2}})->Unit(benchmark::kMillisecond);

void BM_PartialDual(benchmark::State& state) {
    const SignedRibbonGraph g = interleaved_loops(16);
    std::mt19937_64 rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(partial_dual_mask(g, rng() & 0xffff));
}
BENCHMARK(BM_PartialDual);

void BM_DualOrbit(benchmark::State& state) {
    const SignedRibbonGraph g = interleaved_loops(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dual_orbit(g, 20).count());
}
BENCHMARK(BM_DualOrbit)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_DualOrbitKlein(benchmark::State& state) {
    const SignedRibbonGraph g = parse_ribbon_graph(read_fixture("klein.rg"));
    for (auto _ : state) benchmark::DoNotOptimize(dual_orbit(g, 20).count());
}
BENCHMARK(BM_DualOrbitKlein);

void BM_Bracket(benchmark::State& state) {
    const VirtualLinkDiagram d = chain_diagram(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d));
}
BENCHMARK(BM_Bracket)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_JonesViaStateGraph(benchmark::State& state) {
    const VirtualLinkDiagram d = parse_gauss(read_fixture("trefoil.gauss"));
    for (auto _ : state) {
        const SignedRibbonGraph g = state_ribbon_graph(d, all_A_state(d));
        const GraphStats s = stats(g);
        benchmark::DoNotOptimize(jones_from_state_graph(bollobas_riordan(g), writhe(d), s.e, s.r, s.k));
    }
}
BENCHMARK(BM_JonesViaStateGraph);

}  // namespace

BENCHMARK_MAIN();
