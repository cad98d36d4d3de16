#include <benchmark/benchmark.h>

#include "tropmono/complex.hpp"
#include "tropmono/ideal.hpp"
#include "tropmono/poset.hpp"

using namespace tropmono;

namespace {

// deterministic instances sized by the benchmark range
GeneratorSet instance(int n, int d) {
    std::uint64_t s = 88172645463325252ull + n * 131 + d;
    auto next = [&s] {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    };
    std::vector<Point> pts;
    for (int j = 0; j < n; ++j) {
        Point p(d);
        for (int i = 0; i < d; ++i) p[i] = ExtValue(static_cast<long>(next() % 11) - 5);
        pts.push_back(p);
    }
    GeneratorSet V;
    V.dim = d;
    V.points = pts;
    return minimal_generators(V);
}

}  // namespace

static void BM_PrincipalApices(benchmark::State& state) {
    const GeneratorSet V = instance(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(principal_apices(V));
}
BENCHMARK(BM_PrincipalApices)->Arg(4)->Arg(8)->Arg(12);

static void BM_MaxLattice(benchmark::State& state) {
    const GeneratorSet V = instance(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(max_lattice(V));
}
BENCHMARK(BM_MaxLattice)->Arg(4)->Arg(8);

static void BM_FacetComplexHomology(benchmark::State& state) {
    const GeneratorSet V = instance(static_cast<int>(state.range(0)), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(reduced_homology(facet_complex(V)));
}
BENCHMARK(BM_FacetComplexHomology)->Arg(4)->Arg(8);

static void BM_BettiTable(benchmark::State& state) {
    std::vector<Exponent> gens;
    std::uint64_t s = 2463534242ull;
    auto next = [&s] {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    };
    for (int j = 0; j < state.range(0); ++j) {
        Exponent u(3);
        bool pos = false;
        for (int i = 0; i < 3; ++i) {
            u[i] = next() % 6;
            pos |= u[i] > 0;
        }
        if (!pos) u[0] = 1;
        gens.push_back(u);
    }
    const MonomialIdeal I = minimize(make_ideal(3, gens));
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_numbers(I, BettiMethod::LcmInterval));
}
BENCHMARK(BM_BettiTable)->Arg(4)->Arg(6);

static void BM_CpOrder(benchmark::State& state) {
    const GeneratorSet V = instance(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(cp_order(V));
}
BENCHMARK(BM_CpOrder)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
