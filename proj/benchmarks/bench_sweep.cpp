// Microbenchmarks for the hot paths: the xor-shift bitset permutation, the
// bit-sliced neighbor-count sweep behind verify_perfect, minimum-distance
// enumeration and the BFS distance coloring.

#include <benchmark/benchmark.h>

#include "hcp/hcp.hpp"

using namespace hcp;

namespace {

VertexBitset random_support(int bits, uint64_t seed, double density) {
    VertexBitset s(bits);
    uint64_t state = seed;
    const uint64_t limit = static_cast<uint64_t>(density * double(~uint64_t{0}));
    for (uint64_t i = 0; i < s.size(); ++i) {
        state += 0x9E3779B97f4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z ^= z >> 31;
        if (z < limit) s.set(i);
    }
    return s;
}

void BM_XorShift(benchmark::State& state) {
    const int bits = static_cast<int>(state.range(0));
    const VertexBitset s = random_support(bits, 1, 0.3);
    VertexBitset out(bits);
    uint32_t mask = 0x2A5;
    for (auto _ : state) {
        s.xor_shift_into(mask, out);
        benchmark::DoNotOptimize(out.words().data());
        mask = (mask * 5 + 1) & static_cast<uint32_t>(s.size() - 1);
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(s.size() / 8));
}
BENCHMARK(BM_XorShift)->Arg(20)->Arg(23);

void BM_VerifySupportHalvedCube(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SweepGraph g = SweepGraph::make(GraphKind::H2Odd, n);
    const VertexBitset support = random_support(n - 1, 7, 0.01);
    for (auto _ : state) {
        const auto rep = verify_support(g, support);
        benchmark::DoNotOptimize(rep.perfect);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(g.vertex_count()) * g.degree());
}
BENCHMARK(BM_VerifySupportHalvedCube)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_MinDistanceD(benchmark::State& state) {
    const BinaryCode d = build_d();
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_distance(d));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(d.size()));
}
BENCHMARK(BM_MinDistanceD)->Unit(benchmark::kMillisecond);

void BM_DistanceColoringGolay(benchmark::State& state) {
    const BinaryCode f = build_f();
    for (auto _ : state) {
        const Coloring col = distance_coloring(f);
        benchmark::DoNotOptimize(col.k);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * (int64_t{1} << 24) * 24);
}
BENCHMARK(BM_DistanceColoringGolay)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
