#include <orbistack/orbistack.hpp>

#include <benchmark/benchmark.h>

using namespace orbistack;

static void BM_SectionBasis(benchmark::State &state) {
    const WeightSystem a({1, 2, 3, 5});
    for (auto _ : state)
        benchmark::DoNotOptimize(section_basis(a, state.range(0)));
}
BENCHMARK(BM_SectionBasis)->Arg(10)->Arg(30)->Arg(60);

static void BM_HilbertBasis(benchmark::State &state) {
    const auto W = IntMatrix::row_vector({1, 2, 3, 5});
    const std::vector<std::int64_t> chi{state.range(0)};
    for (auto _ : state)
        benchmark::DoNotOptimize(hilbert_basis(W, chi));
}
BENCHMARK(BM_HilbertBasis)->Arg(1)->Arg(2)->Arg(4);

static void BM_FindEmbedding(benchmark::State &state) {
    const WeightSystem a({1, 2, 3});
    for (auto _ : state)
        benchmark::DoNotOptimize(find_embedding(a, state.range(0)));
}
BENCHMARK(BM_FindEmbedding)->Arg(1)->Arg(5);

static void BM_VerifyImmersion(benchmark::State &state) {
    const auto data = find_embedding_data(WeightSystem({1, 2, 3}), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_immersion(data));
}
BENCHMARK(BM_VerifyImmersion);

static void BM_StableLocus(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<std::vector<std::int64_t>> rows(2, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        rows[0][i] = static_cast<std::int64_t>(i % 3) - 1;
        rows[1][i] = static_cast<std::int64_t>(i % 4) + 1;
    }
    const CharacterAction act(IntMatrix(rows, n), {1, 3});
    for (auto _ : state)
        benchmark::DoNotOptimize(stable_locus(act));
}
BENCHMARK(BM_StableLocus)->Arg(4)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
