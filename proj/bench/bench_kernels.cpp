// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <map>

#include "majority/colouring.hpp"
#include "majority/generators.hpp"
#include "majority/kernels.hpp"
#include "majority/rng.hpp"

using namespace majority;

namespace {

struct Workload {
    Digraph g;
    std::vector<std::uint32_t> colours;
    std::vector<std::uint8_t> member;
};

const Workload& workload(std::size_t n) {
    static std::map<std::size_t, Workload> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        Workload w{gen_random_out_regular(n, 64, 1), {}, {}};
        Rng rng(2);
        for (std::size_t v = 0; v < n; ++v) {
            w.colours.push_back(static_cast<std::uint32_t>(rng.below(3)));
            w.member.push_back(static_cast<std::uint8_t>(rng.below(3) == 0));
        }
        it = cache.emplace(n, std::move(w)).first;
    }
    return it->second;
}

void BM_SameColourSerial(benchmark::State& state) {
    const Workload& w = workload(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::same_colour_counts_serial(w.g, w.colours));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.g.m()));
}

void BM_SameColourParallel(benchmark::State& state) {
    const Workload& w = workload(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::same_colour_counts(w.g, w.colours));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.g.m()));
}

void BM_MemberOutSerial(benchmark::State& state) {
    const Workload& w = workload(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::member_out_counts_serial(w.g, w.member));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.g.m()));
}

void BM_MemberOutParallel(benchmark::State& state) {
    const Workload& w = workload(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::member_out_counts(w.g, w.member));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.g.m()));
}

void BM_VerifySerial(benchmark::State& state) {
    const Workload& w = workload(static_cast<std::size_t>(state.range(0)));
    const Colouring c(w.colours, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_majority_serial(w.g, c, {3, Fraction(1, 2)}));
}

void BM_VerifyParallel(benchmark::State& state) {
    const Workload& w = workload(static_cast<std::size_t>(state.range(0)));
    const Colouring c(w.colours, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_majority(w.g, c, {3, Fraction(1, 2)}));
}

}  // namespace

BENCHMARK(BM_SameColourSerial)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_SameColourParallel)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_MemberOutSerial)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_MemberOutParallel)->Arg(10'000)->Arg(100'000);
BENCHMARK(BM_VerifySerial)->Arg(100'000);
BENCHMARK(BM_VerifyParallel)->Arg(100'000);

BENCHMARK_MAIN();
