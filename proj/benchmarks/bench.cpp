#include <benchmark/benchmark.h>

#include "ltseq/bisim.hpp"
#include "ltseq/congruence.hpp"
#include "ltseq/normal_form.hpp"
#include "ltseq/oracle.hpp"

namespace {

ltseq::Lts make(uint64_t seed, uint32_t states, uint32_t actions) {
    ltseq::GenParams p;
    p.seed = seed;
    p.states = states;
    p.alphabet_size = actions;
    p.density = 2.0;
    p.tau_prob = 0.25;
    return ltseq::random_lts(p);
}

void bm_normalize(benchmark::State& state) {
    auto l = make(7, static_cast<uint32_t>(state.range(0)), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(ltseq::normalize(l, true));
}
BENCHMARK(bm_normalize)->Arg(8)->Arg(12)->Arg(16);

void bm_bisim_quotient(benchmark::State& state) {
    auto l = make(11, static_cast<uint32_t>(state.range(0)), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(ltseq::bisim_quotient(l));
}
BENCHMARK(bm_bisim_quotient)->Arg(8)->Arg(16)->Arg(32);

void bm_verdict_table(benchmark::State& state) {
    auto a = make(3, static_cast<uint32_t>(state.range(0)), 4);
    auto b = make(4, static_cast<uint32_t>(state.range(0)), 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(ltseq::verdict_table(a, b));
}
BENCHMARK(bm_verdict_table)->Arg(8)->Arg(12);

void bm_oracle(benchmark::State& state) {
    auto l = make(5, 8, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(ltseq::enumerate_bounded(l, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_oracle)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
