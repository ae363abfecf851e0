#include <benchmark/benchmark.h>

#include <zemor/collision.hpp>
#include <zemor/euclid_factor.hpp>
#include <zemor/hash.hpp>
#include <zemor/number_theory.hpp>
#include <zemor/preimage.hpp>
#include <zemor/random.hpp>

#include <vector>

using namespace zemor;

static void BM_ZemorHash(benchmark::State& state) {
    Rng rng{1};
    const mpz_class p = random_prime(static_cast<std::size_t>(state.range(0)), rng);
    std::vector<std::uint8_t> msg(4096);
    for (auto& b : msg) b = rng() & 1;
    for (auto _ : state) benchmark::DoNotOptimize(zemor_hash(msg, p));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * msg.size() / 8));
}
BENCHMARK(BM_ZemorHash)->Arg(20)->Arg(80);

static void BM_EvaluateWord(benchmark::State& state) {
    Rng rng{2};
    const mpz_class p = random_prime(40, rng);
    Word w;
    for (int i = 0; i < 1000; ++i) w.append(i % 2 ? Letter::A : Letter::B, 1 + rng() % 100000);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_word(w, p));
}
BENCHMARK(BM_EvaluateWord);

static void BM_Factorize80(benchmark::State& state) {
    Rng rng{3};
    for (auto _ : state) {
        const mpz_class n = random_bits(80, rng) + 1;
        benchmark::DoNotOptimize(factorize(n));
    }
}
BENCHMARK(BM_Factorize80)->Unit(benchmark::kMicrosecond);

static void BM_FactorNonneg(benchmark::State& state) {
    Rng rng{4};
    const mpz_class p = random_prime(40, rng);
    const IntMatrix2 m = identity_lift(p, rng).matrix(p);
    for (auto _ : state) benchmark::DoNotOptimize(factor_nonneg(m));
}
BENCHMARK(BM_FactorNonneg);

static void BM_IdentityWord(benchmark::State& state) {
    Rng rng{5};
    const mpz_class p = random_prime(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(identity_word(p, rng));
}
BENCHMARK(BM_IdentityWord)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

static void BM_DiagonalWord(benchmark::State& state) {
    Rng rng{6};
    const mpz_class p = random_prime(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        const mpz_class a = uniform_range(2, p - 1, rng);
        benchmark::DoNotOptimize(diagonal_word(a, p, rng));
    }
}
BENCHMARK(BM_DiagonalWord)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_PositivePreimage(benchmark::State& state) {
    Rng rng{7};
    const mpz_class p = random_prime(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
        const ModMatrix2 m = random_sl2(p, rng);
        benchmark::DoNotOptimize(positive_preimage(m, rng));
    }
}
BENCHMARK(BM_PositivePreimage)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
