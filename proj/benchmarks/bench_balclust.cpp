#include <benchmark/benchmark.h>

#include <random>

#include "balclust/binb.hpp"
#include "balclust/cccd.hpp"
#include "balclust/gen.hpp"
#include "balclust/kernel.hpp"
#include "balclust/oracle.hpp"
#include "balclust/partition.hpp"

using namespace balclust;

namespace {

std::vector<int> sizes_for(int n, int cap, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> out;
    for (int left = n; left > 0;) {
        const int s = std::uniform_int_distribution<int>(1, std::min(left, cap))(rng);
        out.push_back(s);
        left -= s;
    }
    return out;
}

struct KernelCase {
    std::vector<int> sizes;
    int k, eta;
};

// Inputs on which the kernels reduce rather than decide outright.
const std::vector<KernelCase> kKernelCases{
    {{1, 20, 100}, 1, 98},
    {{1, 2, 3, 200, 400}, 2, 398},
    {{1, 1, 2, 50, 300, 600}, 2, 598},
    {{1, 2, 60, 300, 900}, 3, 898},
};

void run_kernel(benchmark::State& state, const Instance& inst) {
    long long n_out = 0;
    for (auto _ : state) {
        KernelResult r = kernelize(inst);
        n_out = r.outcome == Outcome::Reduced ? r.instance.graph.n() : -1;
        benchmark::DoNotOptimize(r);
    }
    state.counters["n_in"] = inst.graph.n();
    state.counters["n_out"] = static_cast<double>(n_out);
}

// Example-1 family: sqrt(k) singletons plus cliques of size sqrt(k).
void BM_KernelBcc(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    run_kernel(state, gen_example1(r * r, r + static_cast<int>(state.range(1)) * r));
}
BENCHMARK(BM_KernelBcc)->Args({4, 100})->Args({4, 1000})->Args({8, 500});

void BM_KernelBcd(benchmark::State& state) {
    const KernelCase& c = kKernelCases[state.range(0)];
    run_kernel(state, Instance{gen_cluster(c.sizes), c.k, c.eta, Variant::BCD});
}
BENCHMARK(BM_KernelBcd)->DenseRange(0, 3);

void BM_KernelBce(benchmark::State& state) {
    const KernelCase& c = kKernelCases[state.range(0)];
    run_kernel(state, Instance{gen_cluster(c.sizes), c.k, c.eta, Variant::BCE});
}
BENCHMARK(BM_KernelBce)->DenseRange(0, 3);

void BM_AlgoBcc(benchmark::State& state) {
    const Instance inst{gen_cluster(sizes_for(150, 30, 6)), static_cast<int>(state.range(0)), 1, Variant::BCC};
    for (auto _ : state) benchmark::DoNotOptimize(algo_bcc(inst));
}
BENCHMARK(BM_AlgoBcc)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_FastAlgoBcc(benchmark::State& state) {
    const Instance inst{gen_cluster(sizes_for(150, 30, 6)), static_cast<int>(state.range(0)), 1, Variant::BCC};
    for (auto _ : state) benchmark::DoNotOptimize(fast_algo_bcc(inst));
}
BENCHMARK(BM_FastAlgoBcc)->Arg(2)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FastAlgoBce(benchmark::State& state) {
    const Instance inst{gen_perturbed_cluster(sizes_for(150, 30, 7), 2, 8), static_cast<int>(state.range(0)), 1,
                        Variant::BCE};
    for (auto _ : state) benchmark::DoNotOptimize(fast_algo_bce(inst));
}
BENCHMARK(BM_FastAlgoBce)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SolveBcd(benchmark::State& state) {
    const Instance inst{gen_perturbed_cluster(sizes_for(30, 8, 9), 4, 10), static_cast<int>(state.range(0)), 2,
                        Variant::BCD};
    for (auto _ : state) benchmark::DoNotOptimize(solve_bcd(inst));
}
BENCHMARK(BM_SolveBcd)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_BinBTable(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    std::mt19937_64 rng(11);
    BinBInstance inst;
    inst.balls.assign(s, 1);
    inst.bins.assign(4, s);
    inst.budget = 30;
    inst.cost.assign(s, std::vector<long long>(4));
    for (auto& row : inst.cost)
        for (auto& c : row) c = std::uniform_int_distribution<int>(0, 6)(rng);
    for (auto _ : state) benchmark::DoNotOptimize(solve_binb(inst));
}
BENCHMARK(BM_BinBTable)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_OracleBce(benchmark::State& state) {
    const Instance inst{gen_random(static_cast<int>(state.range(0)), 0.5, 12), static_cast<int>(state.range(1)), 1,
                        Variant::BCE};
    for (auto _ : state) benchmark::DoNotOptimize(oracle_solve(inst));
}
BENCHMARK(BM_OracleBce)->Args({8, 4})->Args({9, 5})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
