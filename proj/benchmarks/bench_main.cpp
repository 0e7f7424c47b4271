#include <benchmark/benchmark.h>

#include "berge/admissibility.hpp"
#include "berge/berge_lift.hpp"
#include "berge/graph_decomp.hpp"

using namespace berge;

namespace {

void BM_HallMatching(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int k = n - 3;
    long long total = binom(n, k);
    long long pairs = binom2(n);
    int base = static_cast<int>(total / pairs);
    long long extra = total - static_cast<long long>(base) * pairs;
    Multigraph h(n);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) {
            int m = base + (extra > 0 ? 1 : 0);
            if (extra > 0) extra--;
            h.add(x, y, m);
        }
    for (auto _ : state) {
        auto eta = hall_matching(h, n, k, 1);
        benchmark::DoNotOptimize(eta.size());
    }
    state.SetItemsProcessed(state.iterations() * total);
}
BENCHMARK(BM_HallMatching)->Arg(16)->Arg(24)->Arg(38)->Unit(benchmark::kMillisecond);

void BM_ExactCycleDecomposition(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    LengthList M;
    long long left = f_edges(2, n);
    int len = n;
    while (left > 0) {
        if (len > left) len = static_cast<int>(left);
        if (left - len == 1) len--;
        M.values.push_back(len);
        left -= len;
        len = len > 3 ? len - 1 : n;
    }
    SolverConfig cfg;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        auto d = cycle_decomposition(2, n, M, cfg);
        benchmark::DoNotOptimize(d.walks.size());
    }
}
BENCHMARK(BM_ExactCycleDecomposition)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_HamiltonDecomposition38(benchmark::State& state) {
    LengthList M;
    int t = static_cast<int>(f_edges(11, 38) / 38);
    for (int i = 0; i < t; ++i) M.values.push_back(38);
    SolverConfig cfg;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        auto d = cycle_decomposition(11, 38, M, cfg);
        benchmark::DoNotOptimize(d.walks.size());
    }
}
BENCHMARK(BM_HamiltonDecomposition38)->Unit(benchmark::kMillisecond);

void BM_PathCover38(benchmark::State& state) {
    LengthList M;
    long long left = 3LL * binom2(38);
    while (left > 0) {
        int p = left >= 37 ? 37 : static_cast<int>(left);
        M.values.push_back(p);
        left -= p;
    }
    SolverConfig cfg;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        auto d = path_packing(3, 38, M, cfg);
        benchmark::DoNotOptimize(d.walks.size());
    }
}
BENCHMARK(BM_PathCover38)->Unit(benchmark::kMillisecond);

void BM_Case3(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    LengthList cycles, paths;
    long long left = 2LL * n;
    while (left > 0) {
        int len = left >= n ? n : static_cast<int>(left);
        if (left - len == 1) len--;
        cycles.values.push_back(len);
        left -= len;
    }
    for (auto _ : state) {
        auto d = case3_decompose(n, 2, cycles, paths);
        benchmark::DoNotOptimize(d.walks.size());
    }
}
BENCHMARK(BM_Case3)->Arg(12)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_Case2(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    LengthList cycles, paths;
    long long left = binom2(n);
    while (left > 0) {
        int len = left >= n ? n : static_cast<int>(left);
        if (left - len == 1) len--;
        cycles.values.push_back(len);
        left -= len;
    }
    for (auto _ : state) {
        auto d = case2_decompose(n, 1, cycles, paths);
        benchmark::DoNotOptimize(d.walks.size());
    }
}
BENCHMARK(BM_Case2)->Arg(12)->Arg(18)->Unit(benchmark::kMicrosecond);

void BM_BruteForceOracle(benchmark::State& state) {
    Multigraph host = subtract(complete_multigraph(2, 6), near_factor_I(2, 6));
    LengthList M{6, 6, 5, 5, 4, 2, 2};
    for (auto _ : state) {
        bool r = brute_force_packing_exists(host, M, WalkKind::cycle);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_BruteForceOracle)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
