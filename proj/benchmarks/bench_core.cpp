#include <benchmark/benchmark.h>

#include "lowop/criteria.hpp"
#include "lowop/nabla.hpp"
#include "lowop/poly.hpp"
#include "lowop/seq_graph.hpp"
#include "lowop/verify.hpp"

namespace {

using namespace lowop;

BranchingPair bench_pair() { return BranchingPair::make(2, {3, 2, 1, 0}, {3, 2, 0}); }

void BM_KPolyRecursion(benchmark::State& state) {
    const int span = static_cast<int>(state.range(0));
    PolyRing ring(1 + span);
    std::vector<int> A = open_open(1, 1 + span);
    for (auto _ : state) {
        benchmark::DoNotOptimize(k_poly_rec(ring, 1, 1 + span, A));
    }
}
BENCHMARK(BM_KPolyRecursion)->DenseRange(2, 7);

void BM_KPolyDefinition(benchmark::State& state) {
    const int span = static_cast<int>(state.range(0));
    PolyRing ring(1 + span);
    std::vector<int> A = open_open(1, 1 + span);
    for (auto _ : state) {
        benchmark::DoNotOptimize(k_poly_def(ring, 1, 1 + span, A));
    }
}
BENCHMARK(BM_KPolyDefinition)->DenseRange(2, 5);

void BM_Closure(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SeqX x{{1, n - 1, n - 1, {}}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(closure(x, n));
    }
}
BENCHMARK(BM_Closure)->DenseRange(4, 8);

void BM_ClassifyLowering(benchmark::State& state) {
    BranchingPair pair = bench_pair();
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_lowering(pair, 1, 3, {2}));
    }
}
BENCHMARK(BM_ClassifyLowering);

void BM_ModelBuild(benchmark::State& state) {
    BranchingPair pair = bench_pair();
    for (auto _ : state) {
        benchmark::DoNotOptimize(CostandardModel::build(pair));
    }
}
BENCHMARK(BM_ModelBuild);

void BM_ModuleClassify(benchmark::State& state) {
    CostandardModel model = CostandardModel::build(bench_pair());
    ModVector f = model.find_f_mu(model.pair().mu);
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.classify_lowering(1, 3, {2}, f));
    }
}
BENCHMARK(BM_ModuleClassify);

void BM_AgreementSweepTiny(benchmark::State& state) {
    SweepOptions opts;
    opts.primes = {2};
    opts.ranks = {3};
    opts.max_first = 2;
    opts.max_total = 4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_agreement_sweep(opts));
    }
}
BENCHMARK(BM_AgreementSweepTiny);

}  // namespace

BENCHMARK_MAIN();
