#include <benchmark/benchmark.h>

#include "singwalk/oracle.hpp"
#include "singwalk/segments.hpp"
#include "singwalk/sequences.hpp"
#include "singwalk/transfer.hpp"

using namespace singwalk;

static void BM_DpCounts(benchmark::State& state) {
    const ModelSpec& m = ModelSpec::get('C');
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CountTable t = count_walks(m, n);
        benchmark::DoNotOptimize(t.total(n));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DpCounts)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_TransferFormal(benchmark::State& state) {
    const ModelSpec& m = ModelSpec::get('C');
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto rows = endpoint_vectors_formal(m, k, 24);
        benchmark::DoNotOptimize(rows.back().front().coeff(23));
    }
}
BENCHMARK(BM_TransferFormal)->DenseRange(4, 16, 4);

static void BM_QHalf(benchmark::State& state) {
    const ModelSpec& m = ModelSpec::get('E');
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        QTruncation q = q_half(m, k);
        benchmark::DoNotOptimize(q.coeff(k, 0));
    }
}
BENCHMARK(BM_QHalf)->DenseRange(8, 32, 8);

static void BM_FMatrixInversion(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const Rational t(1, 3);
    for (auto _ : state) {
        auto f = f_matrix_by_inversion(n, t);
        benchmark::DoNotOptimize(f.at(0, 0));
    }
}
BENCHMARK(BM_FMatrixInversion)->RangeMultiplier(2)->Range(4, 64);

static void BM_FMatrixClosedForm(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const Rational t(1, 3);
    for (auto _ : state) {
        auto f = f_matrix_closed_form(n, t);
        benchmark::DoNotOptimize(f.at(0, 0));
    }
}
BENCHMARK(BM_FMatrixClosedForm)->RangeMultiplier(2)->Range(4, 64);

static void BM_Bernoulli(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto b = bernoulli(n);
        benchmark::DoNotOptimize(b.values.back());
    }
}
BENCHMARK(BM_Bernoulli)->DenseRange(16, 64, 16);

BENCHMARK_MAIN();
