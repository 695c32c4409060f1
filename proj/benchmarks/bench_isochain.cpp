#include <benchmark/benchmark.h>

#include <cstdint>

#include "isochain/isochain.hpp"

namespace {

using namespace isochain;

Matrix random_matrix(std::uint64_t seed, Eigen::Index n) {
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto k = static_cast<std::uint64_t>(i * n + j);
      m(i, j) = Complex(uniform_symmetric(seed, k, 1.0), uniform_symmetric(seed + 1, k, 1.0));
    }
  }
  return m;
}

void BM_Spectrum(benchmark::State& state) {
  const Matrix h = random_matrix(12345 + static_cast<std::uint64_t>(state.range(0)),
                                 state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum(h));
  }
}
BENCHMARK(BM_Spectrum)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Eigensystem(benchmark::State& state) {
  const Matrix h = random_matrix(12345 + static_cast<std::uint64_t>(state.range(0)),
                                 state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig(h));
  }
}
BENCHMARK(BM_Eigensystem)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_BuildMetrics(benchmark::State& state) {
  HnOpen spec;
  spec.sites = static_cast<int>(state.range(0));
  const BiorthogonalSystem b = analytic_biorthogonal(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_metrics(b, "0"));
  }
}
BENCHMARK(BM_BuildMetrics)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Matpow(benchmark::State& state) {
  HnOpen spec;
  spec.sites = 32;
  const MetricPair m = build_metrics(analytic_biorthogonal(spec), "0");
  for (auto _ : state) {
    benchmark::DoNotOptimize(matpow(m.s_phi, 7));
  }
}
BENCHMARK(BM_Matpow);

void BM_GrowChainDepth3(benchmark::State& state) {
  const HnOpen spec;
  const Matrix h = build_model(spec);
  const BiorthogonalSystem b = analytic_biorthogonal(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(grow_chain(h, b, 3));
  }
}
BENCHMARK(BM_GrowChainDepth3);

void BM_FullSuite(benchmark::State& state) {
  const HnOpen spec;
  const ChainTree tree = grow_chain(build_model(spec), analytic_biorthogonal(spec), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_suite(tree));
  }
}
BENCHMARK(BM_FullSuite);

}  // namespace

BENCHMARK_MAIN();
