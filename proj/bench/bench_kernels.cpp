// Serial reference kernels versus their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "tensorbound/bounds.hpp"
#include "tensorbound/kernels.hpp"
#include "tensorbound/operators.hpp"
#include "tensorbound/sweep.hpp"

namespace {

using namespace tensorbound;

OperatorMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  OperatorMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Complex(rng.normal(), rng.normal());
  return a;
}

void BM_MatmulSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const OperatorMatrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  OperatorMatrix out(n);
  for (auto _ : state) {
    kernels::serial::matmul(a.data(), b.data(), out.data(), n);
    benchmark::ClobberMemory();
  }
}

void BM_MatmulParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const OperatorMatrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  OperatorMatrix out(n);
  for (auto _ : state) {
    kernels::matmul(a.data(), b.data(), out.data(), n);
    benchmark::ClobberMemory();
  }
}

void BM_KronSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const OperatorMatrix a = random_matrix(n, 3), b = random_matrix(n, 4);
  OperatorMatrix out(n * n);
  for (auto _ : state) {
    kernels::serial::kron(a.data(), n, b.data(), n, out.data());
    benchmark::ClobberMemory();
  }
}

void BM_KronParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const OperatorMatrix a = random_matrix(n, 3), b = random_matrix(n, 4);
  OperatorMatrix out(n * n);
  for (auto _ : state) {
    kernels::kron(a.data(), n, b.data(), n, out.data());
    benchmark::ClobberMemory();
  }
}

TensorSumInstance clifford_instance(std::size_t m) {
  auto g = clifford_generators(m);
  return TensorSumInstance(g, g);
}

void BM_PhiTableSerial(benchmark::State& state) {
  const TensorSumInstance inst = clifford_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(phi_table_serial(inst));
}

void BM_PhiTableParallel(benchmark::State& state) {
  const TensorSumInstance inst = clifford_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(phi_table(inst));
}

SweepConfig sweep_config() {
  SweepConfig c;
  c.trials = 100;
  return c;
}

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(sweep_config()));
}

void BM_SweepParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(sweep_config()));
}

}  // namespace

BENCHMARK(BM_MatmulSerial)->Arg(16)->Arg(64)->Arg(128);
BENCHMARK(BM_MatmulParallel)->Arg(16)->Arg(64)->Arg(128);
BENCHMARK(BM_KronSerial)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_KronParallel)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_PhiTableSerial)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(BM_PhiTableParallel)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
