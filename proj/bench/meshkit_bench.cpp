// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "meshkit/matrix.hpp"
#include "meshkit/rep_engine.hpp"
#include "meshkit/translation_quiver.hpp"
#include "meshkit/wellbehaved.hpp"

using namespace meshkit;

namespace {

Matrix random_matrix(const GroundField& f, std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<long> dist(-3, 3);
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.from(dist(gen));
  return m;
}

void BM_RowReduce(benchmark::State& state) {
  const Matrix m = random_matrix(GroundField::prime(101), state.range(0), state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(row_reduce(m));
}

void BM_RowReduceSerial(benchmark::State& state) {
  const Matrix m = random_matrix(GroundField::prime(101), state.range(0), state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(row_reduce_serial(m));
}

void BM_RowReduceRational(benchmark::State& state) {
  const Matrix m = random_matrix(GroundField::rationals(), state.range(0), state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(row_reduce(m));
}

void BM_RowReduceRationalSerial(benchmark::State& state) {
  const Matrix m = random_matrix(GroundField::rationals(), state.range(0), state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(row_reduce_serial(m));
}

WellBehavedFunctor a4_functor() {
  const auto alg = make_algebra(GroundField::rationals(), {"1", "2", "3", "4"},
                                {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 3}});
  auto comp = std::make_shared<const ARComponent>(knit(alg));
  auto tc = std::make_shared<const TruncatedCover>(identity_cover(comp->quiver, comp->quiver.name(0)));
  return build_well_behaved(tc, comp);
}

void BM_VerifyAll(benchmark::State& state) {
  const auto F = a4_functor();
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(F, 2));
}

void BM_VerifyAllSerial(benchmark::State& state) {
  const auto F = a4_functor();
  for (auto _ : state) benchmark::DoNotOptimize(verify_all_serial(F, 2));
}

}  // namespace

BENCHMARK(BM_RowReduce)->Arg(64)->Arg(128);
BENCHMARK(BM_RowReduceSerial)->Arg(64)->Arg(128);
BENCHMARK(BM_RowReduceRational)->Arg(32)->Arg(64);
BENCHMARK(BM_RowReduceRationalSerial)->Arg(32)->Arg(64);
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyAllSerial)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
