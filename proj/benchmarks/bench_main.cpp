#include <benchmark/benchmark.h>

#include "reinhardt/composition.hpp"
#include "reinhardt/construct.hpp"
#include "reinhardt/enumerate.hpp"
#include "reinhardt/geometry.hpp"
#include "reinhardt/int_polynomial.hpp"

namespace {

void BM_CyclotomicUncached(benchmark::State& state) {
  // cyclotomic() memoizes, so measure via the division path it is built on
  const int m = static_cast<int>(state.range(0));
  const reinhardt::IntPolynomial& phi = reinhardt::cyclotomic(m);
  reinhardt::IntPolynomial num =
      reinhardt::IntPolynomial::monomial(m) - reinhardt::IntPolynomial({1});
  for (auto _ : state) {
    auto dr = reinhardt::poly_divrem(num, phi);
    benchmark::DoNotOptimize(dr.remainder);
  }
}
BENCHMARK(BM_CyclotomicUncached)->Arg(90)->Arg(210);

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  reinhardt::EnumerationOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    auto result = reinhardt::enumerate_reinhardt(n, opts);
    benchmark::DoNotOptimize(result.counts.total);
  }
}
BENCHMARK(BM_Enumerate)->Arg(30)->Arg(42)->Arg(45)->Unit(benchmark::kMillisecond);

void BM_EnumerateThreaded(benchmark::State& state) {
  reinhardt::EnumerationOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto result = reinhardt::enumerate_reinhardt(45, opts);
    benchmark::DoNotOptimize(result.counts.total);
  }
}
BENCHMARK(BM_EnumerateThreaded)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ConstructSporadic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  reinhardt::SporadicConstructionOptions opts;
  opts.threads = 1;
  for (auto _ : state) {
    auto survey = reinhardt::construct_sporadic(n, opts);
    benchmark::DoNotOptimize(survey.sporadic.size());
  }
}
BENCHMARK(BM_ConstructSporadic)->Arg(30)->Arg(45)->Arg(63)->Unit(benchmark::kMillisecond);

void BM_Realize(benchmark::State& state) {
  reinhardt::Composition c(std::vector<int>(105, 1));
  for (auto _ : state) {
    auto rz = reinhardt::realize(c);
    benchmark::DoNotOptimize(rz.closure_residual);
  }
}
BENCHMARK(BM_Realize);

}  // namespace

BENCHMARK_MAIN();
