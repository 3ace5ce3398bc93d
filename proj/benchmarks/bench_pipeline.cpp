#include <benchmark/benchmark.h>

#include "hyperfront/diagnostics.hpp"
#include "hyperfront/front.hpp"
#include "hyperfront/holo/expr.hpp"
#include "hyperfront/holo/quadrature.hpp"
#include "hyperfront/legendrian.hpp"
#include "hyperfront/singular.hpp"

using namespace hyperfront;

namespace {

legendrian::LegendrianData shipped() {
  return legendrian::lift(holo::parse_expr("3/2 + z/4"), holo::parse_expr("z/4"));
}

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(holo::parse_expr("exp(z/4)*(3/2 + z^2)/(2 + z)"));
}
BENCHMARK(BM_Parse);

void BM_Primitive(benchmark::State& state) {
  const auto f = holo::parse_expr("exp(2*z)*z");
  for (auto _ : state) benchmark::DoNotOptimize(holo::primitive(f, Complex{0.6, -0.5}));
}
BENCHMARK(BM_Primitive);

void BM_SampleFront(benchmark::State& state) {
  const auto d = shipped();
  double t = 0.0;
  for (auto _ : state) {
    t += 0.001;
    benchmark::DoNotOptimize(front::sample_front(d, std::polar(0.7, t), 0.5));
  }
}
BENCHMARK(BM_SampleFront);

void BM_SingularSet(benchmark::State& state) {
  const auto d = shipped();
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(front::singular_set(d, front::CartesianGrid{0.9, n}, 1));
}
BENCHMARK(BM_SingularSet)->Arg(33)->Arg(65)->Unit(benchmark::kMillisecond);

void BM_DivergenceProfile(benchmark::State& state) {
  const auto d = shipped();
  const diagnostics::MetricSampler lift = [&d](Complex z) {
    return front::metric_forms(legendrian::canonical_forms(d, z)).lift;
  };
  const auto cut = diagnostics::default_cutoffs(12);
  for (auto _ : state) benchmark::DoNotOptimize(diagnostics::divergence_profile(lift, 0.4, cut));
}
BENCHMARK(BM_DivergenceProfile)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
