#include <benchmark/benchmark.h>

#include "padichg/charsum.hpp"
#include "padichg/curve.hpp"
#include "padichg/gfunc.hpp"

namespace {

using namespace padichg;

const std::vector<Rational> kTop{0, Rational(1, 2), 0, Rational(1, 2)};
const std::vector<Rational> kBottom{Rational(1, 4), Rational(3, 4), Rational(1, 4), Rational(3, 4)};

void BM_EvaluateG4(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  const unsigned r = static_cast<unsigned>(state.range(1));
  const FqField F = FqField::build(p, r);
  const GEvaluator eval(PadicCtx(F, choose_precision(p, default_trace_bound(F.q()))));
  const GParams params{kTop, kBottom, F.from_int(4)};
  for (auto _ : state) benchmark::DoNotOptimize(eval.evaluate(params));
  state.SetLabel("q=" + std::to_string(F.q()));
}
BENCHMARK(BM_EvaluateG4)->Args({5, 3})->Args({13, 2})->Args({11, 3})->Unit(benchmark::kMillisecond);

void BM_EvaluateG6(benchmark::State& state) {
  const FqField F = FqField::build(11, 3);
  const GEvaluator eval(PadicCtx(F, 3));
  const GParams params{{0, Rational(1, 2), 0, Rational(1, 2), Rational(1, 4), Rational(3, 4)},
                       {Rational(1, 12), Rational(1, 4), Rational(5, 12), Rational(7, 12), Rational(3, 4),
                        Rational(11, 12)},
                       F.from_rational(Rational(1, 4))};
  for (auto _ : state) benchmark::DoNotOptimize(eval.evaluate(params));
}
BENCHMARK(BM_EvaluateG6)->Unit(benchmark::kMillisecond);

void BM_ContextConstruction(benchmark::State& state) {
  const FqField F = FqField::build(11, 3);
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    const PadicCtx ctx(F, n);
    const TeichmullerTable omega(ctx);
    benchmark::DoNotOptimize(omega.omega(F.generator()));
  }
}
BENCHMARK(BM_ContextConstruction)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CountPoints(benchmark::State& state) {
  const FqField F = FqField::build(static_cast<u64>(state.range(0)), static_cast<unsigned>(state.range(1)));
  const CurveSpec curve = CD{F.from_int(3), F.from_int(5)};
  for (auto _ : state) benchmark::DoNotOptimize(count_points(curve, F));
  state.SetLabel("q=" + std::to_string(F.q()));
}
BENCHMARK(BM_CountPoints)->Args({11, 3})->Args({101, 2})->Args({7, 6});

void BM_FieldBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(FqField::build(11, 3));
}
BENCHMARK(BM_FieldBuild)->Unit(benchmark::kMicrosecond);

void BM_GaussSum(benchmark::State& state) {
  const FqField F = FqField::build(7, 2);
  const charsum::CharTable table(F);
  for (auto _ : state) benchmark::DoNotOptimize(charsum::gauss_sum(5, table));
}
BENCHMARK(BM_GaussSum);

}  // namespace

BENCHMARK_MAIN();
