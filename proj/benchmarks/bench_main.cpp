#include <benchmark/benchmark.h>

#include "wms/bfree.hpp"
#include "wms/configuration.hpp"
#include "wms/dynamics.hpp"
#include "wms/exact.hpp"

using namespace wms;

namespace
{

EuclideanScheme fibonacci()
{
    return EuclideanScheme::build({parse_quadratic("1", 5), parse_quadratic("1", 5)},
                                  {parse_quadratic("1/2+1/2*sqrt(5)", 5), parse_quadratic("1/2-1/2*sqrt(5)", 5)});
}

void BM_floor(benchmark::State& state)
{
    const auto x = parse_quadratic("-31415/271+92653/589*sqrt(7)", 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(floor(x));
}
BENCHMARK(BM_floor);

void BM_sign(benchmark::State& state)
{
    const auto x = parse_quadratic("99-70*sqrt(2)", 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(sign(x));
}
BENCHMARK(BM_sign);

void BM_enumerate_fibonacci(benchmark::State& state)
{
    const auto f = fibonacci();
    const auto w = IntervalWindow::single(parse_quadratic("-1", 5), parse_quadratic("-1/2+1/2*sqrt(5)", 5));
    const auto r = QuadraticNumber(Rational(state.range(0)), 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate(f, f.origin(), w, RealRegion{-r, r}).size());
    state.SetItemsProcessed(state.iterations() * state.range(0) * 2);
}
BENCHMARK(BM_enumerate_fibonacci)->Arg(100)->Arg(1000)->Arg(10000);

void BM_sieve_bfree(benchmark::State& state)
{
    const auto b = BFreeBasis::squarefree(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(sieve(b, IntegerRegion{0, state.range(0)}).size());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_sieve_bfree)->Arg(1000)->Arg(100000);

void BM_enumerate_residue(benchmark::State& state)
{
    const auto b = BFreeBasis::from_moduli({4, 9, 25});
    const auto w = bfree_window(b);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate(b.scheme(), b.scheme().origin(), w, {0, state.range(0)}).size());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_enumerate_residue)->Arg(100000);

} // namespace
BENCHMARK_MAIN();
