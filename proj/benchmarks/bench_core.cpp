#include "diagonalis/family.hpp"
#include "diagonalis/geometry.hpp"
#include "diagonalis/identities.hpp"
#include "diagonalis/recurrence.hpp"
#include "diagonalis/sequences.hpp"
#include "diagonalis/seriesbox.hpp"

#include <benchmark/benchmark.h>

using namespace diagonalis;

namespace {

void BM_ExpandAG3(benchmark::State& state) {
  const auto p = named_instance("AG3").denominator();
  const auto N = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_reciprocal(p, N));
  state.counters["entries"] = static_cast<double>(detail::multiset_count(3, N));
}
BENCHMARK(BM_ExpandAG3)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_ExpandKZD(benchmark::State& state) {
  const auto p = named_instance("KZ-D").denominator();
  const auto N = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_reciprocal(p, N));
}
BENCHMARK(BM_ExpandKZD)->Arg(8)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

// Full storage against symmetric storage on the same box.
void BM_ExpandKZDFull(benchmark::State& state) {
  const auto p = named_instance("KZ-D").denominator();
  BoxOptions o;
  o.symmetry = SymmetryMode::off;
  for (auto _ : state) benchmark::DoNotOptimize(expand_reciprocal(p, 12, o));
}
BENCHMARK(BM_ExpandKZDFull)->Unit(benchmark::kMillisecond);

void BM_ExpandWorkers(benchmark::State& state) {
  const auto p = named_instance("Kauers").denominator();
  BoxOptions o;
  o.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_reciprocal(p, 24, o));
}
BENCHMARK(BM_ExpandWorkers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ExpandLambda(benchmark::State& state) {
  const auto p = straub_lambda().denominator();
  for (auto _ : state) benchmark::DoNotOptimize(expand_reciprocal(p, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_ExpandLambda)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_GuessFranel(benchmark::State& state) {
  const auto seq = oracle_sequence("franel", 30);
  for (auto _ : state) benchmark::DoNotOptimize(recurrence_guess(seq, 2, 3));
}
BENCHMARK(BM_GuessFranel)->Unit(benchmark::kMillisecond);

void BM_GuessKauers(benchmark::State& state) {
  const auto seq = extract_diagonal(expand_reciprocal(named_instance("Kauers").denominator(), 40));
  for (auto _ : state) benchmark::DoNotOptimize(recurrence_guess(seq, 3, 6));
}
BENCHMARK(BM_GuessKauers)->Unit(benchmark::kMillisecond);

void BM_Identity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_named_identity("ramanujan-cubic", 25));
}
BENCHMARK(BM_Identity)->Unit(benchmark::kMillisecond);

void BM_ThetaPipeline(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_named_identity("theta-modular", 12));
}
BENCHMARK(BM_ThetaPipeline)->Unit(benchmark::kMillisecond);

void BM_CriticalPoints(benchmark::State& state) {
  const auto f = make_family(3, {1, -1, make_rational(1, 2), 2});
  for (auto _ : state) benchmark::DoNotOptimize(critical_points_diag(f));
}
BENCHMARK(BM_CriticalPoints)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
