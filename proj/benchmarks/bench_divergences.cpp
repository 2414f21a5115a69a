#include <benchmark/benchmark.h>

#include <random>

#include "chordiv/bregman.hpp"
#include "chordiv/clustering.hpp"
#include "chordiv/jensen.hpp"
#include "chordiv/sweep.hpp"

using namespace chordiv;

namespace {

std::pair<ParamPoint, ParamPoint> pair_for(std::size_t dim) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  std::vector<double> a(dim), b(dim);
  for (std::size_t i = 0; i < dim; ++i) a[i] = u(rng), b[i] = u(rng);
  return {ParamPoint(a), ParamPoint(b)};
}

void BM_Bregman(benchmark::State& st) {
  const auto f = make_builtin("shannon_negentropy", st.range(0));
  const auto [a, b] = pair_for(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(bregman(f, a, b));
}
BENCHMARK(BM_Bregman)->Arg(1)->Arg(16)->Arg(256);

void BM_BregmanChord(benchmark::State& st) {
  const auto f = make_builtin("shannon_negentropy", st.range(0));
  const auto [a, b] = pair_for(st.range(0));
  const ChordParams cp(0.3, 0.8);
  for (auto _ : st) benchmark::DoNotOptimize(bregman_chord(f, a, b, cp));
}
BENCHMARK(BM_BregmanChord)->Arg(1)->Arg(16)->Arg(256);

void BM_JensenChord(benchmark::State& st) {
  const auto f = make_builtin("burg_negentropy", st.range(0));
  const auto [a, b] = pair_for(st.range(0));
  const JensenChordParams jcp(0.2, 0.7, 0.5);
  for (auto _ : st) benchmark::DoNotOptimize(jensen_chord(f, a, b, jcp));
}
BENCHMARK(BM_JensenChord)->Arg(1)->Arg(16)->Arg(256);

void BM_MeanValueWitness(benchmark::State& st) {
  const auto f = make_builtin("log_sum_exp", 8);
  const auto [a, b] = pair_for(8);
  const ChordParams cp(0.2, 0.9);
  for (auto _ : st) benchmark::DoNotOptimize(mean_value_witness(f, a, b, cp));
}
BENCHMARK(BM_MeanValueWitness);

void BM_Sweep(benchmark::State& st) {
  const auto f = make_builtin("shannon_negentropy", 1);
  const auto grid = SweepGrid::uniform(static_cast<int>(st.range(0)));
  const DivergenceSpec spec{"bregman_chord", {}};
  for (auto _ : st) {
    benchmark::DoNotOptimize(sweep(f, ParamPoint{0.2}, ParamPoint{0.8}, grid, spec, 1));
  }
}
BENCHMARK(BM_Sweep)->Arg(10)->Arg(50);

void BM_KmeansChord(benchmark::State& st) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-0.05, 0.05);
  std::vector<ParamPoint> pts;
  for (int i = 0; i < 100; ++i) pts.push_back(ParamPoint{1.0 + (i % 2) + u(rng)});
  const auto f = make_builtin("shannon_negentropy", 1);
  ClusterConfig cfg;
  DivergenceParams p;
  p.alpha = 0.9;
  p.beta = 1.0;
  cfg.divergence = {"bregman_chord", p};
  for (auto _ : st) benchmark::DoNotOptimize(kmeans(pts, f, cfg));
}
BENCHMARK(BM_KmeansChord);

}  // namespace
BENCHMARK_MAIN();
