#include <benchmark/benchmark.h>

#include <vector>

#include "qpca/solver.hpp"

namespace {

std::vector<qpca::QMatrix> random_samples(int count, Eigen::Index m,
                                          Eigen::Index n, qpca::Rng& rng) {
  std::vector<qpca::QMatrix> samples;
  for (int i = 0; i < count; ++i) {
    qpca::QMatrix a(m, n);
    for (int c = 0; c < 4; ++c) {
      for (Eigen::Index y = 0; y < m; ++y) {
        for (Eigen::Index x = 0; x < n; ++x) {
          a.plane(c)(y, x) = rng.uniform(-1.0, 1.0);
        }
      }
    }
    samples.push_back(std::move(a));
  }
  return samples;
}

void BM_GradientStep(benchmark::State& state) {
  qpca::Rng rng(11);
  const auto samples = random_samples(20, 44, 33, rng);
  const qpca::QVector w = qpca::random_unit_lp(33, 2.0, rng);
  const double s = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpca::compute_v(samples, w, s));
  }
}
BENCHMARK(BM_GradientStep)->Arg(1)->Arg(2);

void BM_SolveR5(benchmark::State& state) {
  qpca::Rng rng(13);
  const auto samples = random_samples(20, 44, 33, rng);
  qpca::SolverConfig cfg;
  cfg.s = 2.0;
  cfg.p = static_cast<double>(state.range(0));
  cfg.r = 5;
  cfg.seed = 99;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpca::solve(samples, cfg));
  }
}
BENCHMARK(BM_SolveR5)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
