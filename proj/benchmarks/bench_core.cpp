#include <benchmark/benchmark.h>

#include "qpca/qmatrix.hpp"
#include "qpca/qvector.hpp"
#include "qpca/real_rep.hpp"
#include "qpca/rng.hpp"

namespace {

qpca::QMatrix random_matrix(Eigen::Index m, Eigen::Index n, qpca::Rng& rng) {
  qpca::QMatrix a(m, n);
  for (int c = 0; c < 4; ++c) {
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        a.plane(c)(i, j) = rng.uniform(-1.0, 1.0);
      }
    }
  }
  return a;
}

qpca::QVector random_vector(Eigen::Index n, qpca::Rng& rng) {
  qpca::QVector w(n);
  for (int c = 0; c < 4; ++c) {
    for (Eigen::Index i = 0; i < n; ++i) {
      w.plane(c)[i] = rng.uniform(-1.0, 1.0);
    }
  }
  return w;
}

void BM_QuaternionMatVec(benchmark::State& state) {
  qpca::Rng rng(1);
  const auto dim = static_cast<Eigen::Index>(state.range(0));
  const qpca::QMatrix a = random_matrix(dim, dim, rng);
  const qpca::QVector w = random_vector(dim, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * w);
  }
}
BENCHMARK(BM_QuaternionMatVec)->Arg(32)->Arg(128);

void BM_QuaternionMatMul(benchmark::State& state) {
  qpca::Rng rng(2);
  const auto dim = static_cast<Eigen::Index>(state.range(0));
  const qpca::QMatrix a = random_matrix(dim, dim, rng);
  const qpca::QMatrix b = random_matrix(dim, dim, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_QuaternionMatMul)->Arg(32)->Arg(64);

void BM_LpNorm(benchmark::State& state) {
  qpca::Rng rng(3);
  const qpca::QVector w = random_vector(1024, rng);
  const double p = static_cast<double>(state.range(0)) / 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpca::lp_norm(w, p));
  }
}
BENCHMARK(BM_LpNorm)->Arg(1)->Arg(2)->Arg(4)->Arg(6);

void BM_RealRepMatrix(benchmark::State& state) {
  qpca::Rng rng(4);
  const auto dim = static_cast<Eigen::Index>(state.range(0));
  const qpca::QMatrix a = random_matrix(dim, dim, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qpca::real_rep(a));
  }
}
BENCHMARK(BM_RealRepMatrix)->Arg(32)->Arg(128);

}  // namespace
