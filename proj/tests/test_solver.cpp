#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qpca/errors.hpp"
#include "qpca/orthonormalize.hpp"
#include "qpca/real_rep.hpp"
#include "qpca/solver.hpp"
#include "test_util.hpp"

using namespace qpca;
using qpca::testing::close;
using qpca::testing::random_qvector;
using qpca::testing::rel_close;

namespace {

QMatrix real_diag(std::initializer_list<double> values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  QMatrix out(n, n);
  Eigen::Index i = 0;
  for (const double v : values) out.plane(0)(i, i) = v, ++i;
  return out;
}

QVector unit(Eigen::Index n, Eigen::Index axis) {
  QVector w(n);
  w.set_entry(axis, Quaternion(1.0));
  return w;
}

// Tight convergence for eigenspace comparisons.
SolverConfig tight_config(double s, double p, int r, std::uint64_t seed) {
  SolverConfig cfg;
  cfg.s = s;
  cfg.p = p;
  cfg.r = r;
  cfg.tol = 1e-15;
  cfg.max_iter = 5000;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("objective values") {
  const std::vector<QMatrix> identity{QMatrix::identity(2)};
  CHECK(objective(identity, unit(2, 0), 2.0) == doctest::Approx(1.0));

  const std::vector<QMatrix> diag{real_diag({1, 2})};
  CHECK(objective(diag, unit(2, 1), 2.0) == doctest::Approx(4.0));

  QVector both(2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  both.set_entry(0, Quaternion(inv_sqrt2));
  both.set_entry(1, Quaternion(inv_sqrt2));
  CHECK(objective(diag, both, 1.0) ==
        doctest::Approx(3.0 * inv_sqrt2).epsilon(1e-12));

  CHECK_THROWS_AS(objective(diag, unit(3, 0), 2.0), ShapeError);
}

TEST_CASE("gradient vector") {
  const std::vector<QMatrix> identity{QMatrix::identity(2)};
  const QVector v1 = compute_v(identity, unit(2, 0), 2.0);
  CHECK(v1.entry(0) == Quaternion(1.0));
  CHECK(v1.entry(1) == Quaternion::zero());

  QMatrix wide(1, 2);
  wide.set_entry(0, 1, Quaternion(2.0));
  const QVector v2 = compute_v({&wide, 1}, unit(2, 1), 2.0);
  CHECK(close(v2.entry(0).w0, 0.0, 1e-14));
  CHECK(close(v2.entry(1).w0, 4.0, 1e-14));

  QVector twoi(2);
  twoi.set_entry(0, Quaternion(0, 2, 0, 0));
  const QVector v3 = compute_v(identity, twoi, 1.0);
  CHECK(close(v3.entry(0).w1, 1.0, 1e-14));
  CHECK(close(abs(v3.entry(0) - Quaternion::i()), 0.0, 1e-14));
  CHECK(v3.entry(1) == Quaternion::zero());
}

TEST_CASE("closed-form update per p regime") {
  const QVector dummy(2);

  QVector v(2);
  v.set_entry(1, Quaternion(4.0));
  const QVector w2 = update_w(v, dummy, dummy, 2.0);
  CHECK(close(abs(w2.entry(0)), 0.0, 1e-14));
  CHECK(close(w2.entry(1).w0, 1.0, 1e-14));

  QVector v34(2);
  v34.set_entry(0, Quaternion(0, 3, 0, 0));
  v34.set_entry(1, Quaternion(0, 0, 4, 0));
  const QVector w1 = update_w(v34, dummy, dummy, 1.0);
  CHECK(w1.entry(0) == Quaternion::zero());
  CHECK(close(abs(w1.entry(1) - Quaternion::j()), 0.0, 1e-14));

  const QVector winf = update_w(v34, dummy, dummy, kInfinity);
  CHECK(close(abs(winf.entry(0) - Quaternion::i()), 0.0, 1e-14));
  CHECK(close(abs(winf.entry(1) - Quaternion::j()), 0.0, 1e-14));

  CHECK_THROWS_AS(update_w(QVector(2), dummy, dummy, 2.0),
                  DegenerateDirectionError);

  // argmax tie at p = 1 takes the lowest index.
  QVector tie(2);
  tie.set_entry(0, Quaternion(0, 2, 0, 0));
  tie.set_entry(1, Quaternion(0, 0, 2, 0));
  const QVector wtie = update_w(tie, dummy, dummy, 1.0);
  CHECK(close(abs(wtie.entry(0) - Quaternion::i()), 0.0, 1e-14));
  CHECK(wtie.entry(1) == Quaternion::zero());
}

TEST_CASE("updates return unit-Lp vectors") {
  Rng rng(101);
  const double ps[] = {0.5, 1.0, 1.5, 2.0, 3.0};
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.uniform_int(4));
    const QVector v = random_qvector(n, rng);
    const QVector prev = random_unit_lp(n, 2.0, rng);
    const QVector init = random_unit_lp(n, 2.0, rng);
    for (const double p : ps) {
      const QVector w = update_w(v, prev, init, p);
      CHECK(close(lp_norm(w, p), 1.0, 1e-12));
    }
    const QVector winf = update_w(v, prev, init, kInfinity);
    CHECK(close(abs(winf).maxCoeff(), 1.0, 1e-12));
  }
}

TEST_CASE("closed form beats random unit-Lp candidates") {
  Rng rng(107);
  const double ps[] = {1.0, 1.5, 2.0, 3.0, kInfinity};
  const QVector dummy;
  for (int trial = 0; trial < 8; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.uniform_int(3));
    const QVector v = random_qvector(n, rng);
    for (const double p : ps) {
      const QVector w = update_w(v, dummy, dummy, p);
      const double achieved = inner(v, w).w0;
      const double opponent =
          qpca::testing::best_random_inner(v, p, 20000, rng.next_u64());
      CHECK(achieved >= opponent - 1e-9);
    }
  }
}

TEST_CASE("single direction on diag(1,2) finds the dominant axis") {
  const std::vector<QMatrix> diag{real_diag({1, 2})};
  SolverConfig cfg = tight_config(2.0, 2.0, 1, 42);
  Rng rng(cfg.seed);
  const QVector w0 = random_unit_lp(2, cfg.p, rng);
  const auto result = solve_single(diag, cfg, w0, rng);
  CHECK(result.converged);
  // Eigen-oracle: the top eigenvalue of F*F = diag(1,4) is 4 with axis e2.
  const auto oracle = qpca::testing::eigen_oracle(diag, 1);
  CHECK(oracle.eigenvalues[0] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(result.history.back() == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(abs(result.w.entry(0)) < 1e-6);
  CHECK(close(abs(result.w.entry(1)), 1.0, 1e-9));
}

TEST_CASE("isotropic samples leave the objective flat") {
  const std::vector<QMatrix> identity{QMatrix::identity(2)};
  SolverConfig cfg;
  cfg.seed = 7;
  Rng rng(cfg.seed);
  const QVector w0 = random_unit_lp(2, 2.0, rng);
  const auto result = solve_single(identity, cfg, w0, rng);
  CHECK(result.converged);
  for (const double f : result.history) {
    CHECK(f == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("p = 1 concentrates on the strongest column") {
  const std::vector<QMatrix> diag{real_diag({1, 2})};
  SolverConfig cfg = tight_config(2.0, 1.0, 1, 11);
  Rng rng(cfg.seed);
  const auto result =
      solve_single(diag, cfg, random_unit_lp(2, 1.0, rng), rng);
  // Brute force over one-hot unit-L1 candidates: objective ||F e_j||^2.
  double brute_best = 0.0;
  for (Eigen::Index j = 0; j < 2; ++j) {
    brute_best = std::max(brute_best, objective(diag, unit(2, j), 2.0));
  }
  CHECK(brute_best == doctest::Approx(4.0));
  CHECK(result.history.back() == doctest::Approx(brute_best).epsilon(1e-12));
  CHECK(abs(result.w.entry(0)) == doctest::Approx(0.0));
  CHECK(abs(result.w.entry(1)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("deflation") {
  const QMatrix diag = real_diag({1, 2});
  const std::vector<QMatrix> samples{diag};

  const auto unchanged = deflate(samples, QMatrix(2, 0));
  CHECK((unchanged[0].plane(0) - diag.plane(0)).cwiseAbs().maxCoeff() == 0.0);

  QMatrix w(2, 1);
  w.set_entry(1, 0, Quaternion(1.0));
  const auto deflated = deflate(samples, w);
  CHECK(deflated[0].entry(0, 0).w0 == doctest::Approx(1.0));
  CHECK(std::abs(deflated[0].entry(1, 1).w0) < 1e-14);

  // A full unitary basis wipes the samples out.
  Rng rng(113);
  QMatrix full(2, 2);
  full.set_col(0, random_qvector(2, rng));
  full.set_col(1, random_qvector(2, rng));
  full = orthonormalize(orthonormalize(full, 0), 1);
  const auto wiped = deflate(samples, full);
  CHECK(frobenius_norm(wiped[0]) < 1e-12 * frobenius_norm(diag));
}

TEST_CASE("full solve on diag(1,2) orders directions by energy") {
  const std::vector<QMatrix> samples{real_diag({1, 2})};
  const auto result = solve(samples, tight_config(2.0, 2.0, 2, 3));
  REQUIRE(result.rank() == 2);
  CHECK(result.weights[0] == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(result.weights[1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(close(abs(result.W.col(0).entry(1)), 1.0, 1e-6));
  CHECK(close(abs(result.W.col(1).entry(0)), 1.0, 1e-6));
}

TEST_CASE("r = n: orthonormal basis and the trace identity") {
  Rng rng(127);
  std::vector<QMatrix> samples;
  for (int i = 0; i < 4; ++i) {
    samples.push_back(qpca::testing::random_qmatrix(5, 4, rng));
  }
  const auto result = solve(samples, tight_config(2.0, 2.0, 4, 17));
  REQUIRE(result.rank() == 4);

  const QMatrix gram = result.W.conj_transpose() * result.W;
  double gram_err = 0.0;
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      const Quaternion expected = i == j ? Quaternion(1.0) : Quaternion();
      gram_err = std::max(gram_err, abs(gram.entry(i, j) - expected));
    }
  }
  CHECK(gram_err < 1e-10);

  // Independent Frobenius route: sum of weights equals sum ||F_i||_F^2.
  double frob_sum = 0.0;
  for (const auto& f : samples) frob_sum += frobenius_norm(f) * frobenius_norm(f);
  CHECK(rel_close(result.weights.sum(), frob_sum, 1e-9));

  // Nothing is left after deflating all n directions.
  const auto residuals = deflate(samples, result.W);
  for (size_t i = 0; i < samples.size(); ++i) {
    CHECK(frobenius_norm(residuals[i]) < 1e-8 * frobenius_norm(samples[i]));
  }
}

TEST_CASE("rank-1 data leaves nothing for a second direction") {
  Rng rng(131);
  // u (real) times v* (pure v) keeps the sample pure and rank one.
  const Eigen::Index m = 4, n = 3;
  QMatrix sample(m, n);
  Eigen::VectorXd u(m);
  for (Eigen::Index i = 0; i < m; ++i) u[i] = rng.uniform(0.5, 2.0);
  const QVector v = random_qvector(n, rng);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      sample.set_entry(i, j, Quaternion(u[i]) * v.entry(j).conj());
    }
  }
  const std::vector<QMatrix> samples{sample};
  const auto result = solve(samples, tight_config(2.0, 2.0, 2, 19));
  const bool degenerate_flagged = result.truncated && result.rank() == 1;
  const bool tiny_weight = result.rank() == 2 && result.weights[1] < 1e-10;
  CHECK((degenerate_flagged || tiny_weight));
}

TEST_CASE("s = p = 2 subspace matches the eigen-oracle") {
  Rng rng(137);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<QMatrix> samples;
    for (int i = 0; i < 6; ++i) {
      samples.push_back(qpca::testing::random_qmatrix(5, 4, rng));
    }
    const int r = 2;
    const auto result =
        solve(samples, tight_config(2.0, 2.0, r, 1000 + trial));
    REQUIRE(result.rank() == r);

    const auto oracle = qpca::testing::eigen_oracle(samples, r);
    const Eigen::MatrixXd w_rep = real_rep(result.W);
    CHECK(qpca::testing::largest_principal_angle(w_rep, oracle.top_subspace) <
          1e-6);
    for (int t = 0; t < r; ++t) {
      CHECK(rel_close(result.weights[t], oracle.eigenvalues[t], 1e-6));
    }
  }
}

TEST_CASE("histories ascend for every (s,p) regime") {
  Rng rng(139);
  const double ss[] = {1.0, 1.5, 2.0, 3.0};
  const double ps[] = {0.5, 1.0, 1.5, 2.0, 3.0, kInfinity};
  for (int trial = 0; trial < 2; ++trial) {
    std::vector<QMatrix> samples;
    for (int i = 0; i < 3; ++i) {
      samples.push_back(qpca::testing::random_qmatrix(4, 3, rng));
    }
    for (const double s : ss) {
      for (const double p : ps) {
        SolverConfig cfg;
        cfg.s = s;
        cfg.p = p;
        cfg.r = 2;
        cfg.seed = 211 + trial;
        const auto result = solve(samples, cfg);
        for (const auto& history : result.histories) {
          for (size_t k = 1; k < history.size(); ++k) {
            CHECK(history[k] >=
                  history[k - 1] - 1e-10 * std::abs(history[k - 1]));
          }
        }
      }
    }
  }
}

TEST_CASE("phase invariance of the objective") {
  Rng rng(149);
  std::vector<QMatrix> samples{qpca::testing::random_qmatrix(4, 3, rng),
                               qpca::testing::random_qmatrix(4, 3, rng)};
  const QVector w = random_unit_lp(3, 2.0, rng);
  for (const double s : {1.0, 1.5, 2.0}) {
    const double base = objective(samples, w, s);
    for (int trial = 0; trial < 10; ++trial) {
      const Quaternion q = sign(qpca::testing::random_quaternion(rng));
      CHECK(rel_close(objective(samples, w.right_scaled(q), s), base, 1e-12));
    }
  }
}

TEST_CASE("identical inputs give bitwise identical results") {
  Rng rng(151);
  std::vector<QMatrix> samples;
  for (int i = 0; i < 3; ++i) {
    samples.push_back(qpca::testing::random_qmatrix(4, 3, rng));
  }
  SolverConfig cfg;
  cfg.s = 1.5;
  cfg.p = 1.5;
  cfg.r = 2;
  cfg.seed = 77;
  const auto a = solve(samples, cfg);
  const auto b = solve(samples, cfg);
  REQUIRE(a.rank() == b.rank());
  for (int c = 0; c < 4; ++c) {
    CHECK(a.W.plane(c) == b.W.plane(c));
  }
  CHECK(a.weights == b.weights);
  CHECK(a.histories == b.histories);
}

TEST_CASE("configuration validation") {
  SolverConfig cfg;
  cfg.s = 0.5;
  CHECK_THROWS_AS(cfg.validate(), ParamError);
  cfg = {};
  cfg.p = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ParamError);
  cfg = {};
  cfg.p = -2.0;
  CHECK_THROWS_AS(cfg.validate(), ParamError);
  cfg = {};
  cfg.r = 0;
  CHECK_THROWS_AS(cfg.validate(), ParamError);
  cfg = {};
  cfg.r = 5;
  CHECK_THROWS_AS(cfg.validate(4), ParamError);
  cfg = {};
  cfg.tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ParamError);
  cfg = {};
  cfg.p = kInfinity;
  CHECK_NOTHROW(cfg.validate(8));
}
