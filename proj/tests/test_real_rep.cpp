#include "doctest.h"
#include "oracles.hpp"
#include "qpca/errors.hpp"
#include "qpca/real_rep.hpp"
#include "test_util.hpp"

using namespace qpca;
using qpca::testing::random_qmatrix;
using qpca::testing::random_qvector;

TEST_CASE("block pattern of the 1x1 units") {
  QMatrix a(1, 1);
  a.set_entry(0, 0, Quaternion::i());
  Eigen::MatrixXd expected(4, 4);
  expected << 0, -1, 0, 0,  //
      1, 0, 0, 0,           //
      0, 0, 0, -1,          //
      0, 0, 1, 0;
  CHECK(real_rep(a) == expected);

  QMatrix one(1, 1);
  one.set_entry(0, 0, Quaternion(1.0));
  CHECK(real_rep(one) == Eigen::MatrixXd::Identity(4, 4));
}

TEST_CASE("vector stacking order") {
  QVector w(2);
  w.set_entry(0, Quaternion(1, 2, 3, 4));
  w.set_entry(1, Quaternion(5, 6, 7, 8));
  Eigen::VectorXd expected(8);
  expected << 1, 5, 2, 6, 3, 7, 4, 8;
  CHECK(real_rep(w) == expected);
}

TEST_CASE("representations round-trip exactly") {
  Rng rng(61);
  const QMatrix a = random_qmatrix(3, 4, rng);
  const QMatrix back = qmatrix_from_real_rep(real_rep(a));
  for (int c = 0; c < 4; ++c) {
    CHECK(back.plane(c) == a.plane(c));
  }

  const QVector w = random_qvector(6, rng);
  const QVector wback = qvector_from_real_rep(real_rep(w));
  for (int c = 0; c < 4; ++c) {
    CHECK(wback.plane(c) == w.plane(c));
  }
}

TEST_CASE("malformed representations are rejected") {
  Rng rng(67);
  Eigen::MatrixXd rep = real_rep(random_qmatrix(2, 2, rng));
  rep(0, 2) += 0.5;  // breaks the block symmetry
  CHECK_THROWS_AS(qmatrix_from_real_rep(rep), FormatError);

  CHECK_THROWS_AS(qmatrix_from_real_rep(Eigen::MatrixXd::Zero(3, 4)),
                  FormatError);
  CHECK_THROWS_AS(qvector_from_real_rep(Eigen::VectorXd::Zero(7)), FormatError);
}

TEST_CASE("product homomorphism") {
  Rng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const QMatrix a = random_qmatrix(3, 4, rng);
    const QMatrix b = random_qmatrix(4, 2, rng);
    const Eigen::MatrixXd lhs = real_rep(a * b);
    const Eigen::MatrixXd rhs = real_rep(a) * real_rep(b);
    const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12 * scale);

    const QVector w = random_qvector(4, rng);
    const Eigen::VectorXd vlhs = real_rep(a * w);
    const Eigen::VectorXd vrhs = real_rep(a) * real_rep(w);
    const double vscale = std::max(1.0, vrhs.cwiseAbs().maxCoeff());
    CHECK((vlhs - vrhs).cwiseAbs().maxCoeff() <= 1e-12 * vscale);
  }
}

TEST_CASE("conjugate transpose maps to real transpose") {
  Rng rng(73);
  const QMatrix a = random_qmatrix(3, 5, rng);
  CHECK(real_rep(a.conj_transpose()) == real_rep(a).transpose());
}
