#include "doctest.h"
#include "oracles.hpp"
#include "qpca/errors.hpp"
#include "qpca/quaternion.hpp"
#include "test_util.hpp"

using namespace qpca;
using qpca::testing::close;
using qpca::testing::random_quaternion;

TEST_CASE("Hamilton product follows the defining relations") {
  const Quaternion i = Quaternion::i();
  const Quaternion j = Quaternion::j();
  const Quaternion k = Quaternion::k();

  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(j * k == i);
  CHECK(k * j == -i);
  CHECK(k * i == j);
  CHECK(i * k == -j);
  CHECK(i * i == Quaternion(-1.0));
  CHECK(j * j == Quaternion(-1.0));
  CHECK(k * k == Quaternion(-1.0));
  CHECK(i * j * k == Quaternion(-1.0));

  // (1+i)(1-i) = 2
  CHECK(Quaternion(1, 1, 0, 0) * Quaternion(1, -1, 0, 0) == Quaternion(2.0));
}

TEST_CASE("product is associative and bilinear") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Quaternion a = random_quaternion(rng);
    const Quaternion b = random_quaternion(rng);
    const Quaternion c = random_quaternion(rng);
    const Quaternion lhs = (a * b) * c;
    const Quaternion rhs = a * (b * c);
    for (int comp = 0; comp < 4; ++comp) {
      CHECK(close(lhs.coeff(comp), rhs.coeff(comp), 1e-12));
    }
    const Quaternion dist = a * (b + c);
    const Quaternion dist2 = a * b + a * c;
    for (int comp = 0; comp < 4; ++comp) {
      CHECK(close(dist.coeff(comp), dist2.coeff(comp), 1e-12));
    }
  }
}

TEST_CASE("2-absolute value is multiplicative") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Quaternion a = random_quaternion(rng);
    const Quaternion b = random_quaternion(rng);
    CHECK(qpca::testing::rel_close(abs(a * b), abs(a) * abs(b), 1e-12));
  }
}

TEST_CASE("s-absolute value") {
  CHECK(abs_s(Quaternion(1, 1, 1, 1), 2.0) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(abs_s(Quaternion(0, 1, 1, 1), 1.0) == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(abs_s(Quaternion(0, 3, 4, 0), 2.0) == doctest::Approx(5.0).epsilon(1e-13));
  CHECK(abs_s(Quaternion(0, 3, 4, 0), 2.0) == abs(Quaternion(0, 3, 4, 0)));

  CHECK_THROWS_AS(abs_s(Quaternion(1.0), 0.0), ParamError);
  CHECK_THROWS_AS(abs_s(Quaternion(1.0), -1.0), ParamError);
}

TEST_CASE("sign") {
  CHECK(sign(Quaternion::zero()) == Quaternion::zero());

  const Quaternion s = sign(Quaternion(0, 3, 4, 0));
  CHECK(s.w0 == 0.0);
  CHECK(s.w1 == doctest::Approx(0.6).epsilon(1e-13));
  CHECK(s.w2 == doctest::Approx(0.8).epsilon(1e-13));
  CHECK(s.w3 == 0.0);

  CHECK(sign(Quaternion(-2.0)) == Quaternion(-1.0));

  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Quaternion a = random_quaternion(rng);
    if (a.is_zero()) continue;
    CHECK(close(abs(sign(a)), 1.0, 1e-13));
  }
}
