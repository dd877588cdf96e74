#include <random>
#include <vector>

#include "algebra/quaternion.hpp"
#include "algebra/vec3.hpp"
#include "doctest.h"

using namespace algebra;

namespace {

Rational random_rational(std::mt19937& rng, int bound = 20) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(num(rng), den(rng));
}

Quaternion random_quaternion(std::mt19937& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

Vec3Q random_vec(std::mt19937& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng)};
}

}  // namespace

TEST_CASE("basis multiplication law") {
  const Quaternion one = Quaternion::one(), i = Quaternion::i(), j = Quaternion::j(),
                   k = Quaternion::k();
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK(k * j == -i);
  CHECK(i * k == -j);
  CHECK(i * i == -one);
  CHECK(j * j == -one);
  CHECK(k * k == -one);
  CHECK(i * j != j * i);
}

TEST_CASE("unity and scalars") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    Quaternion q = random_quaternion(rng);
    CHECK(Quaternion::one() * q == q);
    CHECK(q * Quaternion::one() == q);
  }
}

TEST_CASE("associativity on all signed basis triples") {
  std::vector<Quaternion> basis = {Quaternion::one(),  Quaternion::i(),  Quaternion::j(),
                                   Quaternion::k(),    -Quaternion::one(), -Quaternion::i(),
                                   -Quaternion::j(),   -Quaternion::k()};
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("inverse by conjugate over norm") {
  CHECK(Quaternion::i().inverse() == -Quaternion::i());
  CHECK(Quaternion(2, 0, 0, 0).inverse() == Quaternion(Rational(1, 2), 0, 0, 0));
  Quaternion q(1, 1, 1, 1);
  Quaternion expected(Rational(1, 4), Rational(-1, 4), Rational(-1, 4), Rational(-1, 4));
  CHECK(q.inverse() == expected);
  CHECK(q * q.inverse() == Quaternion::one());
  CHECK(q.inverse() * q == Quaternion::one());
  CHECK_THROWS_WITH_AS(Quaternion().inverse(), "zero has no inverse", std::domain_error);
}

TEST_CASE("inverse round-trips exactly on random quaternions") {
  std::mt19937 rng(32);
  int done = 0;
  while (done < 200) {
    Quaternion q = random_quaternion(rng);
    if (q.is_zero()) continue;
    ++done;
    CHECK(q * q.inverse() == Quaternion::one());
    CHECK(q.inverse() * q == Quaternion::one());
  }
}

TEST_CASE("norm is positive definite") {
  std::mt19937 rng(33);
  CHECK(Quaternion().norm() == Rational(0));
  for (int trial = 0; trial < 100; ++trial) {
    Quaternion q = random_quaternion(rng);
    if (q.is_zero()) continue;
    CHECK(q.norm().sign() == 1);
  }
}

TEST_CASE("cross product on the basis") {
  const Vec3Q e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  CHECK(cross(e1, e2) == e3);
  CHECK(cross(e2, e3) == e1);
  CHECK(cross(e3, e1) == e2);
  CHECK(cross(e2, e1) == -e3);
}

TEST_CASE("Lie ring laws hold exactly on random vectors") {
  std::mt19937 rng(34);
  const Vec3Q zero{0, 0, 0};
  for (int trial = 0; trial < 100; ++trial) {
    Vec3Q x = random_vec(rng), y = random_vec(rng), z = random_vec(rng);
    CHECK(cross(x, x) == zero);
    CHECK(cross(x, y) == -cross(y, x));
    Vec3Q jacobi = cross(x, cross(y, z)) + cross(y, cross(z, x)) + cross(z, cross(x, y));
    CHECK(jacobi == zero);
  }
}
