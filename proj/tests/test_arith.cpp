#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "orthodeg/bigint.hpp"
#include "orthodeg/int_matrix.hpp"

using namespace orthodeg;

TEST_CASE("binomial matches Pascal's triangle") {
  const auto t = oracle::pascal(40);
  for (std::int64_t n = 0; n < 40; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) CHECK(binomial(n, k) == t[n][k]);
  }
}

TEST_CASE("binomial outside the range") {
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("factorial and powers of two") {
  BigInt f = 1;
  for (std::int64_t n = 0; n <= 30; ++n) {
    if (n > 0) f *= n;
    CHECK(factorial(n) == f);
  }
  CHECK(to_string(factorial(25)) == "15511210043330985984000000");
  CHECK(pow2(0) == 1);
  CHECK(pow2(70) == BigInt("1180591620717411303424"));
}

TEST_CASE("rationals normalize and convert") {
  const BigRational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK(to_integer(make_rational(12, 4)) == 3);
  CHECK_THROWS_AS(to_integer(q), std::logic_error);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("det of small fixed matrices") {
  CHECK(det_exact(IntMatrix(0, 0)) == 1);
  CHECK(det_exact(IntMatrix{{7}}) == 7);
  CHECK(det_exact(IntMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(det_exact(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det_exact(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(det_exact(IntMatrix::identity(6)) == 1);
  CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("det agrees with cofactor expansion on random matrices") {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<long> dist(-20, 20);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 7;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(gen);
    }
    // Zero leading entries force pivoting.
    if (trial % 3 == 0) m(0, 0) = 0;
    CHECK(det_exact(m) == oracle::cofactor_det(m));
  }
}

TEST_CASE("det of a rank-deficient matrix is zero") {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<long> dist(-9, 9);
  IntMatrix m(5, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) m(i, j) = dist(gen);
  }
  for (std::size_t j = 0; j < 5; ++j) m(4, j) = 2 * m(0, j) - m(2, j);
  CHECK(det_exact(m) == 0);
}

TEST_CASE("pfaffian of small fixed matrices") {
  CHECK(pfaffian(IntMatrix(0, 0)) == 1);
  CHECK(pfaffian(IntMatrix{{0, 5}, {-5, 0}}) == 5);
  // a12 a34 - a13 a24 + a14 a23
  IntMatrix a{{0, 1, 2, 3}, {-1, 0, 4, 5}, {-2, -4, 0, 6}, {-3, -5, -6, 0}};
  CHECK(pfaffian(a) == 1 * 6 - 2 * 5 + 3 * 4);
  CHECK(pfaffian_elimination(a) == 8);
}

TEST_CASE("pfaffian rejects bad input") {
  CHECK_THROWS_AS(pfaffian(IntMatrix(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(pfaffian(IntMatrix{{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(pfaffian(IntMatrix{{1, 1}, {-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(pfaffian_elimination(IntMatrix(2, 4)), std::invalid_argument);
}

TEST_CASE("pfaffian matches the perfect-matching sum") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 * (1 + trial % 4);
    const IntMatrix a = oracle::random_antisymmetric(n, gen);
    const BigInt expected = oracle::matching_pfaffian(a);
    CHECK(pfaffian_expansion(a) == expected);
    CHECK(pfaffian_elimination(a) == expected);
  }
}

TEST_CASE("pfaffian squared equals determinant") {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 * (1 + trial % 4);
    const IntMatrix a = oracle::random_antisymmetric(n, gen);
    const BigInt pf = pfaffian(a);
    CHECK(pf * pf == det_exact(a));
  }
}

TEST_CASE("elimination handles zero pivots and large sizes") {
  std::mt19937_64 gen(29);
  for (int trial = 0; trial < 10; ++trial) {
    IntMatrix a = oracle::random_antisymmetric(14, gen, 3);
    // Empty first row block forces a pivot search.
    for (std::size_t j = 0; j < 14; ++j) {
      if (trial % 2 == 0 && j < 5) {
        a(0, j) = 0;
        a(j, 0) = 0;
      }
    }
    const BigInt pf = pfaffian(a);
    CHECK(pf * pf == det_exact(a));
    CHECK(pfaffian_elimination(a) == pfaffian_expansion(a));
  }
  IntMatrix zero(6, 6);
  CHECK(pfaffian_elimination(zero) == 0);
}

TEST_CASE("block diagonal pfaffian is the product of blocks") {
  IntMatrix a(6, 6);
  const long v[3] = {2, -3, 7};
  for (std::size_t b = 0; b < 3; ++b) {
    a(2 * b, 2 * b + 1) = v[b];
    a(2 * b + 1, 2 * b) = -v[b];
  }
  CHECK(pfaffian(a) == -42);
  CHECK(pfaffian_elimination(a) == -42);
}
