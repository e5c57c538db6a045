#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "orthodeg/group_degree.hpp"

using namespace orthodeg;

TEST_CASE("deg SO(n) for n = 2..9") {
  const char* expected[] = {"2", "8", "40", "384", "4768", "111616", "3433600", "196968448"};
  for (std::int64_t n = 2; n <= 9; ++n) CHECK(to_string(deg_so(n)) == expected[n - 2]);
  CHECK(deg_so(1) == 1);
}

TEST_CASE("deg O(n) doubles deg SO(n)") {
  for (std::int64_t n = 1; n <= 14; ++n) CHECK(deg_o(n) == 2 * deg_so(n));
  CHECK(deg_o(3) == 16);
  CHECK(deg_o(4) == 80);
}

TEST_CASE("deg Sp(r) for r = 1..5") {
  const char* expected[] = {"2", "24", "1744", "769408", "2063048448"};
  for (std::int64_t r = 1; r <= 5; ++r) CHECK(to_string(deg_sp(r)) == expected[r - 1]);
}

TEST_CASE("odd orthogonal degree is a power of two times the symplectic degree") {
  for (std::int64_t r = 1; r <= 8; ++r) CHECK(deg_so(2 * r + 1) == pow2(static_cast<std::uint64_t>(2 * r)) * deg_sp(r));
}

TEST_CASE("degree matrices match Pascal entries and cofactor determinants") {
  const auto t = oracle::pascal(64);
  auto c = [&](std::int64_t n, std::int64_t k) -> BigInt {
    if (k < 0 || k > n) return 0;
    return t[n][k];
  };
  for (std::int64_t n = 2; n <= 12; ++n) {
    const IntMatrix m = so_degree_matrix(n);
    const std::size_t h = static_cast<std::size_t>(n / 2);
    REQUIRE(m.rows() == h);
    for (std::size_t i = 1; i <= h; ++i) {
      for (std::size_t j = 1; j <= h; ++j) {
        const std::int64_t ii = static_cast<std::int64_t>(i), jj = static_cast<std::int64_t>(j);
        CHECK(m(i - 1, j - 1) == c(2 * n - 2 * ii - 2 * jj, n - 2 * ii));
      }
    }
    CHECK(deg_so(n) == pow2(static_cast<std::uint64_t>(n - 1)) * oracle::cofactor_det(m));
  }
  for (std::int64_t r = 1; r <= 6; ++r) {
    const IntMatrix m = sp_degree_matrix(r);
    for (std::int64_t i = 1; i <= r; ++i) {
      for (std::int64_t j = 1; j <= r; ++j) CHECK(m(i - 1, j - 1) == c(2 * i + 2 * j - 2, 2 * i - 1));
    }
    CHECK(deg_sp(r) == oracle::cofactor_det(m));
  }
}

TEST_CASE("SO(5) matrix written out") {
  // floor(5/2) = 2: [[C(6,3), C(4,3)], [C(4,1), C(2,1)]]
  CHECK(so_degree_matrix(5) == IntMatrix{{20, 4}, {4, 2}});
  CHECK(deg_so(5) == 16 * (40 - 16));
}

TEST_CASE("group ids and parsing") {
  CHECK(parse_group_family("SO") == GroupFamily::SO);
  CHECK(parse_group_family("o") == GroupFamily::O);
  CHECK(parse_group_family("Sp") == GroupFamily::Sp);
  CHECK_THROWS_AS(parse_group_family("gl"), std::invalid_argument);
  CHECK(to_string(GroupFamily::Sp) == "Sp");
  CHECK(group_degree({GroupFamily::O, 3}) == 16);
  CHECK(group_degree({GroupFamily::Sp, 2}) == 24);
}

TEST_CASE("non-positive sizes are rejected") {
  CHECK_THROWS_AS(deg_so(0), std::invalid_argument);
  CHECK_THROWS_AS(deg_o(-2), std::invalid_argument);
  CHECK_THROWS_AS(deg_sp(0), std::invalid_argument);
}
