#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "orthodeg/group_degree.hpp"
#include "orthodeg/kazarnovskij.hpp"

using namespace orthodeg;
using namespace orthodeg::kazarnovskij;

namespace {

// Integral of x^a y^b over {x, y >= 0, x + y <= 1}: integrate y first, then
// expand (1 - x)^(b+1) and integrate term by term.
BigRational triangle_integral(std::int64_t a, std::int64_t b) {
  BigRational sum = 0;
  for (std::int64_t k = 0; k <= b + 1; ++k) {
    BigRational term = make_rational(binomial(b + 1, k), a + k + 1);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum / (b + 1);
}

}  // namespace

TEST_CASE("simplex monomial integrals") {
  CHECK(simplex_monomial_integral({}) == 1);
  CHECK(simplex_monomial_integral({0}) == 1);
  for (std::int64_t a = 0; a <= 8; ++a) CHECK(simplex_monomial_integral({a}) == make_rational(1, a + 1));
  for (std::int64_t a = 0; a <= 6; ++a) {
    for (std::int64_t b = 0; b <= 6; ++b) CHECK(simplex_monomial_integral({a, b}) == triangle_integral(a, b));
  }
  // Volume of the standard 3-simplex.
  CHECK(simplex_monomial_integral({0, 0, 0}) == make_rational(1, 6));
  CHECK_THROWS_AS(simplex_monomial_integral({1, -1}), std::invalid_argument);
}

TEST_CASE("root data") {
  const RootData so6 = root_data(Family::SOEven, 3);
  CHECK(so6.dimension == 15);
  CHECK(so6.weyl_order == 24);
  CHECK(so6.coxeter_exponents == std::vector<std::int64_t>{1, 3, 2});

  const RootData so7 = root_data(Family::SOOdd, 3);
  CHECK(so7.dimension == 21);
  CHECK(so7.weyl_order == 48);
  CHECK(so7.coxeter_exponents == std::vector<std::int64_t>{1, 3, 5});

  const RootData sp2 = root_data(Family::Sp, 2);
  CHECK(sp2.dimension == 10);
  CHECK(sp2.weyl_order == 8);
  CHECK(sp2.coxeter_exponents == std::vector<std::int64_t>{1, 3});

  const RootData so2 = root_data(Family::SOEven, 1);
  CHECK(so2.dimension == 1);
  CHECK(so2.coxeter_exponents == std::vector<std::int64_t>{0});

  CHECK_THROWS_AS(root_data(Family::Sp, 0), std::invalid_argument);
}

TEST_CASE("dimension equals rank plus twice the number of positive roots") {
  for (std::int64_t r = 1; r <= 6; ++r) {
    for (Family f : {Family::SOEven, Family::SOOdd, Family::Sp}) {
      const RootData d = root_data(f, r);
      std::int64_t exp_sum = 0;
      for (auto e : d.coxeter_exponents) exp_sum += e;
      // The exponents sum to the number of positive roots.
      CHECK(d.dimension == r + 2 * exp_sum);
    }
  }
}

TEST_CASE("direct route reproduces the formula for SO(n), n = 2..9") {
  for (std::int64_t n = 2; n <= 9; ++n) {
    const Family f = n % 2 == 0 ? Family::SOEven : Family::SOOdd;
    CHECK(degree_via_kazarnovskij(f, n / 2, Route::Direct) == deg_so(n));
  }
}

TEST_CASE("closed route reproduces the formula beyond the direct cap") {
  for (std::int64_t n = 2; n <= 16; ++n) {
    const Family f = n % 2 == 0 ? Family::SOEven : Family::SOOdd;
    CHECK(degree_via_kazarnovskij(f, n / 2, Route::Closed) == deg_so(n));
  }
  for (std::int64_t r = 1; r <= 7; ++r) CHECK(degree_via_kazarnovskij(Family::Sp, r, Route::Closed) == deg_sp(r));
}

TEST_CASE("direct and closed integrals agree") {
  for (std::int64_t r = 1; r <= 5; ++r) {
    for (Family f : {Family::SOEven, Family::SOOdd, Family::Sp}) {
      CHECK(integral_direct(f, r) == integral_closed(f, r));
    }
  }
}

TEST_CASE("symplectic integral is the odd one scaled by 4^-r") {
  for (std::int64_t r = 1; r <= 6; ++r) {
    CHECK(integral_closed(Family::Sp, r) * pow2(static_cast<std::uint64_t>(2 * r)) ==
          integral_closed(Family::SOOdd, r));
  }
}

TEST_CASE("direct route enforces its cap") {
  CHECK_THROWS_AS(integral_direct(Family::SOEven, 7), std::invalid_argument);
  CHECK_THROWS_AS(integral_direct(Family::SOEven, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(integral_direct(Family::Sp, 0), std::invalid_argument);
  CHECK_THROWS_AS(integral_closed(Family::Sp, 0), std::invalid_argument);
}
