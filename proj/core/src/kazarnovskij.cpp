#include "orthodeg/kazarnovskij.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "orthodeg/int_matrix.hpp"

namespace orthodeg::kazarnovskij {

std::string to_string(Family f) {
  switch (f) {
    case Family::SOEven: return "SO_even";
    case Family::SOOdd: return "SO_odd";
    case Family::Sp: return "Sp";
  }
  return "?";
}

RootData root_data(Family family, std::int64_t rank) {
  if (rank < 1) throw std::invalid_argument("root_data: rank must be >= 1");
  const std::int64_t r = rank;
  RootData d{family, r, 0, 0, {}, 0, 1};
  switch (family) {
    case Family::SOEven:
      d.dimension = r * (2 * r - 1);
      d.weyl_order = factorial(r) * pow2(static_cast<std::uint64_t>(r - 1));
      for (std::int64_t k = 1; k <= r - 1; ++k) d.coxeter_exponents.push_back(2 * k - 1);
      // The last exponent r-1 is 0 at r = 1 (SO(2) is a torus).
      d.coxeter_exponents.push_back(r - 1);
      d.linear_factor_multiplier = 0;
      break;
    case Family::SOOdd:
    case Family::Sp:
      d.dimension = r * (2 * r + 1);
      d.weyl_order = factorial(r) * pow2(static_cast<std::uint64_t>(r));
      for (std::int64_t k = 1; k <= r; ++k) d.coxeter_exponents.push_back(2 * k - 1);
      d.linear_factor_multiplier = family == Family::SOOdd ? 2 : 1;
      break;
  }
  return d;
}

BigRational simplex_monomial_integral(const std::vector<std::int64_t>& exponents) {
  BigInt num = 1;
  std::int64_t total = static_cast<std::int64_t>(exponents.size());
  for (std::int64_t a : exponents) {
    if (a < 0) throw std::invalid_argument("simplex_monomial_integral: negative exponent");
    num *= factorial(a);
    total += a;
  }
  return make_rational(num, factorial(total));
}

namespace {

int permutation_sign(const std::vector<std::int64_t>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<std::int64_t>> all_permutations(std::int64_t r) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(r));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<std::int64_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

BigRational integral_direct(Family family, std::int64_t rank, std::int64_t cap) {
  if (rank < 1) throw std::invalid_argument("integral_direct: rank must be >= 1");
  if (rank > cap) {
    throw std::invalid_argument("integral_direct: rank " + std::to_string(rank) +
                                " exceeds the direct-route cap " + std::to_string(cap) +
                                " ((r!)^2 terms); use the closed route");
  }
  const RootData rd = root_data(family, rank);
  const std::int64_t extra = rd.linear_factor_multiplier > 0 ? 2 : 0;
  const auto perms = all_permutations(rank);
  std::vector<int> signs;
  signs.reserve(perms.size());
  for (const auto& p : perms) signs.push_back(permutation_sign(p));

  // Every term has the same total degree, so the simplex integrals share the
  // denominator (r + deg)!; accumulate the numerators prod(a_i!) exactly.
  const std::int64_t max_exp = 4 * rank - 4 + extra;
  std::vector<BigInt> fact(static_cast<std::size_t>(max_exp + 1));
  for (std::int64_t k = 0; k <= max_exp; ++k) fact[static_cast<std::size_t>(k)] = factorial(k);

  std::int64_t degree = -1;
  BigInt numerator = 0;
  BigInt term;
  for (std::size_t s = 0; s < perms.size(); ++s) {
    for (std::size_t t = 0; t < perms.size(); ++t) {
      term = 1;
      std::int64_t deg = 0;
      for (std::size_t i = 0; i < static_cast<std::size_t>(rank); ++i) {
        const std::int64_t a = 2 * perms[s][i] + 2 * perms[t][i] - 4 + extra;
        term *= fact[static_cast<std::size_t>(a)];
        deg += a;
      }
      if (degree < 0) degree = deg;
      if (deg != degree) throw std::logic_error("integral_direct: integrand not homogeneous");
      if (signs[s] * signs[t] > 0) {
        numerator += term;
      } else {
        numerator -= term;
      }
    }
  }
  BigRational integral = make_rational(numerator, factorial(rank + degree));
  const std::int64_t mult = rd.linear_factor_multiplier;
  BigInt scale = pow2(static_cast<std::uint64_t>(rank));
  if (mult > 0) {
    BigInt m2 = mult * mult;
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), m2.get_mpz_t(), static_cast<unsigned long>(rank));
    scale *= p;
  }
  integral *= BigRational(scale);
  integral.canonicalize();
  return integral;
}

BigRational integral_closed(Family family, std::int64_t rank) {
  if (rank < 1) throw std::invalid_argument("integral_closed: rank must be >= 1");
  const std::int64_t r = rank;
  const std::size_t n = static_cast<std::size_t>(r);
  IntMatrix m(n, n);
  const std::int64_t shift = family == Family::SOEven ? 4 : 2;
  for (std::int64_t i = 1; i <= r; ++i)
    for (std::int64_t j = 1; j <= r; ++j)
      m(i - 1, j - 1) = factorial(2 * i + 2 * j - shift);
  const BigInt det = det_exact(m);

  if (family == Family::SOEven) {
    return make_rational(factorial(r) * pow2(static_cast<std::uint64_t>(r)) * det,
                         factorial(r * (2 * r - 1)));
  }
  BigRational odd = make_rational(factorial(r) * pow2(static_cast<std::uint64_t>(3 * r)) * det,
                                  factorial(r * (2 * r + 1)));
  if (family == Family::SOOdd) return odd;
  // The symplectic integrand drops the factor 2^2 per coordinate.
  return make_rational(odd.get_num(), odd.get_den() * pow2(static_cast<std::uint64_t>(2 * r)));
}

BigInt degree_via_kazarnovskij(Family family, std::int64_t rank, Route route) {
  const RootData rd = root_data(family, rank);
  const BigRational integral =
      route == Route::Direct ? integral_direct(family, rank) : integral_closed(family, rank);
  BigInt exps = 1;
  for (std::int64_t c : rd.coxeter_exponents) exps *= factorial(c);
  const BigInt den = rd.weyl_order * exps * exps * rd.kernel_order;
  BigRational value = make_rational(factorial(rd.dimension), den) * integral;
  value.canonicalize();
  if (value.get_den() != 1) {
    throw std::logic_error("degree_via_kazarnovskij: non-integral degree " + value.get_str() +
                           " for " + to_string(family) + " rank " + std::to_string(rank));
  }
  return value.get_num();
}

}  // namespace orthodeg::kazarnovskij
