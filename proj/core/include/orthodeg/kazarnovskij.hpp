#pragma once

// Degrees of SO(2r), SO(2r+1) and Sp(r) recomputed from root data through
// Kazarnovskij's integral formula, with the integral over the weight polytope
// evaluated exactly as a signed sum of simplex monomial integrals.

#include <cstdint>
#include <string>
#include <vector>

#include "orthodeg/bigint.hpp"

namespace orthodeg::kazarnovskij {

enum class Family { SOEven, SOOdd, Sp };

std::string to_string(Family f);

struct RootData {
  Family family;
  std::int64_t rank;
  std::int64_t dimension;
  BigInt weyl_order;
  std::vector<std::int64_t> coxeter_exponents;
  // Per-coordinate linear factor (k x_i)^2 in the integrand; 0 means absent.
  std::int64_t linear_factor_multiplier;
  std::int64_t kernel_order = 1;
};

RootData root_data(Family family, std::int64_t rank);

/// prod(a_i!) / (r + sum a_i)!, the integral of x^a over the standard
/// r-simplex. Zero exponents are allowed.
BigRational simplex_monomial_integral(const std::vector<std::int64_t>& exponents);

inline constexpr std::int64_t kDefaultDirectCap = 6;

/// Integral over the cross-polytope by expanding the squared Vandermonde
/// product over S_r x S_r. Rejects rank > cap with std::invalid_argument.
BigRational integral_direct(Family family, std::int64_t rank,
                            std::int64_t cap = kDefaultDirectCap);

/// Same integral through the factorial-determinant closed form.
BigRational integral_closed(Family family, std::int64_t rank);

enum class Route { Direct, Closed };

/// m! / (|W| (prod c_i!)^2 |ker|) times the integral. Throws std::logic_error
/// if the result is not an integer.
BigInt degree_via_kazarnovskij(Family family, std::int64_t rank, Route route);

}  // namespace orthodeg::kazarnovskij
