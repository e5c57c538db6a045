#pragma once

// Exact integers and rationals used by every formula route.

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace orthodeg {

using BigInt = mpz_class;

/// Always stored in lowest terms with a positive denominator.
using BigRational = mpq_class;

/// C(n, k); zero when k is outside [0, n].
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::int64_t n);

/// 2^e for e >= 0.
BigInt pow2(std::uint64_t e);

BigRational make_rational(const BigInt& num, const BigInt& den);

/// Converts a rational that must be integral; throws std::logic_error otherwise.
BigInt to_integer(const BigRational& q);

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& q);

}  // namespace orthodeg
