#include "orthodeg/bigint.hpp"

#include <stdexcept>

namespace orthodeg {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt pow2(std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt to_integer(const BigRational& q) {
  if (q.get_den() != 1) {
    throw std::logic_error("expected an integer, got " + q.get_str());
  }
  return q.get_num();
}

std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const BigRational& q) { return q.get_str(); }

}  // namespace orthodeg
