#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "orthodeg/group_degree.hpp"
#include "orthodeg/sdp_degree.hpp"

using namespace orthodeg;
using namespace orthodeg::sdp;

namespace {

BigInt psi_pair_oracle(std::int64_t i, std::int64_t j) {
  BigInt s = 0;
  for (std::int64_t k = i; k < j; ++k) s += binomial(i + j - 2, k);
  return s;
}

// psi_I by the perfect-matching Pfaffian of the padded matrix.
BigInt psi_oracle(IndexSeq seq) {
  if (seq.empty()) return 1;
  if (seq.size() % 2 == 1) seq.insert(seq.begin(), 0);
  const std::size_t k = seq.size();
  IntMatrix a(k, k);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = p + 1; q < k; ++q) {
      a(p, q) = seq[p] == 0 ? pow2(static_cast<std::uint64_t>(seq[q] - 1)) : psi_pair_oracle(seq[p], seq[q]);
      a(q, p) = -a(p, q);
    }
  }
  return oracle::matching_pfaffian(a);
}

// Sum over all subsets of {1..n} by bitmask.
BigInt delta_oracle(std::int64_t m, std::int64_t n, std::int64_t r) {
  BigInt total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    IndexSeq in, out;
    std::int64_t sum = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
      if (mask & (1u << (i - 1))) {
        in.push_back(i);
        sum += i;
      } else {
        out.push_back(i);
      }
    }
    if (static_cast<std::int64_t>(in.size()) == n - r && sum == m) total += psi_oracle(in) * psi_oracle(out);
  }
  return total;
}

}  // namespace

TEST_CASE("psi base values") {
  CHECK(psi_single(1) == 1);
  CHECK(psi_single(2) == 2);
  CHECK(psi_single(5) == 16);
  CHECK(psi_pair(1, 2) == 1);
  CHECK(psi_pair(1, 3) == 3);
  CHECK(psi_pair(2, 3) == 3);
  CHECK(psi_seq({}) == 1);
  CHECK(psi_seq({3}) == 4);
  CHECK(psi_seq({1, 3}) == 3);
  CHECK_THROWS_AS(psi_pair(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(psi_single(0), std::invalid_argument);
}

TEST_CASE("psi pair matches the binomial sum") {
  for (std::int64_t i = 1; i <= 10; ++i) {
    for (std::int64_t j = i + 1; j <= 12; ++j) CHECK(psi_pair(i, j) == psi_pair_oracle(i, j));
  }
}

TEST_CASE("psi of longer sequences matches the matching Pfaffian") {
  const std::vector<IndexSeq> seqs{{1, 2, 3}, {1, 2, 3, 4}, {2, 4, 5}, {1, 3, 5, 6, 7}, {1, 2, 4, 5, 7, 8}, {2, 3, 5, 8}};
  for (const auto& s : seqs) CHECK(psi_seq(s) == psi_oracle(s));
}

TEST_CASE("psi matrix shape and antisymmetry") {
  const IntMatrix even = psi_matrix({1, 2, 4, 5});
  CHECK(even.rows() == 4);
  CHECK(even.is_antisymmetric());
  const IntMatrix odd = psi_matrix({2, 3, 5});
  CHECK(odd.rows() == 4);
  CHECK(odd(0, 1) == psi_single(2));
  CHECK(odd(2, 3) == psi_pair(3, 5));
}

TEST_CASE("psi squared is the determinant of its matrix") {
  const std::vector<IndexSeq> seqs{{1, 2}, {1, 2, 3}, {2, 3, 4, 6}, {1, 4, 5, 6, 8}, {1, 2, 3, 5, 7, 9}};
  for (const auto& s : seqs) {
    const BigInt p = psi_seq(s);
    CHECK(p * p == det_exact(psi_matrix(s)));
  }
}

TEST_CASE("delta hand values") {
  CHECK(delta({1, 2, 1}) == 2);
  CHECK(delta({2, 3, 2}) == 6);
  CHECK(delta({0, 2, 1}) == 0);
  CHECK(delta({3, 3, 1}) == 4);
  CHECK(delta({0, 4, 4}) == 1);
  CHECK(delta({1, 4, 4}) == 0);
}

TEST_CASE("delta agrees with a subset brute force") {
  for (std::int64_t n = 1; n <= 7; ++n) {
    for (std::int64_t r = 0; r <= n; ++r) {
      for (std::int64_t m = 0; m <= n * (n + 1) / 2 + 1; ++m) CHECK(delta({m, n, r}) == delta_oracle(m, n, r));
    }
  }
}

TEST_CASE("index set enumeration is lexicographic and complete") {
  std::vector<IndexSeq> got;
  for_each_index_set(6, 3, 10, [&](const IndexSeq& s) { got.push_back(s); });
  const std::vector<IndexSeq> expected{{1, 3, 6}, {1, 4, 5}, {2, 3, 5}};
  CHECK(got == expected);
  int none = 0;
  for_each_index_set(4, 2, 100, [&](const IndexSeq&) { ++none; });
  CHECK(none == 0);
  int empty = 0;
  for_each_index_set(4, 0, 0, [&](const IndexSeq& s) { empty += s.empty(); });
  CHECK(empty == 1);
}

TEST_CASE("critical count") {
  CHECK(critical_count({1, 2, 1}) == 4);
  CHECK(critical_count({2, 3, 2}) == 24);
  CHECK(critical_count({3, 3, 1}) == 8);
  for (std::int64_t r = 1; r <= 5; ++r) {
    for (std::int64_t m = 0; m <= 10; ++m) {
      const DeltaQuery q{m, 6, r};
      CHECK(critical_count(q) == 2 * deg_so(r) * delta(q));
    }
  }
  CHECK_THROWS_AS(critical_count({1, 2, 0}), std::invalid_argument);
}

TEST_CASE("queries are validated") {
  CHECK_THROWS_AS(delta({-1, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(delta({1, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(delta({1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(delta({1, 3, -1}), std::invalid_argument);
}
