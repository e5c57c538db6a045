#include "orthodeg/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace orthodeg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_antisymmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      if ((*this)(i, j) != -(*this)(j, i)) return false;
    }
  }
  return true;
}

BigInt det_exact(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("det_exact: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss step: the division is exact.
        BigInt t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  BigInt d = a(n - 1, n - 1);
  return sign > 0 ? d : BigInt(-d);
}

namespace {

void check_pfaffian_input(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("pfaffian: matrix is not square");
  if (m.rows() % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
  if (!m.is_antisymmetric()) throw std::invalid_argument("pfaffian: matrix is not antisymmetric");
}

BigInt expand(const IntMatrix& m, std::vector<std::size_t>& idx) {
  if (idx.empty()) return 1;
  const std::size_t first = idx[0];
  BigInt total = 0;
  std::vector<std::size_t> rest;
  rest.reserve(idx.size() - 2);
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const BigInt& entry = m(first, idx[j]);
    if (entry == 0) continue;
    rest.clear();
    for (std::size_t k = 1; k < idx.size(); ++k) {
      if (k != j) rest.push_back(idx[k]);
    }
    BigInt sub = expand(m, rest);
    if (j % 2 == 1) {
      total += entry * sub;
    } else {
      total -= entry * sub;
    }
  }
  return total;
}

}  // namespace

BigInt pfaffian_expansion(const IntMatrix& m) {
  check_pfaffian_input(m);
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return expand(m, idx);
}

BigInt pfaffian_elimination(const IntMatrix& m) {
  check_pfaffian_input(m);
  const std::size_t n = m.rows();
  std::vector<BigRational> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = BigRational(m(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> BigRational& { return a[i * n + j]; };

  BigRational result = 1;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t p = k + 1;
    while (p < n && at(k, p) == 0) ++p;
    if (p == n) return 0;
    if (p != k + 1) {
      // Simultaneous row/column swap flips the sign of the Pfaffian.
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k + 1, j), at(p, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, k + 1), at(i, p));
      result = -result;
    }
    const BigRational pivot = at(k, k + 1);
    result *= pivot;
    // Congruence transform clearing rows/cols k, k+1 beyond the pivot block.
    for (std::size_t i = k + 2; i < n; ++i) {
      const BigRational ci = at(k, i) / pivot;
      const BigRational di = at(k + 1, i) / pivot;
      if (ci == 0 && di == 0) continue;
      for (std::size_t j = k + 2; j < n; ++j) {
        at(i, j) += di * at(k, j) - ci * at(k + 1, j);
      }
    }
  }
  return to_integer(result);
}

BigInt pfaffian(const IntMatrix& m) {
  if (m.rows() <= 12) return pfaffian_expansion(m);
  return pfaffian_elimination(m);
}

}  // namespace orthodeg
