#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "orthodeg/bigint.hpp"

namespace orthodeg {

/// Dense row-major matrix of exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_antisymmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant by Bareiss fraction-free elimination. The 0x0 matrix has
/// determinant 1. Throws std::invalid_argument for non-square input.
BigInt det_exact(const IntMatrix& m);

/// Exact Pfaffian of an even-dimensional antisymmetric matrix. Small matrices
/// are expanded along the first row; larger ones use exact skew elimination.
/// The 0x0 matrix has Pfaffian 1.
BigInt pfaffian(const IntMatrix& m);

/// Pfaffian by first-row expansion only, regardless of size.
BigInt pfaffian_expansion(const IntMatrix& m);

/// Pfaffian by exact rational skew-symmetric elimination only.
BigInt pfaffian_elimination(const IntMatrix& m);

}  // namespace orthodeg
