#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace orthodeg::numeric {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// One monomial: coefficient times prod x_var^exp over the listed factors.
struct Term {
  Complex coefficient;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (variable, exponent > 0)

  std::uint32_t degree() const;
};

struct Polynomial {
  std::vector<Term> terms;

  std::uint32_t degree() const;
  Complex evaluate(const CVector& x) const;
};

/// Sparse polynomial system with double-precision complex coefficients.
class PolySystem {
 public:
  PolySystem() = default;
  explicit PolySystem(std::size_t variables) : variables_(variables) {}

  std::size_t variables() const { return variables_; }
  std::size_t size() const { return polys_.size(); }
  const std::vector<Polynomial>& polynomials() const { return polys_; }

  /// Throws std::invalid_argument if a factor names a variable out of range.
  void add(Polynomial p);
  void append(const PolySystem& other);

  std::vector<std::uint32_t> degrees() const;

  void evaluate(const CVector& x, CVector& out) const;
  void evaluate(const CVector& x, CVector& out, CMatrix& jac) const;

  double max_residual(const CVector& x) const;

 private:
  std::size_t variables_ = 0;
  std::vector<Polynomial> polys_;
};

/// Builds a polynomial from a dense exponent vector list; convenient in tests.
Polynomial make_polynomial(const std::vector<std::pair<Complex, std::vector<std::uint32_t>>>& terms);

}  // namespace orthodeg::numeric
