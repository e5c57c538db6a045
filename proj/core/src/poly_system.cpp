#include "orthodeg/poly_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace orthodeg::numeric {

std::uint32_t Term::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors) d += f.second;
  return d;
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms) d = std::max(d, t.degree());
  return d;
}

namespace {
inline Complex ipow(Complex z, std::uint32_t e) {
  Complex r = 1.0;
  for (std::uint32_t k = 0; k < e; ++k) r *= z;
  return r;
}
}  // namespace

Complex Polynomial::evaluate(const CVector& x) const {
  Complex s = 0.0;
  for (const auto& t : terms) {
    Complex v = t.coefficient;
    for (const auto& [var, e] : t.factors) v *= ipow(x[var], e);
    s += v;
  }
  return s;
}

void PolySystem::add(Polynomial p) {
  for (const auto& t : p.terms) {
    for (const auto& [var, e] : t.factors) {
      if (var >= variables_) throw std::invalid_argument("PolySystem: variable index out of range");
      if (e == 0) throw std::invalid_argument("PolySystem: zero exponent in factor list");
    }
  }
  polys_.push_back(std::move(p));
}

void PolySystem::append(const PolySystem& other) {
  if (other.variables_ != variables_) throw std::invalid_argument("PolySystem: variable count mismatch");
  for (const auto& p : other.polys_) polys_.push_back(p);
}

std::vector<std::uint32_t> PolySystem::degrees() const {
  std::vector<std::uint32_t> d;
  d.reserve(polys_.size());
  for (const auto& p : polys_) d.push_back(p.degree());
  return d;
}

void PolySystem::evaluate(const CVector& x, CVector& out) const {
  out.resize(static_cast<Eigen::Index>(polys_.size()));
  for (std::size_t i = 0; i < polys_.size(); ++i) out[static_cast<Eigen::Index>(i)] = polys_[i].evaluate(x);
}

void PolySystem::evaluate(const CVector& x, CVector& out, CMatrix& jac) const {
  const auto rows = static_cast<Eigen::Index>(polys_.size());
  out.setZero(rows);
  jac.setZero(rows, static_cast<Eigen::Index>(variables_));
  for (Eigen::Index i = 0; i < rows; ++i) {
    Complex s = 0.0;
    for (const auto& t : polys_[static_cast<std::size_t>(i)].terms) {
      const std::size_t k = t.factors.size();
      if (k == 0) {
        s += t.coefficient;
        continue;
      }
      if (k == 1) {
        const auto [var, e] = t.factors[0];
        const Complex p = ipow(x[var], e - 1);
        s += t.coefficient * p * x[var];
        jac(i, var) += t.coefficient * static_cast<double>(e) * p;
        continue;
      }
      // General case: value and each partial by direct products.
      Complex v = t.coefficient;
      for (const auto& [var, e] : t.factors) v *= ipow(x[var], e);
      s += v;
      for (std::size_t a = 0; a < k; ++a) {
        Complex d = t.coefficient * static_cast<double>(t.factors[a].second) *
                    ipow(x[t.factors[a].first], t.factors[a].second - 1);
        for (std::size_t b = 0; b < k; ++b) {
          if (b != a) d *= ipow(x[t.factors[b].first], t.factors[b].second);
        }
        jac(i, t.factors[a].first) += d;
      }
    }
    out[i] = s;
  }
}

double PolySystem::max_residual(const CVector& x) const {
  CVector v;
  evaluate(x, v);
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

Polynomial make_polynomial(
    const std::vector<std::pair<Complex, std::vector<std::uint32_t>>>& terms) {
  Polynomial p;
  for (const auto& [c, exps] : terms) {
    Term t{c, {}};
    for (std::uint32_t v = 0; v < exps.size(); ++v) {
      if (exps[v] > 0) t.factors.emplace_back(v, exps[v]);
    }
    p.terms.push_back(std::move(t));
  }
  return p;
}

}  // namespace orthodeg::numeric
