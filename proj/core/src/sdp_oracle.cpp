#include "orthodeg/sdp_oracle.hpp"

#include <algorithm>
#include <Eigen/SVD>
#include <map>
#include <stdexcept>

#include "orthodeg/rng.hpp"

namespace orthodeg::numeric {

namespace {

double random_rational(Rng& rng) {
  const auto p = static_cast<int>(rng.next_u64() % 19) - 9;
  const auto q = static_cast<int>(rng.next_u64() % 9) + 1;
  return static_cast<double>(p) / q;
}

Eigen::MatrixXd random_symmetric(int n, Rng& rng) {
  Eigen::MatrixXd s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) s(i, j) = s(j, i) = random_rational(rng);
  return s;
}

// Product of the listed variables as a sorted factor list.
Term monomial(Complex c, std::vector<std::uint32_t> vars) {
  std::sort(vars.begin(), vars.end());
  Term t{c, {}};
  for (std::uint32_t v : vars) {
    if (!t.factors.empty() && t.factors.back().first == v) {
      ++t.factors.back().second;
    } else {
      t.factors.emplace_back(v, 1);
    }
  }
  return t;
}

Polynomial merged(const std::vector<Term>& terms) {
  std::map<std::vector<std::pair<std::uint32_t, std::uint32_t>>, Complex> acc;
  for (const auto& t : terms) acc[t.factors] += t.coefficient;
  Polynomial p;
  for (auto& [f, c] : acc)
    if (c != 0.0) p.terms.push_back(Term{c, f});
  return p;
}

}  // namespace

SdpInstance random_sdp_instance(int m, int n, int r, std::uint64_t seed) {
  if (m < 0 || n < 1 || r < 1 || r > n) throw std::invalid_argument("sdp instance: need m >= 0, 1 <= r <= n");
  Rng rng = Rng::stream(seed, "sdp-data");
  SdpInstance inst;
  inst.m = m;
  inst.n = n;
  inst.r = r;
  inst.c = random_symmetric(n, rng);
  for (int i = 0; i < m; ++i) inst.a.push_back(random_symmetric(n, rng));
  inst.b.resize(m);
  for (int i = 0; i < m; ++i) {
    double v = 0.0;
    while (v == 0.0) v = random_rational(rng);
    inst.b[i] = v;
  }
  return inst;
}

PolySystem sdp_lagrange_system(const SdpInstance& inst, std::uint64_t seed) {
  const int n = inst.n, r = inst.r, m = inst.m;
  auto rv = [r](int a, int k) { return static_cast<std::uint32_t>(a * r + k); };
  auto yv = [n, r](int i) { return static_cast<std::uint32_t>(n * r + i); };
  PolySystem sys(inst.variables());

  // [(C - sum y_i A_i) R R^T]_{ab} = sum_{c,k} (C_ac - sum_i y_i A_i,ac) R_ck R_bk
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<Term> terms;
      for (int c = 0; c < n; ++c) {
        for (int k = 0; k < r; ++k) {
          if (inst.c(a, c) != 0.0) terms.push_back(monomial(inst.c(a, c), {rv(c, k), rv(b, k)}));
          for (int i = 0; i < m; ++i) {
            const double aic = inst.a[static_cast<std::size_t>(i)](a, c);
            if (aic != 0.0) terms.push_back(monomial(-aic, {yv(i), rv(c, k), rv(b, k)}));
          }
        }
      }
      sys.add(merged(terms));
    }
  }
  // A_i . (R R^T) - b_i
  for (int i = 0; i < m; ++i) {
    std::vector<Term> terms;
    const auto& ai = inst.a[static_cast<std::size_t>(i)];
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < r; ++k)
          if (ai(a, b) != 0.0) terms.push_back(monomial(ai(a, b), {rv(a, k), rv(b, k)}));
    terms.push_back(Term{-inst.b[i], {}});
    sys.add(merged(terms));
  }
  // Affine cuts on R for the positive-dimensional O(r) fibers.
  Rng rng = Rng::stream(seed, "sdp-cuts");
  const int cuts = r * (r - 1) / 2;
  for (int q = 0; q < cuts; ++q) {
    Polynomial p;
    for (int a = 0; a < n; ++a)
      for (int k = 0; k < r; ++k) p.terms.push_back(Term{rng.unit_square(), {{rv(a, k), 1}}});
    p.terms.push_back(Term{rng.unit_square(), {}});
    sys.add(std::move(p));
  }
  return sys;
}

PolySystem square_up(const PolySystem& full, const SdpInstance& inst, std::uint64_t seed) {
  const int n = inst.n, r = inst.r;
  const std::size_t stationarity = static_cast<std::size_t>(n * n);
  const std::size_t combos = static_cast<std::size_t>(n * r - r * (r - 1) / 2);
  Rng rng = Rng::stream(seed, "sdp-square");
  PolySystem sq(full.variables());
  for (std::size_t p = 0; p < combos; ++p) {
    std::vector<Term> terms;
    for (std::size_t e = 0; e < stationarity; ++e) {
      const Complex lambda = rng.unit_square();
      for (const auto& t : full.polynomials()[e].terms) terms.push_back(Term{lambda * t.coefficient, t.factors});
    }
    sq.add(merged(terms));
  }
  for (std::size_t e = stationarity; e < full.size(); ++e) sq.add(full.polynomials()[e]);
  if (sq.size() != sq.variables()) throw std::logic_error("square_up: system is not square");
  return sq;
}

SdpOracleResult sdp_critical_solve(int m, int n, int r, std::uint64_t seed, const TrackerSettings& settings) {
  if (n * r + m > 10) throw std::invalid_argument("sdp_critical_solve: limited to n*r + m <= 10 unknowns");
  const SdpInstance inst = random_sdp_instance(m, n, r, seed);
  const PolySystem full = sdp_lagrange_system(inst, seed);
  const PolySystem square = square_up(full, inst, seed);
  TrackerSettings s = settings;
  s.seed = mix64(seed ^ settings.seed);
  const SolveReport rep = solve_total_degree(square, s);

  SdpOracleResult out;
  out.paths = rep.paths.size();
  out.failed = rep.failed;
  out.degraded = rep.degraded;
  for (const auto& x : rep.solutions) {
    if (full.max_residual(x) >= kSdpResidualFilter) continue;
    Eigen::MatrixXcd rmat(n, r);
    for (int a = 0; a < n; ++a) {
      for (int k = 0; k < r; ++k) rmat(a, k) = x[a * r + k];
    }
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(rmat).singularValues();
    if (sv(r - 1) < kSdpRankFloor) {
      ++out.rank_deficient;
      continue;
    }
    out.points.push_back(x);
  }
  out.solutions = out.points.size();
  return out;
}

}  // namespace orthodeg::numeric
