#include "orthodeg/witness.hpp"

#include <cmath>
#include <stdexcept>

#include "orthodeg/rng.hpp"

namespace orthodeg::numeric {

namespace {
void require_n(int n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
}
}  // namespace

PolySystem orthogonality_system(int n) {
  require_n(n);
  const auto nn = static_cast<std::uint32_t>(n);
  PolySystem sys(nn * nn);
  for (std::uint32_t i = 0; i < nn; ++i) {
    for (std::uint32_t j = i; j < nn; ++j) {
      Polynomial p;
      for (std::uint32_t k = 0; k < nn; ++k) {
        const std::uint32_t a = nn * i + k;
        const std::uint32_t b = nn * j + k;
        if (i == j) {
          p.terms.push_back(Term{1.0, {{a, 2}}});
        } else {
          p.terms.push_back(Term{1.0, {{a, 1}, {b, 1}}});
        }
      }
      if (i == j) p.terms.push_back(Term{-1.0, {}});
      sys.add(std::move(p));
    }
  }
  return sys;
}

std::size_t slice_form_count(int n) {
  require_n(n);
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

std::vector<Complex> Slice::coefficients() const {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(linear.rows() * (linear.cols() + 1)));
  for (Eigen::Index i = 0; i < linear.rows(); ++i) {
    for (Eigen::Index j = 0; j < linear.cols(); ++j) out.push_back(linear(i, j));
    out.push_back(constant[i]);
  }
  return out;
}

Slice Slice::from_coefficients(int n, std::uint64_t seed, const std::vector<Complex>& coeffs) {
  const std::size_t k = slice_form_count(n);
  const std::size_t cols = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (coeffs.size() != k * (cols + 1)) {
    throw std::invalid_argument("Slice: expected (n^2+1)*C(n,2) coefficients");
  }
  Slice s;
  s.n = n;
  s.seed = seed;
  s.linear.resize(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(cols));
  s.constant.resize(static_cast<Eigen::Index>(k));
  bool real = true;
  std::size_t p = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      s.linear(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = coeffs[p];
      real = real && coeffs[p].imag() == 0.0;
      ++p;
    }
    s.constant[static_cast<Eigen::Index>(i)] = coeffs[p];
    real = real && coeffs[p].imag() == 0.0;
    ++p;
  }
  s.real_only = real;
  return s;
}

Slice random_slice(int n, std::uint64_t seed, bool real_only) {
  const std::size_t k = slice_form_count(n);
  const std::size_t cols = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  Rng rng = Rng::stream(seed, real_only ? "slice-real" : "slice");
  std::vector<Complex> coeffs(k * (cols + 1));
  for (auto& c : coeffs) c = real_only ? Complex(rng.uniform01(), 0.0) : rng.unit_square();
  Slice s = Slice::from_coefficients(n, seed, coeffs);
  s.real_only = real_only;
  return s;
}

Slice slice_through(const CVector& point, int n, std::uint64_t seed) {
  Slice s = random_slice(n, seed);
  s.constant = -(s.linear * point);
  return s;
}

PolySystem sliced_system(int n, const Slice& slice) {
  PolySystem sys = orthogonality_system(n);
  const auto cols = static_cast<std::uint32_t>(n * n);
  if (slice.linear.cols() != static_cast<Eigen::Index>(cols)) {
    throw std::invalid_argument("sliced_system: slice dimension mismatch");
  }
  for (Eigen::Index i = 0; i < slice.linear.rows(); ++i) {
    Polynomial p;
    for (std::uint32_t j = 0; j < cols; ++j) {
      const Complex c = slice.linear(i, j);
      if (c != 0.0) p.terms.push_back(Term{c, {{j, 1}}});
    }
    if (slice.constant[i] != 0.0) p.terms.push_back(Term{slice.constant[i], {}});
    sys.add(std::move(p));
  }
  return sys;
}

CVector identity_point(int n) {
  CVector x = CVector::Zero(n * n);
  for (int i = 0; i < n; ++i) x[n * i + i] = 1.0;
  return x;
}

Complex determinant(const CVector& x, int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = x[n * i + j];
  return m.determinant();
}

double WitnessSet::max_residual() const {
  const PolySystem sys = sliced_system(n, slice);
  double worst = 0.0;
  for (const auto& p : points) worst = std::max(worst, sys.max_residual(p));
  return worst;
}

TotalDegreeSolve total_degree_solve(int n, const Slice& slice, const TrackerSettings& settings) {
  if (n < 2 || n > 4) throw std::invalid_argument("total_degree_solve: supported for 2 <= n <= 4");
  const PolySystem sys = sliced_system(n, slice);
  const SolveReport rep = solve_total_degree(sys, settings);
  TotalDegreeSolve out;
  out.witness.n = n;
  out.witness.slice = slice;
  out.witness.points = rep.solutions;
  out.witness.tolerance = settings.endpoint_residual_tolerance;
  out.paths = rep.paths.size();
  out.converged = rep.converged;
  out.diverged = rep.diverged;
  out.failed = rep.failed;
  out.retracked = rep.retracked;
  out.degraded = rep.degraded;
  return out;
}

ComponentSplit split_components(const WitnessSet& ws) {
  ComponentSplit out;
  for (std::size_t i = 0; i < ws.points.size(); ++i) {
    const Complex d = determinant(ws.points[i], ws.n);
    if (std::abs(std::abs(d) - 1.0) > 0.1) out.suspect.push_back(i);
    if (d.real() > 0) {
      out.so_points.push_back(ws.points[i]);
    } else {
      out.other_points.push_back(ws.points[i]);
    }
  }
  return out;
}

SliceHomotopy::SliceHomotopy(const PolySystem& orthogonality, const Slice& from, const Slice& to)
    : SliceHomotopy(orthogonality, from, to, CVector::Ones(from.linear.rows()), CVector::Ones(to.linear.rows())) {}

SliceHomotopy::SliceHomotopy(const PolySystem& orthogonality, const Slice& from, const Slice& to,
                             const CVector& from_scale, const CVector& to_scale)
    : ortho_(orthogonality), from_(from), to_(to), from_scale_(from_scale), to_scale_(to_scale) {
  if (from_scale.size() != from.linear.rows() || to_scale.size() != to.linear.rows()) {
    throw std::invalid_argument("SliceHomotopy: scale vector has wrong length");
  }
  if (from.linear.rows() != to.linear.rows() || from.linear.cols() != to.linear.cols() ||
      static_cast<std::size_t>(from.linear.cols()) != orthogonality.variables() ||
      orthogonality.size() + static_cast<std::size_t>(from.linear.rows()) != orthogonality.variables()) {
    throw std::invalid_argument("SliceHomotopy: incompatible shapes");
  }
}

void SliceHomotopy::evaluate(const CVector& x, double t, CVector& h, CMatrix& hx, CVector& ht) const {
  const auto q = static_cast<Eigen::Index>(ortho_.size());
  const auto d = static_cast<Eigen::Index>(dim());
  const Eigen::Index k = d - q;
  thread_local CVector f, lf, lt;
  thread_local CMatrix fx;
  ortho_.evaluate(x, f, fx);
  h.resize(d);
  hx.resize(d, d);
  ht.setZero(d);
  h.head(q) = f;
  hx.topRows(q) = fx;
  hx.bottomRows(k) = t * (from_scale_.asDiagonal() * from_.linear) + (1.0 - t) * (to_scale_.asDiagonal() * to_.linear);
  lf.noalias() = from_.linear * x;
  lf += from_.constant;
  lf = lf.cwiseProduct(from_scale_);
  lt.noalias() = to_.linear * x;
  lt += to_.constant;
  lt = lt.cwiseProduct(to_scale_);
  h.tail(k) = t * lf + (1.0 - t) * lt;
  ht.tail(k) = lf - lt;
}

namespace {

// One attempt: track every point along the legs; the detour (if any) is
// derived from `attempt`.
MoveResult move_attempt(const WitnessSet& ws, const PolySystem& ortho, const Slice& target,
                        const TrackerSettings& settings, int attempt) {
  std::vector<const Slice*> legs{&ws.slice};
  Slice detour;
  if (target.real_only || ws.slice.real_only || attempt > 0) {
    detour = random_slice(ws.n, mix64(target.seed ^ 0x5bd1e995ULL ^ ws.slice.seed) + static_cast<std::uint64_t>(attempt));
    legs.push_back(&detour);
  }
  legs.push_back(&target);

  std::vector<PathResult> results(ws.points.size());
  parallel_for(ws.points.size(), settings.threads, [&](std::size_t i) {
    PathResult r;
    r.status = PathStatus::Converged;
    r.endpoint = ws.points[i];
    for (std::size_t leg = 0; leg + 1 < legs.size(); ++leg) {
      SliceHomotopy h(ortho, *legs[leg], *legs[leg + 1]);
      r = track(h, r.endpoint, settings);
      if (r.status != PathStatus::Converged) break;
    }
    results[i] = std::move(r);
  });

  MoveResult out;
  out.witness.n = ws.n;
  out.witness.slice = target;
  out.witness.tolerance = ws.tolerance;
  std::vector<CVector> pts;
  for (const auto& r : results) {
    if (r.status == PathStatus::Converged) {
      pts.push_back(r.endpoint);
    } else {
      ++out.failures;
    }
  }
  const std::size_t landed = pts.size();
  out.witness.points = deduplicate(std::move(pts), settings.separation_tolerance);
  out.failures += landed - out.witness.points.size();
  return out;
}

}  // namespace

MoveResult move_slice(const WitnessSet& ws, const Slice& target, const TrackerSettings& settings) {
  settings.validate();
  const PolySystem ortho = orthogonality_system(ws.n);
  MoveResult best;
  for (int attempt = 0; attempt < kMoveAttempts; ++attempt) {
    MoveResult r = move_attempt(ws, ortho, target, settings, attempt);
    r.attempts = attempt + 1;
    if (r.failures == 0) return r;
    if (attempt == 0 || r.failures < best.failures) best = std::move(r);
  }
  best.attempts = kMoveAttempts;
  return best;
}

std::size_t real_count(const WitnessSet& ws, double tol) {
  std::size_t c = 0;
  for (const auto& p : ws.points) {
    bool real = true;
    for (Eigen::Index i = 0; i < p.size() && real; ++i) real = std::abs(p[i].imag()) < tol;
    if (real) ++c;
  }
  return c;
}

}  // namespace orthodeg::numeric
