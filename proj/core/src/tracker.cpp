#include "orthodeg/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "orthodeg/rng.hpp"

namespace orthodeg::numeric {

void TrackerSettings::validate() const {
  if (!(initial_step > 0 && min_step > 0 && max_step > 0 && corrector_tolerance > 0 &&
        divergence_threshold > 0 && endpoint_residual_tolerance > 0 && separation_tolerance > 0)) {
    throw std::invalid_argument("TrackerSettings: tolerances and step sizes must be positive");
  }
  if (min_step >= initial_step) throw std::invalid_argument("TrackerSettings: min_step must be < initial_step");
  if (max_corrector_iterations < 1) throw std::invalid_argument("TrackerSettings: need >= 1 corrector iteration");
}

TrackerSettings TrackerSettings::tightened() const {
  TrackerSettings s = *this;
  s.initial_step = initial_step / 8;
  s.max_step = max_step / 8;
  s.corrector_tolerance = corrector_tolerance / 10;
  return s;
}

std::string to_string(PathStatus s) {
  switch (s) {
    case PathStatus::Converged: return "converged";
    case PathStatus::DivergedToInfinity: return "diverged_to_infinity";
    case PathStatus::TrackingFailed: return "tracking_failed";
  }
  return "?";
}

StraightLineHomotopy::StraightLineHomotopy(const PolySystem& start, const PolySystem& target, Complex gamma)
    : start_(start), target_(target), gamma_(gamma) {
  if (start.size() != target.size() || start.variables() != target.variables() ||
      target.size() != target.variables()) {
    throw std::invalid_argument("StraightLineHomotopy: systems must be square and of equal shape");
  }
}

void StraightLineHomotopy::evaluate(const CVector& x, double t, CVector& h, CMatrix& hx, CVector& ht) const {
  thread_local CVector f, g;
  thread_local CMatrix fx, gx;
  target_.evaluate(x, f, fx);
  start_.evaluate(x, g, gx);
  const Complex a = 1.0 - t;
  const Complex b = t * gamma_;
  h = a * f + b * g;
  hx = a * fx + b * gx;
  ht = gamma_ * g - f;
}

namespace {

constexpr double kEndgameStart = 1e-2;
constexpr double kEscapeTime = 1e-5;
constexpr double kStallTime = 1e-4;
constexpr double kEscapeGrowth = 100.0;
constexpr double kStallGrowth = 10.0;
// Above this t a step covers at most half the remaining interval, so a path
// heading to infinity cannot jump onto a finite endpoint in one step.
constexpr double kFinalStepTime = 1e-8;

double inf_norm(const CVector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

bool all_finite(const CVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
  }
  return true;
}

struct Workspace {
  CVector h, ht, dx, tmp;
  CMatrix hx;
  Eigen::PartialPivLU<CMatrix> lu;
};

// dx/dt along the path: Hx v = -Ht.
bool velocity(const Homotopy& hom, const CVector& x, double t, Workspace& w, CVector& v) {
  hom.evaluate(x, t, w.h, w.hx, w.ht);
  w.lu.compute(w.hx);
  v.noalias() = w.lu.solve(w.ht);
  v = -v;
  return all_finite(v);
}

enum class Correction { Ok, Failed };

Correction correct(const Homotopy& hom, CVector& x, double t, const TrackerSettings& s, Workspace& w,
                   int* iterations = nullptr) {
  double prev = 0.0;
  for (int k = 0; k < s.max_corrector_iterations; ++k) {
    hom.evaluate(x, t, w.h, w.hx, w.ht);
    w.lu.compute(w.hx);
    w.dx.noalias() = w.lu.solve(w.h);
    if (!all_finite(w.dx)) return Correction::Failed;
    x -= w.dx;
    const double nd = inf_norm(w.dx);
    if (iterations != nullptr) *iterations = k + 1;
    if (nd <= s.corrector_tolerance * (1.0 + inf_norm(x))) return Correction::Ok;
    if (k > 0 && nd > 0.5 * prev) return Correction::Failed;
    prev = nd;
  }
  return Correction::Failed;
}

}  // namespace

PathResult track(const Homotopy& hom, const CVector& start_point, const TrackerSettings& s) {
  PathResult r;
  r.endpoint = start_point;
  const auto n = static_cast<Eigen::Index>(hom.dim());
  if (start_point.size() != n) throw std::invalid_argument("track: start point has wrong dimension");

  Workspace w;
  CVector x = start_point, xp(n), k1(n), k2(n), k3(n), k4(n);
  double t = 1.0;
  double step = s.initial_step;
  int successes = 0;
  constexpr std::size_t kMaxSteps = 200000;
  // Norm when the path first reaches t <= kEndgameStart; endpoints at
  // infinity are recognized by growth past this reference.
  double reference_norm = -1.0;

  while (t > 0.0) {
    if (inf_norm(x) > s.divergence_threshold) {
      r.status = PathStatus::DivergedToInfinity;
      r.endpoint = x;
      r.final_t = t;
      return r;
    }
    if (r.steps + r.rejected_steps > kMaxSteps) break;
    const double dt = t > kFinalStepTime ? std::min(step, 0.5 * t) : t;
    const double t1 = dt >= t ? 0.0 : t - dt;

    // Classical fourth-order Runge-Kutta predictor, integrating t downward.
    bool ok = velocity(hom, x, t, w, k1);
    if (ok) {
      w.tmp = x - 0.5 * dt * k1;
      ok = velocity(hom, w.tmp, t - 0.5 * dt, w, k2);
    }
    if (ok) {
      w.tmp = x - 0.5 * dt * k2;
      ok = velocity(hom, w.tmp, t - 0.5 * dt, w, k3);
    }
    if (ok) {
      w.tmp = x - dt * k3;
      ok = velocity(hom, w.tmp, t1, w, k4);
    }
    if (ok) {
      xp = x - (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      ok = correct(hom, xp, t1, s, w) == Correction::Ok;
    }

    if (ok) {
      x = xp;
      t = t1;
      ++r.steps;
      if (reference_norm < 0 && t <= kEndgameStart) reference_norm = inf_norm(x);
      if (t > 0.0 && t <= kEscapeTime && inf_norm(x) > kEscapeGrowth * (1.0 + reference_norm)) {
        r.status = PathStatus::DivergedToInfinity;
        r.endpoint = x;
        r.final_t = t;
        return r;
      }
      if (++successes >= 3) {
        step = std::min(2.0 * step, s.max_step);
        successes = 0;
      }
    } else {
      ++r.rejected_steps;
      successes = 0;
      step *= 0.5;
      if (step < s.min_step) break;
    }
  }

  r.endpoint = x;
  r.final_t = t;
  if (t > 0.0) {
    // Stalling close to t = 0 after clear growth: the path is escaping to
    // infinity too slowly for the norm threshold to catch.
    const bool escaping = t <= kStallTime && reference_norm >= 0 &&
                          inf_norm(x) > kStallGrowth * (1.0 + reference_norm);
    r.status = escaping ? PathStatus::DivergedToInfinity : PathStatus::TrackingFailed;
    return r;
  }

  // Endpoint polish at t = 0.
  TrackerSettings polish = s;
  polish.max_corrector_iterations = 8;
  polish.corrector_tolerance = 1e-14;
  int its = 0;
  CVector xe = x;
  correct(hom, xe, 0.0, polish, w, &its);
  if (all_finite(xe)) x = xe;
  hom.evaluate(x, 0.0, w.h, w.hx, w.ht);
  r.endpoint = x;
  r.residual = inf_norm(w.h);
  r.final_newton_iterations = its;
  if (inf_norm(x) > s.divergence_threshold) {
    r.status = PathStatus::DivergedToInfinity;
  } else if (all_finite(x) && r.residual < s.endpoint_residual_tolerance) {
    r.status = PathStatus::Converged;
  } else {
    r.status = PathStatus::TrackingFailed;
  }
  return r;
}

PathResult track(const PolySystem& start_system, const PolySystem& target_system,
                 const CVector& start_point, Complex gamma, const TrackerSettings& settings) {
  StraightLineHomotopy h(start_system, target_system, gamma);
  return track(h, start_point, settings);
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

bool lex_less(const CVector& a, const CVector& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return a.size() < b.size();
}

double max_abs_diff(const CVector& a, const CVector& b) { return inf_norm(a - b); }

std::vector<CVector> deduplicate(std::vector<CVector> points, double separation) {
  std::sort(points.begin(), points.end(), lex_less);
  std::vector<CVector> out;
  for (auto& p : points) {
    bool dup = false;
    for (const auto& q : out) {
      if (max_abs_diff(p, q) < separation) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(p));
  }
  return out;
}

CVector TotalDegreeStart::start_point(std::size_t index) const {
  CVector x(static_cast<Eigen::Index>(degrees.size()));
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const std::uint32_t d = degrees[i];
    const std::size_t k = index % d;
    index /= d;
    x[static_cast<Eigen::Index>(i)] = std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) / d);
  }
  return x;
}

TotalDegreeStart total_degree_start(const PolySystem& target) {
  if (target.size() != target.variables()) throw std::invalid_argument("total_degree_start: system must be square");
  TotalDegreeStart st;
  st.degrees = target.degrees();
  st.system = PolySystem(target.variables());
  st.path_count = 1;
  for (std::uint32_t i = 0; i < st.degrees.size(); ++i) {
    const std::uint32_t d = st.degrees[i];
    if (d == 0) throw std::invalid_argument("total_degree_start: constant polynomial in target");
    Polynomial p;
    p.terms.push_back(Term{1.0, {{i, d}}});
    p.terms.push_back(Term{-1.0, {}});
    st.system.add(std::move(p));
    st.path_count *= d;
  }
  return st;
}

int newton_refine(const PolySystem& system, CVector& x, int max_iterations, double tolerance) {
  CVector f, dx;
  CMatrix j;
  for (int k = 0; k < max_iterations; ++k) {
    system.evaluate(x, f, j);
    dx = j.partialPivLu().solve(f);
    if (!all_finite(dx)) return k;
    x -= dx;
    if (inf_norm(dx) <= tolerance * (1.0 + inf_norm(x))) return k + 1;
  }
  return max_iterations;
}

SolveReport solve_total_degree(const PolySystem& target, const TrackerSettings& settings) {
  settings.validate();
  const TotalDegreeStart start = total_degree_start(target);
  const Complex gamma = Rng::stream(settings.seed, "gamma").unit_circle();
  StraightLineHomotopy hom(start.system, target, gamma);

  SolveReport rep;
  rep.paths.resize(start.path_count);
  parallel_for(start.path_count, settings.threads, [&](std::size_t i) {
    rep.paths[i] = track(hom, start.start_point(i), settings);
  });

  // Re-track failures and every member of an endpoint collision with the same
  // gamma (so the start/end correspondence is unchanged) but finer steps.
  auto suspects = [&] {
    std::vector<std::size_t> out;
    std::vector<std::size_t> conv;
    for (std::size_t i = 0; i < rep.paths.size(); ++i) {
      if (rep.paths[i].status == PathStatus::TrackingFailed) out.push_back(i);
      if (rep.paths[i].status == PathStatus::Converged) conv.push_back(i);
    }
    std::sort(conv.begin(), conv.end(), [&](std::size_t a, std::size_t b) {
      return lex_less(rep.paths[a].endpoint, rep.paths[b].endpoint);
    });
    std::vector<bool> flagged(rep.paths.size(), false);
    for (std::size_t a = 0; a < conv.size(); ++a) {
      for (std::size_t b = a + 1; b < conv.size(); ++b) {
        if (max_abs_diff(rep.paths[conv[a]].endpoint, rep.paths[conv[b]].endpoint) <
            settings.separation_tolerance) {
          flagged[conv[a]] = flagged[conv[b]] = true;
        }
      }
    }
    for (std::size_t i = 0; i < flagged.size(); ++i)
      if (flagged[i]) out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
  };

  TrackerSettings fine = settings;
  for (int round = 0; round < 2; ++round) {
    const auto redo = suspects();
    if (redo.empty()) break;
    fine = fine.tightened();
    rep.retracked += redo.size();
    parallel_for(redo.size(), settings.threads, [&](std::size_t k) {
      rep.paths[redo[k]] = track(hom, start.start_point(redo[k]), fine);
    });
  }

  std::vector<CVector> finite;
  for (const auto& p : rep.paths) {
    switch (p.status) {
      case PathStatus::Converged:
        ++rep.converged;
        finite.push_back(p.endpoint);
        break;
      case PathStatus::DivergedToInfinity: ++rep.diverged; break;
      case PathStatus::TrackingFailed: ++rep.failed; break;
    }
  }
  rep.solutions = deduplicate(std::move(finite), settings.separation_tolerance);
  rep.degraded = rep.failed * 100 > rep.paths.size();
  return rep;
}

}  // namespace orthodeg::numeric
