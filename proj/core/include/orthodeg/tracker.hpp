#pragma once

// Predictor-corrector path tracking for homotopies H(x, t), followed from
// t = 1 (solved start) to t = 0 (target).

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orthodeg/poly_system.hpp"

namespace orthodeg::numeric {

struct TrackerSettings {
  double initial_step = 0.02;
  double min_step = 1e-14;
  double max_step = 0.1;
  // Newton updates must shrink below corrector_tolerance * (1 + |x|).
  double corrector_tolerance = 1e-9;
  int max_corrector_iterations = 3;
  double divergence_threshold = 1e8;
  double endpoint_residual_tolerance = 1e-9;
  double separation_tolerance = 1e-6;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  /// Throws std::invalid_argument when a tolerance is non-positive or
  /// min_step >= initial_step.
  void validate() const;

  /// Halved steps and a stricter corrector, used when re-running paths.
  TrackerSettings tightened() const;
};

enum class PathStatus { Converged, DivergedToInfinity, TrackingFailed };

std::string to_string(PathStatus s);

struct PathResult {
  PathStatus status = PathStatus::TrackingFailed;
  CVector endpoint;  // last iterate; meaningful when converged
  double residual = 0.0;
  double final_t = 1.0;
  std::size_t steps = 0;
  std::size_t rejected_steps = 0;
  int final_newton_iterations = 0;
};

/// Square homotopy H: C^n x [0,1] -> C^n with its partial derivatives.
class Homotopy {
 public:
  virtual ~Homotopy() = default;
  virtual std::size_t dim() const = 0;
  virtual void evaluate(const CVector& x, double t, CVector& h, CMatrix& hx, CVector& ht) const = 0;
};

/// (1 - t) target + t gamma start.
class StraightLineHomotopy final : public Homotopy {
 public:
  StraightLineHomotopy(const PolySystem& start, const PolySystem& target, Complex gamma);
  std::size_t dim() const override { return target_.size(); }
  void evaluate(const CVector& x, double t, CVector& h, CMatrix& hx, CVector& ht) const override;

 private:
  const PolySystem& start_;
  const PolySystem& target_;
  Complex gamma_;
};

PathResult track(const Homotopy& h, const CVector& start_point, const TrackerSettings& settings);

/// Convex homotopy between two explicit systems with the gamma multiplier.
PathResult track(const PolySystem& start_system, const PolySystem& target_system,
                 const CVector& start_point, Complex gamma, const TrackerSettings& settings);

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

/// Lexicographic order on (re, im) of successive coordinates.
bool lex_less(const CVector& a, const CVector& b);

double max_abs_diff(const CVector& a, const CVector& b);

/// Sorts lexicographically, then keeps the first of every cluster of points
/// within `separation` in the max norm.
std::vector<CVector> deduplicate(std::vector<CVector> points, double separation);

struct TotalDegreeStart {
  PolySystem system;  // x_i^{d_i} - 1
  std::vector<std::uint32_t> degrees;
  std::size_t path_count = 0;

  CVector start_point(std::size_t index) const;
};

/// Standard total-degree start system for a square target system.
TotalDegreeStart total_degree_start(const PolySystem& target);

struct SolveReport {
  std::vector<PathResult> paths;
  std::vector<CVector> solutions;  // converged, deduplicated, sorted
  std::size_t converged = 0;
  std::size_t diverged = 0;
  std::size_t failed = 0;
  std::size_t retracked = 0;
  bool degraded = false;  // more than 1% of paths failed
};

/// Tracks every total-degree start point to the target. Paths that fail or
/// land on an already-claimed endpoint are re-tracked (same gamma, up to two
/// rounds) with tightened step control.
SolveReport solve_total_degree(const PolySystem& target, const TrackerSettings& settings);

/// Newton refinement on a square system; returns the iteration count used.
int newton_refine(const PolySystem& system, CVector& x, int max_iterations, double tolerance);

}  // namespace orthodeg::numeric
