#pragma once

// Witness sets for O(n) and SO(n): the orthogonality equations M M^T = Id cut
// by C(n,2) affine hyperplanes in the n^2 matrix entries.

#include <cstdint>
#include <vector>

#include "orthodeg/poly_system.hpp"
#include "orthodeg/tracker.hpp"

namespace orthodeg::numeric {

/// The n(n+1)/2 upper-triangular entries of M M^T - Id in the row-major
/// entries x_{n*i+j} = M_{ij}. The determinant equation is omitted.
PolySystem orthogonality_system(int n);

/// C(n,2) affine forms linear * x + constant on C^{n^2}.
struct Slice {
  int n = 0;
  std::uint64_t seed = 0;
  bool real_only = false;
  CMatrix linear;    // C(n,2) x n^2
  CVector constant;  // C(n,2)

  std::size_t forms() const { return static_cast<std::size_t>(linear.rows()); }
  CVector evaluate(const CVector& x) const { return linear * x + constant; }
  /// Row-major (n^2 + 1) numbers per form, the constant last.
  std::vector<Complex> coefficients() const;
  static Slice from_coefficients(int n, std::uint64_t seed, const std::vector<Complex>& coeffs);
};

std::size_t slice_form_count(int n);

/// Coefficients uniform in the unit square (or in [0,1) when real_only),
/// deterministic in the seed.
Slice random_slice(int n, std::uint64_t seed, bool real_only = false);

/// Random slice whose constants are adjusted so that `point` lies on it.
Slice slice_through(const CVector& point, int n, std::uint64_t seed);

/// Orthogonality equations followed by the slice forms: square, n^2 x n^2.
PolySystem sliced_system(int n, const Slice& slice);

CVector identity_point(int n);

/// det of the n x n matrix stored row-major in x.
Complex determinant(const CVector& x, int n);

struct WitnessSet {
  int n = 0;
  Slice slice;
  std::vector<CVector> points;
  double tolerance = 1e-9;

  /// Largest absolute residual of the orthogonality and slice equations over
  /// all points.
  double max_residual() const;
};

struct TotalDegreeSolve {
  WitnessSet witness;  // the O(n) witness set
  std::size_t paths = 0;
  std::size_t converged = 0;
  std::size_t diverged = 0;
  std::size_t failed = 0;
  std::size_t retracked = 0;
  bool degraded = false;
};

/// Total-degree homotopy on the sliced system (2^{n(n+1)/2} paths).
/// Rejects n outside 2..4.
TotalDegreeSolve total_degree_solve(int n, const Slice& slice, const TrackerSettings& settings);

struct ComponentSplit {
  std::vector<CVector> so_points;
  std::vector<CVector> other_points;
  std::vector<std::size_t> suspect;  // indices into the input with ||det| - 1| > 0.1
};

/// Partition by the sign of Re(det).
ComponentSplit split_components(const WitnessSet& ws);

/// Linear interpolation of slice coefficients: `from` at t = 1, `to` at t = 0.
/// Optional per-form scalars rescale each endpoint form (same zero set) and
/// bend the path through parameter space.
class SliceHomotopy final : public Homotopy {
 public:
  SliceHomotopy(const PolySystem& orthogonality, const Slice& from, const Slice& to);
  SliceHomotopy(const PolySystem& orthogonality, const Slice& from, const Slice& to,
                const CVector& from_scale, const CVector& to_scale);
  std::size_t dim() const override { return static_cast<std::size_t>(from_.linear.cols()); }
  void evaluate(const CVector& x, double t, CVector& h, CMatrix& hx, CVector& ht) const override;

 private:
  const PolySystem& ortho_;
  const Slice& from_;
  const Slice& to_;
  CVector from_scale_;
  CVector to_scale_;
};

struct MoveResult {
  WitnessSet witness;
  std::size_t failures = 0;  // paths that did not converge or collided
  int attempts = 0;
};

inline constexpr int kMoveAttempts = 3;

/// Moves every witness point to the target slice. Real targets are reached
/// through a random complex intermediate slice; when paths are lost the move
/// is repeated through a fresh intermediate slice, up to kMoveAttempts times,
/// and the attempt with the fewest failures is returned.
MoveResult move_slice(const WitnessSet& ws, const Slice& target, const TrackerSettings& settings);

/// Points whose every coordinate has |imag| < tol.
std::size_t real_count(const WitnessSet& ws, double tol = 1e-3);

}  // namespace orthodeg::numeric
