#pragma once

// Numerical count of the critical points (R, y) of
//   minimize C . (R R^T)  subject to  A_i . (R R^T) = b_i,
// i.e. solutions of (C - sum y_i A_i) R R^T = 0, A_i . (R R^T) = b_i,
// on random rational data.

#include <cstdint>
#include <vector>

#include "orthodeg/poly_system.hpp"
#include "orthodeg/tracker.hpp"

namespace orthodeg::numeric {

struct SdpInstance {
  int m = 0;
  int n = 0;
  int r = 0;
  Eigen::MatrixXd c;               // symmetric n x n
  std::vector<Eigen::MatrixXd> a;  // m symmetric n x n
  Eigen::VectorXd b;               // m

  std::size_t variables() const { return static_cast<std::size_t>(n * r + m); }
};

/// Random symmetric data with entries p/q, |p| <= 9, 1 <= q <= 9.
SdpInstance random_sdp_instance(int m, int n, int r, std::uint64_t seed);

/// Variables: R row-major (index a*r + k), then y_1..y_m. Returns the n^2
/// stationarity equations followed by the m constraints, followed by
/// r(r-1)/2 random affine cuts on R that reduce each O(r) fiber to deg O(r)
/// points (no cuts when r = 1).
PolySystem sdp_lagrange_system(const SdpInstance& inst, std::uint64_t seed);

/// Square subsystem: random combinations of the stationarity equations, then
/// the constraints and cuts unchanged.
PolySystem square_up(const PolySystem& full, const SdpInstance& inst, std::uint64_t seed);

struct SdpOracleResult {
  std::size_t solutions = 0;
  std::vector<CVector> points;
  std::size_t paths = 0;
  std::size_t failed = 0;
  std::size_t rank_deficient = 0;  // endpoints with rank(R) < r, not counted
  bool degraded = false;
};

inline constexpr double kSdpResidualFilter = 1e-6;
inline constexpr double kSdpRankFloor = 1e-6;

/// Counts endpoints that satisfy the unsquared system to kSdpResidualFilter
/// and whose R has smallest singular value >= kSdpRankFloor.
/// Requires n*r + m <= 10.
SdpOracleResult sdp_critical_solve(int m, int n, int r, std::uint64_t seed, const TrackerSettings& settings);

}  // namespace orthodeg::numeric
