#pragma once

// Non-intersecting North/East lattice path systems from
// A(n) = {(2i-n, 0)} to B(n) = {(0, n-2j)}, i, j = 1..floor(n/2).

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "orthodeg/bigint.hpp"
#include "orthodeg/int_matrix.hpp"

namespace orthodeg::lattice {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Monotone path; steps is a string over {'N', 'E'}.
struct LatticePath {
  LatticePoint start;
  LatticePoint end;
  std::string steps;

  std::vector<LatticePoint> vertices() const;
};

using PathSystem = std::vector<LatticePath>;

inline constexpr std::int64_t kDefaultEnumerationCap = 9;

std::pair<std::vector<LatticePoint>, std::vector<LatticePoint>> endpoints(std::int64_t n);

/// Number of North/East paths between two points; 0 when unreachable.
BigInt count_paths(LatticePoint from, LatticePoint to);

IntMatrix path_count_matrix(std::int64_t n);

/// N(n) = det(path_count_matrix(n)).
BigInt count_via_determinant(std::int64_t n);

struct EnumerationOptions {
  std::int64_t cap = kDefaultEnumerationCap;
  unsigned threads = 1;
  // Path i runs from a_i to b_{pairing[i]}; empty means the identity pairing.
  std::vector<std::size_t> pairing;
};

struct EnumerationResult {
  BigInt count = 0;
  std::vector<PathSystem> systems;  // filled only when emitting
};

/// Exhaustive backtracking over vertex-disjoint systems, outermost path first.
/// Throws std::invalid_argument if n < 2 or n exceeds the cap.
EnumerationResult enumerate_nonintersecting(std::int64_t n, bool emit,
                                            const EnumerationOptions& opts = {});

/// Streams each system to the callback in enumeration order (single worker).
BigInt enumerate_nonintersecting(std::int64_t n,
                                 const std::function<void(const PathSystem&)>& sink,
                                 const EnumerationOptions& opts = {});

/// Endpoints match A(n) -> B(n) under the identity pairing, every step is N or
/// E, and no lattice point is shared by two paths.
bool is_valid_system(std::int64_t n, const PathSystem& system);

/// One JSON array of step strings, e.g. ["EEENNN","EN"].
std::string to_json_line(const PathSystem& system);

}  // namespace orthodeg::lattice
