#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "orthodeg/witness.hpp"

namespace orthodeg::numeric {

struct RealCensus {
  int n = 0;
  std::size_t samples = 0;
  std::size_t max_points = 0;             // size of the base witness set
  std::map<std::size_t, std::size_t> frequency;  // real count -> occurrences
  std::size_t fails = 0;
};

/// Moves `base` to `samples` random real slices (sample i uses a slice seeded
/// from (seed, i), so results do not depend on the worker count) and tallies
/// the number of real points, or a fail when any path is lost.
RealCensus real_census(int n, const WitnessSet& base, std::size_t samples, std::uint64_t seed,
                       const TrackerSettings& settings, double real_tolerance = 1e-3);

/// `real_count,frequency` header, one row per even count 0..max_points plus
/// any other observed count, and a final `fail,<k>` row.
std::string to_csv(const RealCensus& census);

}  // namespace orthodeg::numeric
