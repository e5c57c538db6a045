#pragma once

#include <cstdint>

#include "orthodeg/witness.hpp"

namespace orthodeg::numeric {

struct MonodromySettings {
  int idle_loops_to_stop = 10;
  int max_loops = 2000;
};

struct MonodromyResult {
  WitnessSet witness;
  std::size_t loops = 0;
  std::size_t path_failures = 0;
  std::size_t rejected_points = 0;  // landed off the seed's component or off the slice
};

/// Populates the witness set of the component through `seed_point` by
/// tracking every known point around triangle loops base -> B -> C -> base
/// through fresh random slices. Stops after `idle_loops_to_stop` consecutive
/// loops discover nothing new.
MonodromyResult monodromy_populate(int n, const CVector& seed_point, const Slice& base,
                                   const TrackerSettings& settings,
                                   const MonodromySettings& mono = {});

/// Seeds with the identity matrix on a random slice through it.
MonodromyResult monodromy_from_identity(int n, const TrackerSettings& settings,
                                        const MonodromySettings& mono = {});

}  // namespace orthodeg::numeric
