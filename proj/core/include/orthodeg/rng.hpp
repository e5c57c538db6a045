#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

namespace orthodeg {

/// SplitMix64 generator. Named sub-streams are derived from a master seed so
/// that each consumer (slices, gamma, loops, census samples) is replayable
/// independently of the others.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng stream(std::uint64_t master, std::string_view name, std::uint64_t index = 0);

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform in the unit square [0,1) x [0,1) of the complex plane.
  std::complex<double> unit_square();

  /// Uniform on the unit circle.
  std::complex<double> unit_circle();

 private:
  std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t x);

}  // namespace orthodeg
