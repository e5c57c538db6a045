#include "orthodeg/rng.hpp"

#include <cmath>
#include <numbers>

namespace orthodeg {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng Rng::stream(std::uint64_t master, std::string_view name, std::uint64_t index) {
  // FNV-1a over the stream name, folded with the master seed and index.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return Rng(mix64(mix64(master ^ h) + index));
}

std::uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::complex<double> Rng::unit_square() {
  const double re = uniform01();
  const double im = uniform01();
  return {re, im};
}

std::complex<double> Rng::unit_circle() {
  const double theta = 2.0 * std::numbers::pi * uniform01();
  return std::polar(1.0, theta);
}

}  // namespace orthodeg
