#include "orthodeg/census.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "orthodeg/rng.hpp"

namespace orthodeg::numeric {

RealCensus real_census(int n, const WitnessSet& base, std::size_t samples, std::uint64_t seed,
                       const TrackerSettings& settings, double real_tolerance) {
  if (samples < 1) throw std::invalid_argument("real_census: samples must be >= 1");
  if (base.n != n) throw std::invalid_argument("real_census: witness set is for a different n");

  TrackerSettings inner = settings;
  inner.threads = 1;
  constexpr std::size_t kFail = static_cast<std::size_t>(-1);
  std::vector<std::size_t> outcome(samples, kFail);
  parallel_for(samples, settings.threads, [&](std::size_t i) {
    const Slice target = random_slice(n, Rng::stream(seed, "census", i).next_u64(), true);
    const MoveResult moved = move_slice(base, target, inner);
    if (moved.failures == 0 && moved.witness.points.size() == base.points.size()) {
      outcome[i] = real_count(moved.witness, real_tolerance);
    }
  });

  RealCensus c;
  c.n = n;
  c.samples = samples;
  c.max_points = base.points.size();
  for (std::size_t v : outcome) {
    if (v == kFail) {
      ++c.fails;
    } else {
      ++c.frequency[v];
    }
  }
  return c;
}

std::string to_csv(const RealCensus& census) {
  std::set<std::size_t> rows;
  for (std::size_t k = 0; k <= census.max_points; k += 2) rows.insert(k);
  for (const auto& [k, v] : census.frequency) rows.insert(k);
  std::ostringstream os;
  os << "real_count,frequency\n";
  for (std::size_t k : rows) {
    const auto it = census.frequency.find(k);
    os << k << ',' << (it == census.frequency.end() ? 0 : it->second) << '\n';
  }
  os << "fail," << census.fails << '\n';
  return os.str();
}

}  // namespace orthodeg::numeric
