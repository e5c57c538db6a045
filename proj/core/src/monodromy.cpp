#include "orthodeg/monodromy.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "orthodeg/rng.hpp"

namespace orthodeg::numeric {

namespace {
// Intermediate loop slices: coefficients uniform in the square centered at 0
// of side 2.
Slice loop_node(int n, Rng& rng) {
  Slice s = random_slice(n, rng.next_u64());
  const Complex shift(1.0, 1.0);
  s.linear = (2.0 * s.linear).array() - shift;
  s.constant = (2.0 * s.constant).array() - shift;
  return s;
}
}  // namespace

MonodromyResult monodromy_populate(int n, const CVector& seed_point, const Slice& base,
                                   const TrackerSettings& settings, const MonodromySettings& mono) {
  settings.validate();
  const PolySystem ortho = orthogonality_system(n);
  const PolySystem base_system = sliced_system(n, base);
  if (base_system.max_residual(seed_point) > 1e-8) {
    throw std::invalid_argument("monodromy_populate: seed point does not lie on the sliced variety");
  }
  const double seed_sign = determinant(seed_point, n).real() > 0 ? 1.0 : -1.0;

  MonodromyResult out;
  out.witness.n = n;
  out.witness.slice = base;
  out.witness.tolerance = settings.endpoint_residual_tolerance;
  out.witness.points.push_back(seed_point);

  auto known = [&](const CVector& p) {
    for (const auto& q : out.witness.points)
      if (max_abs_diff(p, q) < settings.separation_tolerance) return true;
    return false;
  };

  int idle = 0;
  while (idle < mono.idle_loops_to_stop && out.loops < static_cast<std::size_t>(mono.max_loops)) {
    Rng rng = Rng::stream(settings.seed, "monodromy-loop", out.loops);
    const Slice b = loop_node(n, rng);
    const Slice c = loop_node(n, rng);
    const std::array<const Slice*, 4> legs{&base, &b, &c, &base};
    const auto forms = static_cast<Eigen::Index>(base.forms());
    std::array<CVector, 6> scales;
    for (auto& sc : scales) {
      sc.resize(forms);
      for (Eigen::Index f = 0; f < forms; ++f) sc[f] = rng.unit_circle();
    }

    const std::vector<CVector> current = out.witness.points;
    std::vector<PathResult> results(current.size());
    parallel_for(current.size(), settings.threads, [&](std::size_t i) {
      PathResult r;
      r.status = PathStatus::Converged;
      r.endpoint = current[i];
      for (std::size_t leg = 0; leg + 1 < legs.size(); ++leg) {
        SliceHomotopy h(ortho, *legs[leg], *legs[leg + 1], scales[2 * leg], scales[2 * leg + 1]);
        r = track(h, r.endpoint, settings);
        if (r.status != PathStatus::Converged) break;
      }
      results[i] = std::move(r);
    });

    std::vector<CVector> fresh;
    for (const auto& r : results) {
      if (r.status != PathStatus::Converged) {
        ++out.path_failures;
        continue;
      }
      const Complex d = determinant(r.endpoint, n);
      if (std::abs(d - seed_sign) > 1e-6 || base_system.max_residual(r.endpoint) > settings.endpoint_residual_tolerance) {
        ++out.rejected_points;
        continue;
      }
      if (!known(r.endpoint)) fresh.push_back(r.endpoint);
    }
    fresh = deduplicate(std::move(fresh), settings.separation_tolerance);
    ++out.loops;
    if (fresh.empty()) {
      ++idle;
    } else {
      idle = 0;
      for (auto& p : fresh) out.witness.points.push_back(std::move(p));
    }
  }
  out.witness.points = deduplicate(std::move(out.witness.points), settings.separation_tolerance);
  return out;
}

MonodromyResult monodromy_from_identity(int n, const TrackerSettings& settings, const MonodromySettings& mono) {
  const CVector id = identity_point(n);
  const Slice base = slice_through(id, n, Rng::stream(settings.seed, "monodromy-base").next_u64());
  return monodromy_populate(n, id, base, settings, mono);
}

}  // namespace orthodeg::numeric
