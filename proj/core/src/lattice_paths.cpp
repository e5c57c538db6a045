#include "orthodeg/lattice_paths.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace orthodeg::lattice {

std::vector<LatticePoint> LatticePath::vertices() const {
  std::vector<LatticePoint> out{start};
  LatticePoint p = start;
  for (char c : steps) {
    if (c == 'N') {
      ++p.y;
    } else if (c == 'E') {
      ++p.x;
    } else {
      throw std::invalid_argument("LatticePath: bad step character");
    }
    out.push_back(p);
  }
  return out;
}

std::pair<std::vector<LatticePoint>, std::vector<LatticePoint>> endpoints(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("endpoints: n must be >= 2");
  std::vector<LatticePoint> a, b;
  for (std::int64_t i = 1; i <= n / 2; ++i) {
    a.push_back({2 * i - n, 0});
    b.push_back({0, n - 2 * i});
  }
  return {a, b};
}

BigInt count_paths(LatticePoint from, LatticePoint to) {
  const std::int64_t dx = to.x - from.x;
  const std::int64_t dy = to.y - from.y;
  if (dx < 0 || dy < 0) return 0;
  return binomial(dx + dy, dx);
}

IntMatrix path_count_matrix(std::int64_t n) {
  const auto [a, b] = endpoints(n);
  IntMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = count_paths(a[i], b[j]);
  return m;
}

BigInt count_via_determinant(std::int64_t n) { return det_exact(path_count_matrix(n)); }

namespace {

// Occupancy grid over the box [-(n-2), 0] x [0, n-2] containing every path.
class Grid {
 public:
  explicit Grid(std::int64_t n) : lo_x_(-(n - 2)), side_(n - 1), used_(side_ * side_, 0) {}

  bool inside(LatticePoint p) const {
    return p.x >= lo_x_ && p.x <= 0 && p.y >= 0 && p.y < side_;
  }
  char& at(LatticePoint p) { return used_[(p.x - lo_x_) * side_ + p.y]; }

 private:
  std::int64_t lo_x_;
  std::int64_t side_;
  std::vector<char> used_;
};

class Enumerator {
 public:
  Enumerator(std::int64_t n, std::vector<LatticePoint> starts, std::vector<LatticePoint> ends,
             const std::function<void(const PathSystem&)>* sink)
      : grid_(n), starts_(std::move(starts)), ends_(std::move(ends)), sink_(sink) {
    current_.resize(starts_.size());
  }

  // Count systems whose first path is fixed to `first` (already validated).
  std::uint64_t run_with_first(const LatticePath& first) {
    for (const auto& v : first.vertices()) grid_.at(v) = 1;
    current_[0] = first;
    count_ = 0;
    place(1);
    for (const auto& v : first.vertices()) grid_.at(v) = 0;
    return count_;
  }

  std::uint64_t run_all() {
    count_ = 0;
    place(0);
    return count_;
  }

  // All monotone paths for path index k given current occupancy.
  void each_path(std::size_t k, const std::function<void(const std::string&)>& fn) {
    std::string steps;
    walk(starts_[k], ends_[k], steps, fn);
  }

 private:
  void place(std::size_t k) {
    if (k == starts_.size()) {
      ++count_;
      if (sink_ != nullptr) (*sink_)(current_);
      return;
    }
    each_path(k, [&](const std::string& steps) {
      current_[k] = LatticePath{starts_[k], ends_[k], steps};
      place(k + 1);
    });
  }

  void walk(LatticePoint p, LatticePoint goal, std::string& steps,
            const std::function<void(const std::string&)>& fn) {
    if (!grid_.inside(p) || p.x > goal.x || p.y > goal.y) return;
    char& cell = grid_.at(p);
    if (cell != 0) return;
    cell = 1;
    if (p == goal) {
      fn(steps);
    } else {
      steps.push_back('N');
      walk({p.x, p.y + 1}, goal, steps, fn);
      steps.back() = 'E';
      walk({p.x + 1, p.y}, goal, steps, fn);
      steps.pop_back();
    }
    cell = 0;
  }

  Grid grid_;
  std::vector<LatticePoint> starts_;
  std::vector<LatticePoint> ends_;
  const std::function<void(const PathSystem&)>* sink_;
  PathSystem current_;
  std::uint64_t count_ = 0;
};

void check_request(std::int64_t n, const EnumerationOptions& opts) {
  if (n < 2) throw std::invalid_argument("enumerate_nonintersecting: n must be >= 2");
  if (n > opts.cap) {
    throw std::invalid_argument("enumerate_nonintersecting: n = " + std::to_string(n) +
                                " exceeds the enumeration cap " + std::to_string(opts.cap));
  }
}

std::vector<LatticePoint> paired_ends(std::int64_t n, const EnumerationOptions& opts) {
  auto [a, b] = endpoints(n);
  if (opts.pairing.empty()) return b;
  if (opts.pairing.size() != b.size()) {
    throw std::invalid_argument("enumerate_nonintersecting: pairing has wrong length");
  }
  std::vector<std::size_t> sorted = opts.pairing;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw std::invalid_argument("enumerate_nonintersecting: pairing is not a permutation");
  }
  std::vector<LatticePoint> ends;
  for (std::size_t i = 0; i < b.size(); ++i) ends.push_back(b[opts.pairing[i]]);
  return ends;
}

}  // namespace

BigInt enumerate_nonintersecting(std::int64_t n,
                                 const std::function<void(const PathSystem&)>& sink,
                                 const EnumerationOptions& opts) {
  check_request(n, opts);
  Enumerator e(n, endpoints(n).first, paired_ends(n, opts), &sink);
  return BigInt(static_cast<unsigned long>(e.run_all()));
}

EnumerationResult enumerate_nonintersecting(std::int64_t n, bool emit,
                                            const EnumerationOptions& opts) {
  check_request(n, opts);
  const auto starts = endpoints(n).first;
  const auto ends = paired_ends(n, opts);

  // Partition the work by the choice of the first (outermost) path.
  std::vector<LatticePath> firsts;
  {
    Enumerator probe(n, starts, ends, nullptr);
    probe.each_path(0, [&](const std::string& s) {
      firsts.push_back(LatticePath{starts[0], ends[0], s});
    });
  }

  struct Partial {
    std::uint64_t count = 0;
    std::vector<PathSystem> systems;
  };
  auto work = [&](std::size_t begin, std::size_t stride) {
    std::vector<std::pair<std::size_t, Partial>> out;
    std::vector<PathSystem> bucket;
    std::function<void(const PathSystem&)> collect = [&](const PathSystem& s) {
      bucket.push_back(s);
    };
    Enumerator e(n, starts, ends, emit ? &collect : nullptr);
    for (std::size_t i = begin; i < firsts.size(); i += stride) {
      bucket.clear();
      Partial p;
      p.count = e.run_with_first(firsts[i]);
      if (emit) p.systems = bucket;
      out.emplace_back(i, std::move(p));
    }
    return out;
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(firsts.size())));
  std::vector<Partial> parts(firsts.size());
  if (workers <= 1) {
    for (auto& [i, p] : work(0, 1)) parts[i] = std::move(p);
  } else {
    std::vector<std::future<std::vector<std::pair<std::size_t, Partial>>>> futs;
    for (unsigned w = 0; w < workers; ++w) futs.push_back(std::async(std::launch::async, work, w, workers));
    for (auto& f : futs)
      for (auto& [i, p] : f.get()) parts[i] = std::move(p);
  }

  EnumerationResult result;
  std::uint64_t total = 0;
  for (auto& p : parts) {
    total += p.count;
    if (emit) {
      for (auto& s : p.systems) result.systems.push_back(std::move(s));
    }
  }
  result.count = BigInt(static_cast<unsigned long>(total));
  return result;
}

bool is_valid_system(std::int64_t n, const PathSystem& system) {
  const auto [a, b] = endpoints(n);
  if (system.size() != a.size()) return false;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const LatticePath& path = system[i];
    if (!(path.start == a[i]) || !(path.end == b[i])) return false;
    std::vector<LatticePoint> vs;
    try {
      vs = path.vertices();
    } catch (const std::invalid_argument&) {
      return false;
    }
    if (!(vs.back() == path.end)) return false;
    for (const auto& v : vs) {
      if (!seen.insert({v.x, v.y}).second) return false;
    }
  }
  return true;
}

std::string to_json_line(const PathSystem& system) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : system) arr.push_back(p.steps);
  return arr.dump();
}

}  // namespace orthodeg::lattice
