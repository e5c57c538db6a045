#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "orthodeg/census.hpp"
#include "orthodeg/group_degree.hpp"
#include "orthodeg/kazarnovskij.hpp"
#include "orthodeg/lattice_paths.hpp"
#include "orthodeg/monodromy.hpp"
#include "orthodeg/sdp_degree.hpp"
#include "orthodeg/sdp_oracle.hpp"
#include "orthodeg/witness.hpp"
#include "orthodeg/witness_io.hpp"

namespace orthodeg::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace kaz = orthodeg::kazarnovskij;
namespace num = orthodeg::numeric;

struct Options {
  unsigned threads = 1;
  std::optional<double> tolerance;
  bool json = false;
  bool csv = false;

  std::string group;
  std::int64_t size = 0;
  std::string method = "formula";
  std::uint64_t seed = 1;

  std::int64_t m = 0, n = 0, r = 0;
  bool emit = false;
  bool monodromy = false;
  std::size_t samples = 0;
  std::string out_path;
};

// Thrown for arguments that parse but fall outside a route's domain.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

num::TrackerSettings tracker_settings(const Options& o) {
  num::TrackerSettings s;
  s.seed = o.seed;
  s.threads = std::max(1u, o.threads);
  if (o.tolerance) {
    s.corrector_tolerance = *o.tolerance;
    s.endpoint_residual_tolerance = *o.tolerance;
  }
  s.validate();
  return s;
}

std::string group_key(GroupFamily f) { return f == GroupFamily::Sp ? "r" : "n"; }

std::optional<std::pair<kaz::Family, std::int64_t>> kazarnovskij_target(GroupFamily f, std::int64_t k) {
  if (f == GroupFamily::Sp) {
    if (k < 1) return std::nullopt;
    return std::pair{kaz::Family::Sp, k};
  }
  if (k < 2) return std::nullopt;
  if (k % 2 == 0) return std::pair{kaz::Family::SOEven, k / 2};
  return std::pair{kaz::Family::SOOdd, (k - 1) / 2};
}

BigInt kazarnovskij_degree(GroupFamily f, std::int64_t k, kaz::Route route) {
  auto target = kazarnovskij_target(f, k);
  if (!target) throw UsageError("kazarnovskij route needs n >= 2 (SO, O) or r >= 1 (Sp)");
  BigInt d = kaz::degree_via_kazarnovskij(target->first, target->second, route);
  return f == GroupFamily::O ? BigInt(2 * d) : d;
}

BigInt lattice_degree(GroupFamily f, std::int64_t k, unsigned threads) {
  if (f == GroupFamily::Sp) throw UsageError("lattice route applies to SO and O only");
  lattice::EnumerationOptions opts;
  opts.threads = threads;
  const BigInt systems = lattice::enumerate_nonintersecting(k, false, opts).count;
  return pow2(f == GroupFamily::O ? k : k - 1) * systems;
}

BigInt numeric_degree(GroupFamily f, std::int64_t k, const Options& o) {
  if (f == GroupFamily::Sp) throw UsageError("numeric route applies to SO and O only");
  if (k < 2 || k > 4) throw UsageError("numeric route supports 2 <= n <= 4");
  const int n = static_cast<int>(k);
  const num::TrackerSettings s = tracker_settings(o);
  const num::TotalDegreeSolve solve = num::total_degree_solve(n, num::random_slice(n, o.seed), s);
  if (f == GroupFamily::O) return BigInt(static_cast<unsigned long>(solve.witness.points.size()));
  return BigInt(static_cast<unsigned long>(num::split_components(solve.witness).so_points.size()));
}

BigInt degree_by(const std::string& method, GroupFamily f, std::int64_t k, const Options& o) {
  if (method == "formula") return group_degree({f, k});
  if (method == "kazarnovskij-direct") return kazarnovskij_degree(f, k, kaz::Route::Direct);
  if (method == "kazarnovskij-closed") return kazarnovskij_degree(f, k, kaz::Route::Closed);
  if (method == "lattice") return lattice_degree(f, k, o.threads);
  if (method == "numeric") return numeric_degree(f, k, o);
  throw UsageError("unknown method " + method);
}

// Exact routes that apply to the group at default caps.
std::vector<std::string> exact_methods(GroupFamily f, std::int64_t k) {
  std::vector<std::string> methods{"formula"};
  if (auto t = kazarnovskij_target(f, k)) {
    if (t->second <= kaz::kDefaultDirectCap) methods.push_back("kazarnovskij-direct");
    methods.push_back("kazarnovskij-closed");
  }
  if (f != GroupFamily::Sp && k >= 2 && k <= lattice::kDefaultEnumerationCap) methods.push_back("lattice");
  return methods;
}

int cmd_degree(const Options& o, std::ostream& out) {
  const GroupFamily f = parse_group_family(o.group);
  const std::int64_t k = o.size;
  if (k < 1) throw UsageError("group size must be positive");

  if (o.method != "all") {
    const BigInt d = degree_by(o.method, f, k, o);
    if (o.csv) {
      out << "group," << group_key(f) << ",method,degree\n"
          << to_string(f) << ',' << k << ',' << o.method << ',' << to_string(d) << '\n';
    } else {
      out << Json{{"group", to_string(f)}, {group_key(f), k}, {"degree", to_string(d)}, {"method", o.method}}.dump()
          << '\n';
    }
    return kOk;
  }

  std::vector<std::pair<std::string, BigInt>> results;
  for (const auto& method : exact_methods(f, k)) results.emplace_back(method, degree_by(method, f, k, o));
  const bool agree = std::all_of(results.begin(), results.end(),
                                 [&](const auto& p) { return p.second == results.front().second; });
  if (o.csv) {
    out << "group," << group_key(f) << ",method,degree\n";
    for (const auto& [method, d] : results) out << to_string(f) << ',' << k << ',' << method << ',' << to_string(d) << '\n';
  } else {
    Json routes = Json::object();
    for (const auto& [method, d] : results) routes[method] = to_string(d);
    Json doc{{"group", to_string(f)}, {group_key(f), k}};
    if (agree) doc["degree"] = to_string(results.front().second);
    doc["methods"] = std::move(routes);
    doc["agree"] = agree;
    out << doc.dump() << '\n';
  }
  return agree ? kOk : kInternalFailure;
}

int cmd_lattice_count(const Options& o, std::ostream& out) {
  if (o.n < 0) throw UsageError("n must be nonnegative");
  const BigInt count = lattice::count_via_determinant(o.n);
  if (o.csv) {
    out << "n,count\n" << o.n << ',' << to_string(count) << '\n';
  } else {
    out << Json{{"n", o.n}, {"count", to_string(count)}, {"method", "determinant"}}.dump() << '\n';
  }
  return kOk;
}

int cmd_lattice_enumerate(const Options& o, std::ostream& out) {
  lattice::EnumerationOptions opts;
  opts.threads = std::max(1u, o.threads);
  BigInt count;
  if (o.emit) {
    if (o.csv) out << "system,path,steps\n";
    std::size_t index = 0;
    count = lattice::enumerate_nonintersecting(
        o.n,
        [&](const lattice::PathSystem& sys) {
          if (o.csv) {
            for (std::size_t p = 0; p < sys.size(); ++p) out << index << ',' << p << ',' << sys[p].steps << '\n';
          } else {
            out << lattice::to_json_line(sys) << '\n';
          }
          ++index;
        },
        opts);
    if (o.csv) return kOk;
  } else {
    count = lattice::enumerate_nonintersecting(o.n, false, opts).count;
  }
  const BigInt expected = lattice::count_via_determinant(o.n);
  if (o.csv) {
    out << "n,systems,determinant\n" << o.n << ',' << to_string(count) << ',' << to_string(expected) << '\n';
  } else {
    out << Json{{"n", o.n}, {"systems", to_string(count)}, {"determinant", to_string(expected)}}.dump() << '\n';
  }
  return count == expected ? kOk : kInternalFailure;
}

sdp::DeltaQuery delta_query(const Options& o) {
  sdp::DeltaQuery q{o.m, o.n, o.r};
  q.validate();
  return q;
}

int cmd_sdp_delta(const Options& o, std::ostream& out) {
  const sdp::DeltaQuery q = delta_query(o);
  const std::string d = to_string(sdp::delta(q));
  if (o.csv) {
    out << "m,n,r,delta\n" << q.m << ',' << q.n << ',' << q.r << ',' << d << '\n';
  } else {
    out << Json{{"m", q.m}, {"n", q.n}, {"r", q.r}, {"delta", d}}.dump() << '\n';
  }
  return kOk;
}

int cmd_sdp_critical(const Options& o, std::ostream& out) {
  const sdp::DeltaQuery q = delta_query(o);
  if (q.r < 1) throw UsageError("critical-count needs r >= 1");
  const std::string d = to_string(sdp::delta(q));
  const std::string c = to_string(sdp::critical_count(q));
  if (o.csv) {
    out << "m,n,r,delta,critical_points\n" << q.m << ',' << q.n << ',' << q.r << ',' << d << ',' << c << '\n';
  } else {
    out << Json{{"m", q.m}, {"n", q.n}, {"r", q.r}, {"delta", d}, {"critical_points", c}}.dump() << '\n';
  }
  return kOk;
}

int cmd_sdp_oracle(const Options& o, std::ostream& out) {
  const sdp::DeltaQuery q = delta_query(o);
  if (q.r < 1) throw UsageError("oracle needs r >= 1");
  if (q.n * q.r + q.m > 10) throw UsageError("oracle limited to n*r + m <= 10");
  const num::SdpOracleResult res =
      num::sdp_critical_solve(static_cast<int>(q.m), static_cast<int>(q.n), static_cast<int>(q.r), o.seed,
                              tracker_settings(o));
  const std::string predicted = to_string(sdp::critical_count(q));
  if (o.csv) {
    out << "m,n,r,seed,solutions,predicted,paths,failed,rank_deficient\n"
        << q.m << ',' << q.n << ',' << q.r << ',' << o.seed << ',' << res.solutions << ',' << predicted << ','
        << res.paths << ',' << res.failed << ',' << res.rank_deficient << '\n';
  } else {
    out << Json{{"m", q.m},
                {"n", q.n},
                {"r", q.r},
                {"seed", o.seed},
                {"solutions", res.solutions},
                {"predicted", predicted},
                {"paths", res.paths},
                {"failed", res.failed},
                {"rank_deficient", res.rank_deficient},
                {"degraded", res.degraded}}
               .dump()
        << '\n';
  }
  return kOk;
}

void check_witness_size(std::int64_t n) {
  if (n < 2 || n > 4) throw UsageError("witness commands support 2 <= n <= 4");
}

int cmd_witness_solve(const Options& o, std::ostream& out) {
  check_witness_size(o.n);
  const int n = static_cast<int>(o.n);
  const num::TrackerSettings s = tracker_settings(o);
  Json doc{{"n", n}, {"seed", o.seed}};
  num::WitnessSet ws;
  if (o.monodromy) {
    const num::MonodromyResult res = num::monodromy_from_identity(n, s);
    ws = res.witness;
    doc["method"] = "monodromy";
    doc["loops"] = res.loops;
    doc["path_failures"] = res.path_failures;
    doc["rejected_points"] = res.rejected_points;
    doc["points"] = ws.points.size();
  } else {
    const num::TotalDegreeSolve res = num::total_degree_solve(n, num::random_slice(n, o.seed), s);
    ws = res.witness;
    const num::ComponentSplit split = num::split_components(ws);
    doc["method"] = "total-degree";
    doc["paths"] = res.paths;
    doc["converged"] = res.converged;
    doc["diverged"] = res.diverged;
    doc["failed"] = res.failed;
    doc["degraded"] = res.degraded;
    doc["points"] = ws.points.size();
    doc["so_points"] = split.so_points.size();
    doc["other_points"] = split.other_points.size();
  }
  if (o.csv) {
    out << "n,seed,method,points\n" << n << ',' << o.seed << ',' << doc["method"].get<std::string>() << ','
        << ws.points.size() << '\n';
    return kOk;
  }
  doc["witness"] = Json::parse(num::witness_to_json(ws));
  out << doc.dump() << '\n';
  return kOk;
}

int cmd_witness_census(const Options& o, std::ostream& out) {
  check_witness_size(o.n);
  if (o.samples == 0) throw UsageError("--samples must be positive");
  const int n = static_cast<int>(o.n);
  const num::TrackerSettings s = tracker_settings(o);
  const num::WitnessSet base = num::monodromy_from_identity(n, s).witness;
  const num::RealCensus census = num::real_census(n, base, o.samples, o.seed, s);
  const std::string csv = num::to_csv(census);
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) throw UsageError("cannot open " + o.out_path);
    file << csv;
  }
  if (o.csv) {
    out << csv;
    return kOk;
  }
  Json freq = Json::object();
  for (const auto& [count, times] : census.frequency) freq[std::to_string(count)] = times;
  out << Json{{"n", n},
              {"samples", census.samples},
              {"seed", o.seed},
              {"max_points", census.max_points},
              {"frequency", std::move(freq)},
              {"fail", census.fails}}
             .dump()
      << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Degrees of SO(n), O(n), Sp(r) and low-rank SDP critical-point counts", "orthodeg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", o.threads, "Worker threads for enumeration and tracking")->check(CLI::Range(1u, 1024u));
  app.add_option("--tolerance", o.tolerance, "Tracker corrector and endpoint residual tolerance")
      ->check(CLI::PositiveNumber);
  auto* json_flag = app.add_flag("--json", o.json, "JSON output (default)");
  app.add_flag("--csv", o.csv, "CSV output")->excludes(json_flag);

  int (*action)(const Options&, std::ostream&) = nullptr;
  auto bind = [&](CLI::App* sub, int (*fn)(const Options&, std::ostream&)) {
    sub->callback([&action, fn] { action = fn; });
  };

  auto* degree = app.add_subcommand("degree", "Degree of SO(n), O(n) or Sp(r)");
  degree->add_option("group", o.group, "so, o or sp")->required()->check(CLI::IsMember({"so", "o", "sp"}, CLI::ignore_case));
  degree->add_option("N", o.size, "n for SO/O, r for Sp")->required();
  degree->add_option("--method", o.method, "Route")
      ->check(CLI::IsMember({"formula", "kazarnovskij-direct", "kazarnovskij-closed", "lattice", "numeric", "all"}));
  degree->add_option("--seed", o.seed, "Seed for the numeric route");
  bind(degree, cmd_degree);

  auto* lat = app.add_subcommand("lattice", "Non-intersecting lattice path systems");
  lat->require_subcommand(1);
  auto* lat_count = lat->add_subcommand("count", "Count via the path-count determinant");
  lat_count->add_option("n", o.n)->required();
  bind(lat_count, cmd_lattice_count);
  auto* lat_enum = lat->add_subcommand("enumerate", "Count by exhaustive enumeration");
  lat_enum->add_option("n", o.n)->required();
  lat_enum->add_flag("--emit", o.emit, "Print every path system");
  bind(lat_enum, cmd_lattice_enumerate);

  auto* sdp_cmd = app.add_subcommand("sdp", "Algebraic degree of semidefinite programming");
  sdp_cmd->require_subcommand(1);
  auto add_mnr = [&](CLI::App* sub) {
    sub->add_option("m", o.m)->required();
    sub->add_option("n", o.n)->required();
    sub->add_option("r", o.r)->required();
  };
  auto* sdp_delta = sdp_cmd->add_subcommand("delta", "delta(m, n, r)");
  add_mnr(sdp_delta);
  bind(sdp_delta, cmd_sdp_delta);
  auto* sdp_crit = sdp_cmd->add_subcommand("critical-count", "2 deg SO(r) delta(m, n, r)");
  add_mnr(sdp_crit);
  bind(sdp_crit, cmd_sdp_critical);
  auto* sdp_oracle = sdp_cmd->add_subcommand("oracle", "Solve the Lagrange system numerically");
  add_mnr(sdp_oracle);
  sdp_oracle->add_option("--seed", o.seed)->required();
  bind(sdp_oracle, cmd_sdp_oracle);

  auto* wit = app.add_subcommand("witness", "Witness sets of O(n) and SO(n)");
  wit->require_subcommand(1);
  auto* wit_solve = wit->add_subcommand("solve", "Total-degree homotopy or monodromy");
  wit_solve->add_option("--n", o.n)->required();
  wit_solve->add_option("--seed", o.seed)->required();
  wit_solve->add_flag("--monodromy", o.monodromy, "Populate the SO(n) component from the identity");
  bind(wit_solve, cmd_witness_solve);
  auto* wit_census = wit->add_subcommand("census", "Real points on random real slices");
  wit_census->add_option("--n", o.n)->required();
  wit_census->add_option("--samples", o.samples)->required();
  wit_census->add_option("--seed", o.seed)->required();
  wit_census->add_option("--out", o.out_path, "Also write the CSV table to this file");
  bind(wit_census, cmd_witness_census);

  for (auto* sub : {degree, lat, sdp_cmd, wit}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    return action ? action(o, out) : kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalFailure;
  }
}

}  // namespace orthodeg::cli
