#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = orthodeg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("degree by formula") {
  const Run r = run({"degree", "so", "7", "--method", "formula"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"group\":\"SO\",\"n\":7,\"degree\":\"111616\",\"method\":\"formula\"}\n");
  CHECK(parse(run({"degree", "o", "9"}))["degree"] == "393936896");
  CHECK(parse(run({"degree", "sp", "5"}))["degree"] == "2063048448");
  CHECK(parse(run({"degree", "SP", "2"}))["r"] == 2);
}

TEST_CASE("every exact route agrees") {
  const Run r = run({"degree", "so", "5", "--method", "all"});
  CHECK(r.code == 0);
  const auto j = parse(r);
  CHECK(j["agree"] == true);
  CHECK(j["degree"] == "384");
  CHECK(j["methods"].size() == 4);
  for (const auto& [k, v] : j["methods"].items()) CHECK(v == "384");

  const auto sp = parse(run({"degree", "sp", "3", "--method", "all"}));
  CHECK(sp["methods"].size() == 3);
  CHECK(sp["degree"] == "1744");
}

TEST_CASE("individual routes") {
  CHECK(parse(run({"degree", "so", "8", "--method", "kazarnovskij-direct"}))["degree"] == "3433600");
  CHECK(parse(run({"degree", "o", "6", "--method", "kazarnovskij-closed"}))["degree"] == "9536");
  CHECK(parse(run({"degree", "so", "6", "--method", "lattice"}))["degree"] == "4768");
  CHECK(parse(run({"degree", "o", "3", "--method", "numeric", "--seed", "2"}))["degree"] == "16");
  CHECK(parse(run({"degree", "so", "3", "--method", "numeric"}))["degree"] == "8");
}

TEST_CASE("csv output") {
  const Run r = run({"--csv", "degree", "so", "4"});
  CHECK(r.out == "group,n,method,degree\nSO,4,formula,40\n");
  CHECK(run({"sdp", "delta", "2", "3", "2", "--csv"}).out == "m,n,r,delta\n2,3,2,6\n");
}

TEST_CASE("lattice commands") {
  CHECK(parse(run({"lattice", "count", "5"}))["count"] == "24");
  const Run e = run({"lattice", "enumerate", "5", "--emit"});
  CHECK(e.code == 0);
  std::istringstream lines(e.out);
  std::string line;
  int systems = 0;
  std::string last;
  while (std::getline(lines, line)) {
    last = line;
    if (line.front() == '[') ++systems;
  }
  CHECK(systems == 24);
  CHECK(nlohmann::json::parse(last)["systems"] == "24");
  CHECK(parse(run({"lattice", "enumerate", "7"}))["systems"] == "1744");
}

TEST_CASE("sdp commands") {
  const Run c = run({"sdp", "critical-count", "1", "2", "1"});
  CHECK(c.out == "{\"m\":1,\"n\":2,\"r\":1,\"delta\":\"2\",\"critical_points\":\"4\"}\n");
  CHECK(parse(run({"sdp", "delta", "2", "3", "2"}))["delta"] == "6");
  const auto o = parse(run({"sdp", "oracle", "1", "2", "1", "--seed", "7"}));
  CHECK(o["solutions"] == 4);
  CHECK(o["predicted"] == "4");
}

TEST_CASE("witness commands") {
  const auto solve = parse(run({"witness", "solve", "--n", "3", "--seed", "3"}));
  CHECK(solve["paths"] == 64);
  CHECK(solve["points"] == 16);
  CHECK(solve["so_points"] == 8);
  CHECK(solve["witness"]["points"].size() == 16);
  const auto mono = parse(run({"witness", "solve", "--n", "2", "--seed", "3", "--monodromy"}));
  CHECK(mono["points"] == 2);

  const std::string path = "cli_census_test.csv";
  const Run census = run({"witness", "census", "--n", "2", "--samples", "20", "--seed", "1", "--out", path});
  CHECK(census.code == 0);
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str().rfind("real_count,frequency\n", 0) == 0);
  CHECK(run({"--csv", "witness", "census", "--n", "2", "--samples", "20", "--seed", "1"}).out == buf.str());
  std::remove(path.c_str());
}

TEST_CASE("output does not depend on the thread count") {
  const std::vector<std::vector<std::string>> cmds{
      {"lattice", "enumerate", "8"},
      {"degree", "so", "8", "--method", "all"},
      {"witness", "solve", "--n", "3", "--seed", "5"},
      {"witness", "census", "--n", "3", "--samples", "30", "--seed", "2"},
  };
  for (const auto& cmd : cmds) {
    const Run one = run(cmd);
    for (const char* k : {"2", "4"}) {
      std::vector<std::string> threaded{"--threads", k};
      threaded.insert(threaded.end(), cmd.begin(), cmd.end());
      const Run many = run(threaded);
      CHECK(many.code == one.code);
      CHECK(many.out == one.out);
    }
  }
}

TEST_CASE("usage errors exit with 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"degree", "gl", "3"},
           {"degree", "so"},
           {"degree", "so", "3", "--method", "guess"},
           {"degree", "so", "0"},
           {"degree", "sp", "3", "--method", "lattice"},
           {"degree", "so", "12", "--method", "lattice"},
           {"degree", "so", "5", "--method", "numeric"},
           {"sdp", "delta", "1", "2", "3"},
           {"sdp", "oracle", "1", "2", "1"},
           {"witness", "solve", "--n", "6", "--seed", "1"},
           {"--threads", "0", "degree", "so", "3"},
           {"--json", "--csv", "degree", "so", "3"},
       }) {
    const Run r = run(args);
    CAPTURE(args.size());
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("help exits cleanly") {
  const Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("degree") != std::string::npos);
}
