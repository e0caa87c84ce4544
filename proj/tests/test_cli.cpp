#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "charkit/cli.hpp"
#include "doctest.h"

using namespace charkit;

namespace {

struct RunResult {
  int rc;
  std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  int rc = cli_run(args, o, e);
  return {rc, o.str(), e.str()};
}

std::string write_two_line_presentation() {
  std::string path = "cli_test_presentation.json";
  std::ofstream f(path);
  f << R"({
    "ambient": 2,
    "fibers": [
      { "label": [0], "V": [ {"gens": ["x2"]}, {"gens": ["x1"]} ] }
    ]
  })";
  return path;
}

}  // namespace

TEST_CASE("documented examples") {
  CHECK(run({"chi", "--p", "7", "--elem", "fq(7,1,[3])"}).out == "z(1/6)\n");
  CHECK(run({"chi", "--p", "7", "--root", "z(1/7)"}).out == "none\n");
  auto mann = run({"mann", "solve", "--coeffs", "1,1"});
  CHECK(mann.out == "z(1/6),z(5/6)\nz(5/6),z(1/6)\n");
  CHECK(run({"mtp", "--units", "z(1/3),z(1/6)"}).out == "[[1,4],[0,6]]\n");
  CHECK(run({"rank", "eval", "--expr", "atom(1,1,0,1)"}).out == "w*1+0\n");
  CHECK(run({"rank", "eval", "--expr",
             "prod(atom(1,1,0,1), atom(0,1,2,3))"}).out == "w*1+2\n");
  CHECK(run({"ideal", "member", "--gens", "x1^2+x1+1", "--poly", "x1^3-1",
             "--radical"}).out == "true\n");
  CHECK(run({"pullback", "--p", "7", "--system", "w1+w2"}).out == "s1 + s2\n");

  std::string path = write_two_line_presentation();
  CHECK(run({"pcset", "grgd", "--file", path}).out == "gr=w*1+0 gd=2\n");
  std::remove(path.c_str());
}

TEST_CASE("every dispatch-table command is exercised") {
  std::string path = write_two_line_presentation();
  std::map<std::string, std::vector<std::vector<std::string>>> samples = {
      {"chi", {{"chi", "--p", "7", "--elem", "fq(7,1,[3])"}}},
      {"fq",
       {{"fq", "mul", "--a", "fq(2,2,[0,1])", "--b", "fq(2,2,[0,1])"},
        {"fq", "add", "--a", "fq(3,1,[1])", "--b", "fq(3,1,[2])"},
        {"fq", "inv", "--elem", "fq(7,1,[3])"},
        {"fq", "dlog", "--elem", "fq(7,1,[3])"},
        {"fq", "embed", "--elem", "fq(2,2,[0,1])", "--n", "4"},
        {"fq", "gen", "--p", "3", "--n", "2"},
        {"fq", "conway", "--p", "2", "--n", "4"},
        {"fq", "elements", "--p", "2", "--n", "2"}}},
      {"cyclo",
       {{"cyclo", "eval", "--expr", "z(1/3) + z(2/3) + 1"},
        {"cyclo", "poly", "--k", "6"},
        {"cyclo", "phi", "--k", "12"}}},
      {"mtp", {{"mtp", "--units", "2,3,6", "--over", ""}}},
      {"mcl",
       {{"mcl", "--set", "z(1/3)", "--elem", "z(1/6)"},
        {"mcl", "--set", "2,3,6", "--basis"},
        {"mcl", "--set", "2,3", "--indep"}}},
      {"mann", {{"mann", "solve", "--coeffs", "2,-1"}}},
      {"generic",
       {{"generic", "--g", "z(1/12)"}, {"generic", "--g", "2", "--over", "2"}}},
      {"axiom",
       {{"axiom", "--p", "7", "--n", "2", "--nmax", "1"},
        {"axiom", "--p", "3", "--n", "2", "--nmax", "2", "--coeffs", "1,1"}}},
      {"pullback", {{"pullback", "--p", "7", "--system", "w1-w2"}}},
      {"ideal",
       {{"ideal", "member", "--gens", "x1^2-1;x1-1", "--poly", "x1-1"},
        {"ideal", "gb", "--gens", "x1^2-1;x1-1"},
        {"ideal", "dim", "--gens", "x1*x2", "--nvars", "2"},
        {"ideal", "special", "--m", "1,0", "--n", "0,1", "--k", "3"},
        {"ideal", "type", "--roots", "z(1/3)"},
        {"ideal", "typemember", "--roots", "z(1/3)", "--poly", "x1^3-1"}}},
      {"pcset",
       {{"pcset", "closure", "--file", path},
        {"pcset", "rank", "--file", path},
        {"pcset", "refine", "--file", path},
        {"pcset", "refine", "--geometric", "--file", path},
        {"pcset", "quotient", "--file", path},
        {"pcset", "grgd", "--file", path}}},
      {"rank",
       {{"rank", "eval", "--expr", "union(atom(1,1,0,2), atom(0,1,0,5))"},
        {"rank", "gd", "--expr", "disj(atom(1,1,0,3), atom(0,1,0,5))"}}},
      {"verify", {{"verify", "refine"}}},
  };
  for (auto& cmd : cli_commands()) {
    INFO("command: " << cmd);
    REQUIRE(samples.count(cmd) == 1);
    for (auto& args : samples[cmd]) {
      INFO("args[0..]: " << args[0] << (args.size() > 1 ? " " + args[1] : ""));
      auto r = run(args);
      CHECK(r.rc == 0);
      CHECK(!r.out.empty());
    }
  }
  std::remove(path.c_str());
}

TEST_CASE("pcset rel subcommand") {
  std::string path = "cli_test_rel.json";
  {
    std::ofstream f(path);
    f << R"({
      "ambient": 2,
      "fibers": [
        { "label": [0], "V": [ {"gens": ["x2"]} ] },
        { "label": [1], "V": [ {"gens": ["x2"]} ],
          "S": [ [ {"gens": ["x1","x2"]} ] ] }
      ]
    })";
  }
  auto r = run({"pcset", "rel", "--file", path});
  CHECK(r.rc == 0);
  CHECK(r.out == "almost-equal\n");
  std::remove(path.c_str());
}

TEST_CASE("json output") {
  auto r = run({"--json", "chi", "--p", "7", "--elem", "fq(7,1,[3])"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("\"value\"") != std::string::npos);
  CHECK(r.out.find("z(1/6)") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"no-such-command"}).rc == 2);
  CHECK(run({"chi", "--p", "7"}).rc == 2);  // missing --elem/--root is usage
  CHECK(run({"mann", "solve", "--coeffs", "1/0"}).rc == 1);
  CHECK(run({"generic", "--g", "2,4", "--over", "4"}).rc == 1);
  CHECK(run({}).rc == 2);
  auto help = run({"--help"});
  CHECK(help.rc == 0);
  CHECK(!help.out.empty());
}

TEST_CASE("output is deterministic") {
  for (auto& args : std::vector<std::vector<std::string>>{
           {"mann", "solve", "--coeffs", "1,1"},
           {"fq", "elements", "--p", "3", "--n", "1"},
           {"mcl", "--set", "2,3,6", "--basis"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.rc == b.rc);
    CHECK(a.out == b.out);
  }
}
