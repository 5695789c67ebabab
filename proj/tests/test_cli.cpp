#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dbr/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = dbr::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("groups listing") {
  Run r = run({"groups"});
  CHECK(r.status == 0);
  CHECK(r.out.find("C<n>") != std::string::npos);
  Run g = run({"groups", "S3", "--format", "json"});
  CHECK(g.status == 0);
  json j = json::parse(g.out);
  CHECK(j["order"] == 6);
}

TEST_CASE("marks table") {
  Run r = run({"marks", "C2", "C2", "--system", "leftfree", "--format",
               "table"});
  CHECK(r.status == 0);
  // 3x3 upper-triangular integer table with the table-of-marks values
  Run j = run({"marks", "C2", "C2", "--system", "leftfree", "--format",
               "json"});
  json m = json::parse(j.out);
  CHECK(m["matrix"] ==
        json::parse("[[4,2,2],[0,2,0],[0,0,2]]"));
}

TEST_CASE("csv marks are square with a header row") {
  Run r = run({"marks", "C2", "C2", "--system", "leftfree", "--format",
               "csv"});
  CHECK(r.status == 0);
  std::istringstream is(r.out);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  REQUIRE(rows.size() == 4);  // header + 3 rows
  for (const auto& row : rows) CHECK(row.size() == 4);  // label + 3 columns
}

TEST_CASE("bmul identity example") {
  // [Delta] . [1x C2] = [1x C2]
  Run r = run({"bmul", "C2", "[delta]", "[1x C2]", "--format", "json"});
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["num"] == "1");
  CHECK(j["terms"][0]["den"] == "1");
  // the one term is the class of 1 x C2 = {(0,0),(0,1)} = {0,1}
  CHECK(j["terms"][0]["class_rep"] == json::parse("[0,1]"));
}

TEST_CASE("rho json output is exact") {
  Run r = run({"rho", "C2", "[1x C2]", "--format", "json"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find('.') == std::string::npos);  // no floating point tokens
  json j = json::parse(r.out);
  CHECK(j["terms"].size() == 2);
  for (const auto& t : j["terms"]) CHECK(t["den"] == "1");
}

TEST_CASE("rho-inv and ghost-mul literals") {
  // basis listing over (C2,C2) left-free: [1], [1xC2], [Delta]
  Run r = run({"rho-inv", "C2", "[class:2]", "--format", "json"});
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  // rho^-1 of the diagonal orbit sum is [Delta] - 1/2 [1]
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["num"] == "-1");
  CHECK(j["terms"][0]["den"] == "2");
  CHECK(j["terms"][1]["num"] == "1");
  CHECK(j["terms"][1]["den"] == "1");

  Run g = run({"ghost-mul", "C2", "[class:0]", "[class:0]", "--format",
               "json"});
  REQUIRE(g.status == 0);
  json gj = json::parse(g.out);
  REQUIRE(gj["terms"].size() == 1);
  CHECK(gj["terms"][0]["num"] == "1");

  Run d = run({"grading", "C2", "[1x C2]", "--format", "json"});
  REQUIRE(d.status == 0);
  json dj = json::parse(d.out);
  REQUIRE(dj["components"].size() == 2);
  CHECK(dj["components"][0]["degree"] == 0);
  CHECK(dj["components"][1]["degree"] == 1);
}

TEST_CASE("omega report for the A4 fusion system") {
  Run r = run({"omega", "--group", "V4", "--prime", "2", "--fusion",
               "from-group:A4", "--format", "json"});
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["saturated"] == true);
  CHECK(j["is_idempotent"] == true);
  CHECK(j["fix_equals_system"] == true);
  CHECK(j["standard_p_integral"] == true);
  // Phi-values: 4 where p1 is trivial, 4/3 otherwise
  for (const auto& m : j["marks"]) {
    if (m["p1_order"] == 1) {
      CHECK(m["value"]["num"] == "4");
      CHECK(m["value"]["den"] == "1");
    } else {
      CHECK(m["value"]["num"] == "4");
      CHECK(m["value"]["den"] == "3");
    }
  }
}

TEST_CASE("group files through the CLI") {
  const char* path = "/tmp/dbr_cli_group.json";
  {
    std::ofstream f(path);
    f << R"({"name":"shifted","order":4,)"
      << R"("table":[[2,3,0,1],[3,2,1,0],[0,1,2,3],[1,0,3,2]]})";
  }
  Run r = run({"subgroups", path, "--format", "json"});
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["count"] == 5);  // it is V4 after renaming the identity

  // malformed file: parse-level failure, exit status 1
  {
    std::ofstream f(path);
    f << R"({"order":2,"table":[[0,1],[1,1]]})";
  }
  CHECK(run({"subgroups", path}).status == 1);
}

TEST_CASE("group emission round-trips through the file loader") {
  Run r = run({"groups", "D8", "--format", "json"});
  REQUIRE(r.status == 0);
  const char* path = "/tmp/dbr_roundtrip.json";
  {
    std::ofstream f(path);
    f << r.out;
  }
  Run back = run({"groups", path, "--format", "json"});
  REQUIRE(back.status == 0);
  CHECK(json::parse(back.out)["table"] == json::parse(r.out)["table"]);
}

TEST_CASE("exit statuses") {
  CHECK(run({"nonsense-verb"}).status == 1);
  CHECK(run({"marks", "C2"}).status == 0);  // square pair defaults
  CHECK(run({"marks", "NoSuchGroup", "C2"}).status == 1);
  // domain error: product subgroup lattice exceeds the capacity bound
  CHECK(run({"marks", "S4", "S4"}).status == 2);
  // composition error: [delta] needs matching groups
  CHECK(run({"bmul", "C2", "C4", "C2", "[delta]", "[1]"}).status == 2);
}

TEST_CASE("determinism") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"basis", "S3", "V4", "--system", "all", "--format", "json"},
           {"omega", "--group", "V4", "--prime", "2", "--fusion", "index:3",
            "--format", "json"},
           {"sigma-tilde", "C2", "[delta]", "--format", "json"}}) {
    Run a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}
