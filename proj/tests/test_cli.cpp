#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cwres/cli.hpp"

using nlohmann::json;

namespace {

std::string fixture(const std::string& name) {
  return std::string(CWRES_FIXTURE_DIR) + "/" + name;
}

struct Run {
  int exit_code;
  std::string stdout_text;
  json report;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cwres::run_cli(args, out, err);
  Run r{code, out.str(), json()};
  if (!r.stdout_text.empty()) r.report = json::parse(r.stdout_text);
  return r;
}

}  // namespace

TEST_CASE("compare on the two-cell disk") {
  Run r = run({"compare", "--cw", fixture("disk.json")});
  CHECK(r.exit_code == 0);
  CHECK(r.report["isomorphic"] == true);
  CHECK(r.report["dims"] == json::array({1, 4, 5, 2}));
  CHECK(r.report["ok"] == true);
}

TEST_CASE("homology of the empty complex reports degree -1") {
  Run r = run({"homology", "--complex", fixture("empty.json")});
  CHECK(r.exit_code == 0);
  CHECK(r.report["-1"] == 1);

  Run ht = run({"homology", "--complex", fixture("hollow_triangle.json")});
  CHECK(ht.report["1"] == 1);
  CHECK(!ht.report.contains("0"));
}

TEST_CASE("betti totals for the triangle ideal") {
  Run r = run({"betti", "--ideal", fixture("tri.json")});
  CHECK(r.exit_code == 0);
  CHECK(r.report["total"] == json::array({1, 3, 2}));
}

TEST_CASE("face-poset f-vector") {
  Run r = run({"face-poset", "--cw", fixture("disk.json")});
  CHECK(r.exit_code == 0);
  CHECK(r.report["f_vector"] == json::array({1, 4, 5, 2}));
}

TEST_CASE("order-complex of the hexagon interval") {
  Run r = run({"order-complex", "--poset", fixture("disk_poset.json"),
               "--open", "∅", "123"});
  CHECK(r.exit_code == 0);
  CHECK(r.report["f_vector"] == json::array({6, 6}));
}

TEST_CASE("is-cw-poset exit code tracks the verdict") {
  Run good = run({"is-cw-poset", "--poset", fixture("disk_poset.json")});
  CHECK(good.exit_code == 0);
  CHECK(good.report["is_cw_poset"] == true);
}

TEST_CASE("d-construction report") {
  Run r = run({"d-construction", "--poset", fixture("disk_poset.json"),
               "--matrices"});
  CHECK(r.exit_code == 0);
  CHECK(r.report["dims"] == json::array({1, 4, 5, 2}));
  CHECK(r.report["is_complex"] == true);
  CHECK(r.report["matrices"].size() == 3);
}

TEST_CASE("filtration-check single pair and sweep") {
  Run one = run({"filtration-check", "--poset", fixture("disk_poset.json"),
                 "--alpha", "1234", "--j", "1"});
  CHECK(one.exit_code == 0);
  CHECK(one.report["all_true"] == true);

  Run sweep = run({"filtration-check", "--poset",
                   fixture("disk_poset.json"), "--alpha", "123"});
  CHECK(sweep.exit_code == 0);
  CHECK(sweep.report["checks"].size() == 4);
}

TEST_CASE("verify-resolution exit code tracks the resolution check") {
  Run taylor =
      run({"verify-resolution", "--ideal", fixture("tri.json"), "--taylor"});
  CHECK(taylor.exit_code == 0);
  CHECK(taylor.report["is_resolution"] == true);
  CHECK(taylor.report["is_minimal"] == false);
  CHECK(taylor.report["warnings"].size() == 1);

  Run scarf =
      run({"verify-resolution", "--ideal", fixture("tri.json"), "--scarf"});
  CHECK(scarf.exit_code == 1);
  CHECK(scarf.report["is_resolution"] == false);
  CHECK(scarf.report["witnesses"] == json::array({json::array({1, 1, 1})}));
}

TEST_CASE("resolution export round-trips through verify-resolution") {
  Run resolve =
      run({"resolve", "--ideal", fixture("tri.json"), "--taylor"});
  REQUIRE(resolve.exit_code == 0);
  const std::string path = "/tmp/cwres_test_taylor_export.json";
  {
    std::ofstream f(path);
    f << resolve.report["resolution"].dump();
  }
  Run verify = run({"verify-resolution", "--ideal", fixture("tri.json"),
                    "--resolution", path});
  CHECK(verify.exit_code == 0);
  CHECK(verify.report["is_resolution"] == true);
  CHECK(verify.report["ranks"] == json::array({1, 3, 3, 1}));
}

TEST_CASE("resolve via the poset construction") {
  Run r = run({"resolve", "--ideal", fixture("xy.json"), "--poset"});
  CHECK(r.exit_code == 0);
  CHECK(r.report["ranks"] == json::array({1, 2, 1}));
}

TEST_CASE("lyubeznik respects the generator order flag") {
  for (const std::string& order : {"1,2,3", "3,2,1"}) {
    Run r = run({"verify-resolution", "--ideal", fixture("tri.json"),
                 "--lyubeznik", "--order", order});
    CHECK(r.exit_code == 0);
    CHECK(r.report["is_resolution"] == true);
  }
}

TEST_CASE("cw-lattice-report") {
  Run sq = run({"cw-lattice-report", "--ideal", fixture("sq.json")});
  CHECK(sq.exit_code == 0);
  CHECK(sq.report["is_cw"] == false);
  CHECK(sq.report["witness"] == "x1^2*x2^2");
  CHECK(sq.report["lattice_linear_certified"] == true);

  Run xy = run({"cw-lattice-report", "--ideal", fixture("xy.json")});
  CHECK(xy.report["is_cw"] == true);
  CHECK(xy.report["ranks"] == json::array({1, 2, 1}));
}

TEST_CASE("reports are byte-identical across runs") {
  std::vector<std::string> cmd = {"compare", "--cw", fixture("disk.json")};
  Run a = run(cmd);
  Run b = run(cmd);
  CHECK(a.stdout_text == b.stdout_text);

  std::vector<std::string> betti_cmd = {"betti", "--ideal",
                                        fixture("tri.json"), "--pretty"};
  CHECK(run(betti_cmd).stdout_text == run(betti_cmd).stdout_text);
}

TEST_CASE("pretty output carries the same report") {
  Run plain = run({"betti", "--ideal", fixture("tri.json")});
  Run pretty = run({"betti", "--ideal", fixture("tri.json"), "--pretty"});
  json a = plain.report, b = pretty.report;
  a.erase("command");
  b.erase("command");
  CHECK(a == b);
}

TEST_CASE("field selection") {
  Run f3 = run({"--field", "fp:3", "betti", "--ideal", fixture("tri.json")});
  CHECK(f3.exit_code == 0);
  CHECK(f3.report["field"] == "fp:3");
  CHECK(f3.report["total"] == json::array({1, 3, 2}));

  Run bad = run({"--field", "fp:4", "betti", "--ideal", fixture("tri.json")});
  CHECK(bad.exit_code == 2);
  CHECK(bad.report["error"]["kind"] == "InvalidField");
}

TEST_CASE("structured errors") {
  Run missing = run({"betti", "--ideal", "/nonexistent/nope.json"});
  CHECK(missing.exit_code == 2);
  CHECK(missing.report["error"]["kind"] == "BadInput");
  CHECK(missing.report["error"].contains("location"));
  CHECK(missing.report["error"].contains("message"));

  // a CW file with a dangling facet reference
  const std::string path = "/tmp/cwres_test_bad_cw.json";
  {
    std::ofstream f(path);
    f << R"({"cells": [{"id": "e", "dim": 1, "facets": ["u", "v"]}]})";
  }
  Run dangling = run({"face-poset", "--cw", path});
  CHECK(dangling.exit_code == 2);
  CHECK(dangling.report["error"]["kind"] == "UnknownElement");

  // two inputs for one homology command
  Run both = run({"homology", "--complex", fixture("empty.json"), "--cw",
                  fixture("disk.json")});
  CHECK(both.exit_code == 2);
  CHECK(both.report["error"]["kind"] == "BadInput");
}

TEST_CASE("half-closed interval order complex") {
  Run r = run({"order-complex", "--poset", fixture("disk_poset.json"),
               "--half", "∅", "12"});
  CHECK(r.exit_code == 0);
  CHECK(r.report["f_vector"] == json::array({3, 2}));
}

TEST_CASE("timing only appears on request") {
  Run plain = run({"betti", "--ideal", fixture("tri.json")});
  CHECK(!plain.report.contains("timing_ms"));
  Run timed = run({"betti", "--ideal", fixture("tri.json"), "--timing"});
  CHECK(timed.report.contains("timing_ms"));
}
