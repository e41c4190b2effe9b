#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sstower/cli.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = sstower::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << text;
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("tower human report") {
  auto r = run({"tower", "--p", "3", "--f", "1", "--m", "1", "--a-p", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("m(K) = 1") != std::string::npos);
  CHECK(r.out.find("c = 1") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("tower rejects an illegal trace") {
  auto r = run({"tower", "--p", "7", "--a-p", "7"});
  CHECK(r.code == 2);
  CHECK(r.err.find("a_p must be 0 for p>3") != std::string::npos);
}

TEST_CASE("tower json report") {
  auto r = run({"tower", "--p", "3", "--f", "1", "--m", "1", "--a-p", "0",
                "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["group"] == json::array({6}));
  CHECK(doc["m_of_k"] == 1);
  CHECK(doc["c"] == 1);
  REQUIRE(doc["levels"].size() == 3);
  CHECK(doc["levels"][0]["n"] == -1);
  CHECK(doc["levels"][0]["degree"] == 1);
  CHECK(doc["levels"][0]["subgroup_order"] == 6);
  CHECK(doc["levels"][2]["degree"] == 6);
  CHECK(doc["input"]["p"] == 3);
  CHECK(doc["frobenius"].is_array());
}

TEST_CASE("module report") {
  auto human = run({"module", "--p", "3", "--f", "1", "--m", "0", "--a-p", "0"});
  CHECK(human.code == 0);
  CHECK(human.out.find("zp_rank = 2") != std::string::npos);
  CHECK(human.out.find("p-torsion: none") != std::string::npos);

  auto r = run({"module", "--p", "3", "--f", "1", "--m", "0", "--a-p", "0",
                "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["generators"] == json::array({"e_-1", "e_0"}));
  CHECK(doc["zp_rank"] == 2);
  CHECK(doc["p_torsion"] == json::array());
  CHECK(doc["invariant_factors"] == json::array({"1", "1", "0", "0"}));
  CHECK(doc["relations"].size() == 2);
}

TEST_CASE("sha-table csv") {
  auto r = run({"sha-table", "--p", "5", "--d", "1", "--n", "0..3", "--format",
                "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,exponent,diff\n0,0,0\n1,0,0\n2,4,4\n3,24,20\n");
}

TEST_CASE("sha-table input errors") {
  CHECK(run({"sha-table", "--p", "2", "--d", "1", "--n", "0..3"}).code == 2);
  CHECK(run({"sha-table", "--p", "5", "--d", "1", "--n", "3..0"}).code == 2);
  CHECK(run({"sha-table", "--p", "5", "--d", "1", "--n", "x"}).code == 2);
}

TEST_CASE("growth-diff stable law") {
  auto r = run({"growth-diff", "--theorem", "stable", "--p", "5", "--d", "1",
                "--n", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,diff\n2,4\n");

  auto range = run({"growth-diff", "--theorem", "stable", "--p", "3", "--d",
                    "1", "--n", "1..4", "--format", "csv"});
  CHECK(range.out == "n,diff\n1,0\n2,2\n3,6\n4,20\n");
}

TEST_CASE("growth-diff ramified law") {
  auto r = run({"growth-diff", "--theorem", "ramified", "--p", "3", "--r", "1",
                "--r-s1", "1", "--nu1", "1", "--mu-list", "1", "--d", "1",
                "--n", "3", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,diff\n3,4\n");
  // a_p != 0 is outside this law
  CHECK(run({"growth-diff", "--theorem", "ramified", "--p", "3", "--d", "1",
             "--r", "1", "--a-p", "3", "--n", "2"})
            .code == 2);
}

TEST_CASE("validate branches the exit code") {
  auto bad = run({"validate", "--p", "3", "--d", "2", "--r", "2", "--rho0",
                  "1", "--rho1", "1", "--r-s0", "1", "--r-s1", "1", "--nu0",
                  "2"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("r_s0 >= nu0") != std::string::npos);

  auto good = run({"validate", "--p", "3", "--d", "2", "--r", "2", "--rho0",
                   "1", "--rho1", "1", "--r-s0", "1", "--r-s1", "1"});
  CHECK(good.code == 0);
  CHECK(good.out.find("ok") != std::string::npos);
}

TEST_CASE("consistency fit") {
  auto r = run({"consistency", "--p", "3", "--d", "1", "--n-max", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("holds from n=2") != std::string::npos);
  CHECK(r.out.find("lambda = (0, 0)") != std::string::npos);

  auto j = run({"consistency", "--p", "5", "--d", "1", "--n-max", "8",
                "--format", "json"});
  REQUIRE(j.code == 0);
  auto doc = json::parse(j.out);
  CHECK(doc["holds"] == true);
  CHECK(doc["lambda0"] == 0);
  CHECK(doc["lambda1"] == 0);
  CHECK(doc["verified_from"] == 2);
}

TEST_CASE("spec documents feed any subcommand") {
  auto path = write_temp("sstower_cli_field.spec",
                         "p = 3\nf = 1\nm = 1\na_p = 0\n");
  auto r = run({"tower", "--spec", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("m(K) = 1") != std::string::npos);

  // inline flags override file values
  auto over = run({"tower", "--spec", path.string(), "--m", "0"});
  CHECK(over.code == 0);
  CHECK(over.out.find("m(K) = 0") != std::string::npos);

  CHECK(run({"tower", "--spec", "/nonexistent/path.spec"}).code == 2);
}

TEST_CASE("json output is deterministic and round-trips") {
  std::vector<std::string> args{"module", "--p", "3", "--f", "2", "--m", "1",
                                "--subgroup", "(1,8)", "--a-p", "3",
                                "--format", "json"};
  auto first = run(args);
  REQUIRE(first.code == 0);
  auto second = run(args);
  CHECK(first.out == second.out);

  // rebuild a spec document from the emitted input block and re-run
  auto doc = json::parse(first.out);
  std::ostringstream spec;
  spec << "p = " << doc["input"]["p"].get<long>() << "\n"
       << "f = " << doc["input"]["f"].get<long>() << "\n"
       << "m = " << doc["input"]["m"].get<long>() << "\n"
       << "a_p = " << doc["input"]["a_p"].get<long>() << "\n";
  std::string subgroup = doc["input"]["subgroup"].get<std::string>();
  if (!subgroup.empty()) spec << "subgroup = " << subgroup << "\n";
  auto path = write_temp("sstower_cli_roundtrip.spec", spec.str());
  auto replay = run({"module", "--spec", path.string(), "--format", "json"});
  REQUIRE(replay.code == 0);
  CHECK(replay.out == first.out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"tower", "--bogus"}).code == 2);
  CHECK(run({"tower"}).code == 2);  // p is required
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"tower", "--help"}).code == 0);
}

}  // TEST_SUITE
