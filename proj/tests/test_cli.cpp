#include <doctest.h>

#include <json.hpp>

#include "confcat/cli.hpp"

using confcat::cli::run;

TEST_CASE("bounds as json") {
  const auto r = run({"bounds", "--invariant", "secat", "--n", "3", "--k", "4",
                      "--format", "json"});
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["lower"] == 6);
  CHECK(j["upper"] == 6);
  CHECK(j["exact"] == true);
  CHECK(j["invariant"] == "secat");
}

TEST_CASE("cuplength") {
  const auto r = run({"cuplength", "--n", "2", "--k", "5"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "4\nwitness A_{2,1}A_{3,1}A_{4,1}A_{5,1}\n");
}

TEST_CASE("ring") {
  const auto table = run({"ring", "--n", "3", "--k", "3"});
  REQUIRE(table.exit_code == 0);
  CHECK(table.out.find("total 6") != std::string::npos);
  const auto listing = run({"ring", "--n", "3", "--k", "3", "--q", "2"});
  CHECK(listing.out ==
        "basis of H^4(F(R^3,3)): 2 monomials\nA_{2,1}A_{3,1}\nA_{2,1}A_{3,2}\n");
}

TEST_CASE("trees") {
  const auto r = run({"trees", "--n", "2", "--k", "6", "--search"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("min_edges 8 (search)") != std::string::npos);
  CHECK(r.out.find("cohdim_mod2 4") != std::string::npos);
  const auto dot = run({"trees", "--n", "2", "--k", "3", "--dot"});
  CHECK(dot.out.rfind("digraph tree0 {", 0) == 0);
}

TEST_CASE("sweep json is one document") {
  const auto r = run({"sweep", "--n", "1..3", "--k", "2..4", "--format", "json"});
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 27);
  const auto md = run({"sweep", "--n", "2", "--k", "2..3"});
  CHECK(md.exit_code == 0);
  CHECK(md.out.find("| 2 | 3 | 2 | 2 | 2 |") != std::string::npos);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--seed", "11", "--max-k", "5"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS confluence") != std::string::npos);
  CHECK(r.out.find("PASS bound-consistency-sweep") != std::string::npos);
}

TEST_CASE("errors") {
  CHECK(run({"bounds", "--bogus"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
  CHECK(run({"bounds", "--invariant", "tc", "--n", "2", "--k", "2"}).exit_code == 2);

  const auto bad_n = run({"ring", "--n", "1", "--k", "3"});
  CHECK(bad_n.exit_code == 1);
  CHECK(bad_n.err.find("n must be >= 2") != std::string::npos);
  CHECK(run({"cuplength", "--n", "3", "--k", "0"}).exit_code == 1);
  CHECK(run({"sweep", "--n", "2..x", "--k", "2"}).exit_code == 1);
  CHECK(run({"sweep", "--n", "3..2", "--k", "2"}).exit_code == 1);
  CHECK(run({"--help"}).exit_code == 0);
}
