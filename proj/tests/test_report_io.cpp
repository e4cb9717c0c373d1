#include <doctest.h>

#include "confcat/bounds_engine.hpp"
#include "confcat/report_io.hpp"

using namespace confcat::bounds;

TEST_CASE("json schema and round trip") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 7; ++k) {
      for (auto inv : {Invariant::cat_F, Invariant::cat_B, Invariant::secat}) {
        const auto r = evaluate(inv, n, k);
        const auto j = nlohmann::json::parse(to_json(r).dump());
        for (const char* key : {"invariant", "n", "k", "lower", "upper", "exact",
                                "conjecture_value", "evidence"}) {
          CHECK(j.contains(key));
        }
        CHECK(j.size() == 8);
        for (const auto& e : j["evidence"]) {
          CHECK(e.size() == 4);
          CHECK(e["citation"].get<std::string>().size() > 0);
        }
        const auto back = report_from_json(j);
        CHECK(to_json(back) == j);
        CHECK(back.lower == r.lower);
        CHECK(back.evidence.size() == r.evidence.size());
      }
    }
  }
  CHECK(to_json(cat_F(3, 3))["conjecture_value"].is_null());
  CHECK(to_json(cat_B_bounds(3, 3))["conjecture_value"] == 4);
}

TEST_CASE("markdown") {
  CHECK(interval_cell(secat_bounds(4, 5)) == "[9, 12]");
  CHECK(interval_cell(secat_bounds(3, 4)) == "6");

  const auto md = sweep_to_markdown(sweep({2, 3}, {2, 3}));
  CHECK(md ==
        "| n | k | cat_F | cat_B | secat |\n"
        "|---|---|---|---|---|\n"
        "| 2 | 2 | 1 | 1 | 1 |\n"
        "| 2 | 3 | 2 | 2 | 2 |\n"
        "| 3 | 2 | 1 | 2 | 2 |\n"
        "| 3 | 3 | 2 | 4 | 4 |\n");

  const auto single = to_markdown(secat_bounds(4, 5));
  CHECK(single.find("| secat | 4 | 5 | 9 | 12 | no |") != std::string::npos);
  CHECK(single.find("`rule.mod2_weight`") != std::string::npos);
}
