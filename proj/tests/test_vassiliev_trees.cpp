#include <doctest.h>

#include "confcat/errors.hpp"
#include "confcat/number_theory.hpp"
#include "confcat/vassiliev_trees.hpp"
#include "confcat/verify.hpp"

using namespace confcat;
using namespace confcat::trees;

TEST_CASE("label tree invariants") {
  const LabelTree t({1, 1, 2, 4});
  CHECK(t.leaves() == 4);
  CHECK(t.edges() == 7);
  CHECK(t.depth() == 3);
  CHECK(LabelTree({1, 1, 1}).depth() == 0);
  CHECK(LabelTree({1, 2, 2}).depth() == 1);

  CHECK_THROWS_AS(LabelTree({2, 2}), DomainError);
  CHECK_THROWS_AS(LabelTree({1, 3}), DomainError);
  CHECK_THROWS_AS(LabelTree({1, 4, 2}), DomainError);
  CHECK_THROWS_AS(LabelTree({1}), DomainError);
}

TEST_CASE("min_edges closed form") {
  const auto a = min_edges(2, 6, Mode::closed_form);
  CHECK(a.value == 8);
  CHECK(a.witness.trees.size() == 2);

  const auto b = min_edges(3, 4, Mode::closed_form);
  CHECK(b.value == 6);
  REQUIRE(b.witness.trees.size() == 1);
  CHECK(b.witness.trees[0].line_counts() == std::vector<int>{1, 1, 1, 4});

  const auto c = min_edges(4, 1, Mode::closed_form);
  CHECK(c.value == 4);
  CHECK(c.witness.trees[0].line_counts() == std::vector<int>{1, 1, 1, 1, 1});

  CHECK_THROWS_AS(min_edges(1, 3, Mode::closed_form), DomainError);
  CHECK_THROWS_AS(min_edges(1, 3, Mode::search), DomainError);
}

TEST_CASE("search agrees with the closed form (n <= 5, k <= 16)") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 16; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto s = min_edges(n, k, Mode::search);
      CHECK(s.value == verify::brute_min_edges(n, k));
      CHECK(s.value == min_edges(n, k, Mode::closed_form).value);
      CHECK(s.witness.total_leaves() == k);
      CHECK(s.witness.total_edges() == s.value);
      CHECK(static_cast<int>(s.witness.trees.size()) >= alpha(k));
    }
  }
}

TEST_CASE("enumerated trees satisfy the line-count invariants") {
  for (int n = 2; n <= 5; ++n) {
    for (int leaves = 1; leaves <= 16; leaves *= 2) {
      const auto all = enumerate_trees(n, leaves);
      CHECK_FALSE(all.empty());
      for (const auto& t : all) {
        CHECK(t.lines() == n + 1);
        CHECK(t.line_counts().front() == 1);
        CHECK(t.leaves() == leaves);
        CHECK(t.edges() >= n);
        CHECK(t.edges() >= (n - 1) + leaves);
        for (int c : t.line_counts()) CHECK(is_power_of_two(c));
      }
    }
  }
  CHECK_THROWS_AS(enumerate_trees(3, 6), DomainError);
}

TEST_CASE("binary partitions need at least alpha(k) parts") {
  CHECK(binary_partitions(4).size() == 4);  // 4, 2+2, 2+1+1, 1+1+1+1
  for (int k = 1; k <= 20; ++k) {
    for (const auto& p : binary_partitions(k)) {
      CHECK(static_cast<int>(p.size()) >= alpha(k));
    }
  }
}

TEST_CASE("cohdim_mod2") {
  CHECK(cohdim_mod2(2, 6) == 4);
  CHECK(cohdim_mod2(3, 2) == 2);
  CHECK(cohdim_mod2(5, 8) == 28);
  CHECK(5 * 8 - min_edges(5, 8, Mode::search).value == 28);
  CHECK(cohdim_mod2(4, 1) == 0);
  CHECK_THROWS_AS(cohdim_mod2(1, 4), DomainError);

  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 16; ++k) {
      CHECK(cohdim_mod2(n, k) <= n * k - (k + n - 1));
    }
  }
}

TEST_CASE("cell_dim_range") {
  CHECK(cell_dim_range(2, 3).min == 4);
  CHECK(cell_dim_range(2, 3).max == 6);
  CHECK(cell_dim_range(3, 1).min == 3);
  CHECK(cell_dim_range(3, 1).max == 3);
  CHECK(cell_dim_range(4, 5).min == 8);
  CHECK(cell_dim_range(4, 5).max == 20);
}

TEST_CASE("dot rendering") {
  const auto dot = to_dot(min_edges(2, 3, Mode::closed_form).witness);
  CHECK(dot ==
        "digraph tree0 {\n"
        "  \"0:0\";\n  \"1:0\";\n  \"2:0\";\n  \"2:1\";\n"
        "  \"0:0\" -> \"1:0\";\n"
        "  \"1:0\" -> \"2:0\";\n  \"1:0\" -> \"2:1\";\n"
        "}\n"
        "digraph tree1 {\n"
        "  \"0:0\";\n  \"1:0\";\n  \"2:0\";\n"
        "  \"0:0\" -> \"1:0\";\n"
        "  \"1:0\" -> \"2:0\";\n"
        "}\n");
}
