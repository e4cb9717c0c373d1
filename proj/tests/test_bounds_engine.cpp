#include <doctest.h>

#include <algorithm>

#include "confcat/bounds_engine.hpp"
#include "confcat/errors.hpp"
#include "confcat/number_theory.hpp"

using namespace confcat;
using namespace confcat::bounds;

namespace {

void check_exact(const BoundReport& r, std::int64_t v) {
  CAPTURE(r.n);
  CAPTURE(r.k);
  CHECK(r.exact);
  CHECK(r.lower == v);
  CHECK(r.upper == v);
}

bool has_rule(const BoundReport& r, std::string_view rule) {
  return std::any_of(r.evidence.begin(), r.evidence.end(),
                     [&](const BoundEvidence& e) { return e.rule == rule; });
}

BoundReport derived_only(const BoundReport& r) {
  std::vector<BoundEvidence> ev;
  for (const auto& e : r.evidence) {
    if (e.is_derived()) ev.push_back(e);
  }
  return merge(r.invariant, r.n, r.k, std::move(ev));
}

}  // namespace

TEST_CASE("cat_F") {
  check_exact(cat_F(3, 4), 3);
  check_exact(cat_F(1, 3), 5);
  check_exact(cat_F(7, 1), 0);
  check_exact(cat_F(2, 5), 4);
  CHECK_THROWS_AS(cat_F(0, 3), DomainError);
  CHECK_THROWS_AS(cat_F(3, 0), DomainError);
  CHECK_THROWS_AS(cat_F(1, 25), OverflowError);

  // The cuplength / connectivity argument closes the interval by itself.
  for (int n = 3; n <= 6; ++n) {
    for (int k = 3; k <= 10; ++k) check_exact(derived_only(cat_F(n, k)), k - 1);
  }
}

TEST_CASE("secat_bounds") {
  check_exact(secat_bounds(3, 4), 6);
  check_exact(secat_bounds(2, 6), 4);
  check_exact(secat_bounds(3, 5), 8);
  check_exact(secat_bounds(1, 9), 0);

  const auto r = secat_bounds(4, 5);
  CHECK_FALSE(r.exact);
  CHECK(r.lower == 9);
  CHECK(r.upper == 12);
  CHECK(has_rule(r, "rule.mod2_weight"));
  CHECK(has_rule(r, "rule.odd_prime_modp"));
  CHECK_FALSE(r.conjecture_value.has_value());

  const auto six = secat_bounds(2, 6);
  CHECK(has_rule(six, "kb.planar_k6"));
  CHECK_FALSE(has_rule(six, "kb.planar_arone"));
  CHECK(has_rule(secat_bounds(2, 12), "kb.planar_arone"));
}

TEST_CASE("cat_B_bounds") {
  check_exact(cat_B_bounds(2, 6), 5);
  check_exact(cat_B_bounds(5, 2), 4);
  check_exact(cat_B_bounds(3, 3), 4);

  const auto r = cat_B_bounds(4, 5);
  CHECK_FALSE(r.exact);
  CHECK(r.lower == 9);
  CHECK(r.upper == 12);
  const auto cov = std::find_if(r.evidence.begin(), r.evidence.end(),
                                [](const auto& e) { return e.rule == "rule.covering"; });
  REQUIRE(cov != r.evidence.end());
  CHECK(cov->value == 4);
  CHECK(r.conjecture_value == 12);
}

TEST_CASE("unordered exact family") {
  for (int n = 1; n <= 7; ++n) {
    for (int k : {1, 2, 3, 4, 8, 16}) {
      const std::int64_t v = static_cast<std::int64_t>(k - 1) * (n - 1);
      check_exact(secat_bounds(n, k), v);
      check_exact(cat_B_bounds(n, k), v);
    }
    if (n % 2 == 1) {
      for (int p : {5, 7, 11, 13}) {
        check_exact(secat_bounds(n, p), static_cast<std::int64_t>(p - 1) * (n - 1));
      }
    }
  }
}

TEST_CASE("three-point recursion never undercuts the exact value") {
  for (int n = 2; n <= 12; ++n) {
    const auto r = secat_bounds(n, 3);
    const auto it = std::find_if(r.evidence.begin(), r.evidence.end(), [](const auto& e) {
      return e.rule == "rule.three_point_recursion";
    });
    REQUIRE(it != r.evidence.end());
    CHECK(it->value >= 2 * (n - 1));
  }
}

TEST_CASE("conjecture is annotation only") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= 12; ++k) {
      for (const auto& r : {cat_F(n, k), cat_B_bounds(n, k), secat_bounds(n, k)}) {
        for (const auto& e : r.evidence) {
          CHECK(e.citation.find("conjecture") == std::string::npos);
          CHECK_FALSE(e.citation.empty());
          CHECK(e.value >= 0);
        }
        CHECK(r.lower <= r.upper);
        CHECK(r.exact == (r.lower == r.upper));
      }
    }
  }
}

TEST_CASE("planar candidates contain the mod 2 weight") {
  for (int k = 2; k <= 40; ++k) {
    const auto cands = planar_candidates(k);
    REQUIRE_FALSE(cands.empty());
    CHECK(cands.front().first == 2);
    CHECK(cands.front().second == k - alpha(k));
    for (auto [p, v] : cands) CHECK(is_prime(p));
  }
}

TEST_CASE("merge") {
  const auto r = merge(Invariant::secat, 2, 2,
                       {{Direction::lower, 1, "rule.a", "x"},
                        {Direction::lower, 0, "rule.b", "y"},
                        {Direction::upper, 3, "rule.c", "z"},
                        {Direction::upper, 1, "rule.d", "w"}});
  CHECK(r.lower == 1);
  CHECK(r.upper == 1);
  CHECK(r.exact);

  CHECK_THROWS_WITH_AS(merge(Invariant::secat, 2, 2,
                             {{Direction::lower, 3, "rule.a", "x"},
                              {Direction::upper, 2, "rule.b", "y"}}),
                       "secat(n=2, k=2): lower 3 from rule.a exceeds upper 2 from rule.b",
                       InconsistencyError);
  CHECK_THROWS_AS(merge(Invariant::secat, 2, 2, {{Direction::lower, 3, "rule.a", "x"}}),
                  InconsistencyError);
  CHECK_THROWS_AS(merge(Invariant::secat, 2, 2, {{Direction::exact, 3, "rule.a", ""}}),
                  InconsistencyError);
}

TEST_CASE("sweep") {
  const auto planar = sweep({2, 2}, {2, 4});
  std::vector<std::int64_t> cat_b;
  for (const auto& r : planar) {
    if (r.invariant == Invariant::cat_B) {
      CHECK(r.exact);
      cat_b.push_back(r.lower);
    }
  }
  CHECK(cat_b == std::vector<std::int64_t>{1, 2, 3});

  for (const auto& r : sweep({1, 1}, {1, 9})) {
    if (r.invariant == Invariant::cat_B) check_exact(r, 0);
  }

  const auto big = sweep({2, 4}, {2, 8});
  CHECK(big.size() == 63);
  for (auto inv : {Invariant::cat_F, Invariant::cat_B, Invariant::secat}) {
    CHECK(std::count_if(big.begin(), big.end(),
                        [&](const auto& r) { return r.invariant == inv; }) == 21);
  }
  for (const auto& r : big) CHECK(r.lower <= r.upper);
  // Deterministic order: invariant, then n, then k.
  CHECK(big.front().invariant == Invariant::cat_F);
  CHECK(big[1].k == 3);
  CHECK(big.back().invariant == Invariant::secat);

  CHECK_THROWS_AS(sweep({3, 2}, {1, 2}), DomainError);
}

TEST_CASE("invariant names") {
  CHECK(parse_invariant("secat") == Invariant::secat);
  CHECK(to_string(Invariant::cat_B) == "cat_B");
  CHECK_THROWS_AS(parse_invariant("cat"), DomainError);
}
