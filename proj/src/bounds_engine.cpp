#include "confcat/bounds_engine.hpp"

#include <algorithm>

#include "confcat/cohen_ring.hpp"
#include "confcat/errors.hpp"
#include "confcat/number_theory.hpp"
#include "confcat/vassiliev_trees.hpp"

namespace confcat::bounds {

std::string_view to_string(Invariant inv) {
  switch (inv) {
    case Invariant::cat_F: return "cat_F";
    case Invariant::cat_B: return "cat_B";
    case Invariant::secat: return "secat";
  }
  return "?";
}

std::string_view to_string(Direction dir) {
  switch (dir) {
    case Direction::lower: return "lower";
    case Direction::upper: return "upper";
    case Direction::exact: return "exact";
  }
  return "?";
}

Invariant parse_invariant(std::string_view name) {
  for (auto inv : {Invariant::cat_F, Invariant::cat_B, Invariant::secat}) {
    if (to_string(inv) == name) return inv;
  }
  throw DomainError("unknown invariant '" + std::string(name) +
                    "' (expected cat_F, cat_B or secat)");
}

namespace {

void require_nk(int n, int k) {
  if (n < 1) {
    throw DomainError("n must be >= 1 (got n = " + std::to_string(n) + ")");
  }
  if (k < 1) {
    throw DomainError("k must be >= 1 (got k = " + std::to_string(k) + ")");
  }
}

std::string describe(const BoundEvidence& e) {
  return std::string(to_string(e.direction)) + " " + std::to_string(e.value) +
         " from " + e.rule;
}

std::int64_t top_dimension(int n, int k) {
  return static_cast<std::int64_t>(k - 1) * (n - 1);
}

// Knowledge-base predicates and values.

bool single_point(int, int k) { return k == 1; }
bool on_line(int n, int) { return n == 1; }
bool trivial_base(int n, int k) { return n == 1 || k == 1; }
bool ordered_connected(int n, int) { return n >= 2; }
bool two_points(int, int k) { return k == 2; }
bool planar(int n, int) { return n == 2; }
bool planar_six(int n, int k) { return n == 2 && k == 6; }
bool planar_arone(int n, int k) {
  return n == 2 && k >= 2 && !is_prime_power(k) && !is_twice_prime_power(k);
}
bool exact_family(int n, int k) {
  return is_power_of_two(k) || k == 3 || (n % 2 == 1 && is_prime(k));
}

std::int64_t zero(int, int) { return 0; }
std::int64_t k_factorial_minus_one(int, int k) { return factorial(k) - 1; }
std::int64_t k_minus_one(int, int k) { return k - 1; }
std::int64_t k_minus_two(int, int k) { return k - 2; }
std::int64_t n_minus_one(int n, int) { return n - 1; }
std::int64_t four(int, int) { return 4; }
std::int64_t full_top(int n, int k) { return top_dimension(n, k); }

}  // namespace

const std::vector<KnowledgeEntry>& knowledge_base() {
  static const std::vector<KnowledgeEntry> entries = {
      {Invariant::cat_F, "kb.single_point",
       "F(R^n,1) = R^n is contractible, so cat = 0", Direction::exact,
       single_point, zero},
      {Invariant::cat_F, "kb.line_components",
       "F(R,k) is a disjoint union of k! contractible components, so "
       "cat(F(R,k)) = k! - 1",
       Direction::exact, on_line, k_factorial_minus_one},
      {Invariant::cat_F, "kb.ordered_exact",
       "cat(F(R^n,k)) = k - 1 whenever F(R^n,k) is connected (n >= 2)",
       Direction::exact, ordered_connected, k_minus_one},

      {Invariant::cat_B, "kb.contractible_base",
       "B(R,k) and B(R^n,1) = R^n are contractible, so cat = 0",
       Direction::exact, trivial_base, zero},
      {Invariant::cat_B, "kb.two_points",
       "B(R^n,2) ~ RP^{n-1}; cat(RP^{n-1}) = n - 1 (dimension above, mod 2 "
       "cuplength below)",
       Direction::exact, two_points, n_minus_one},
      {Invariant::cat_B, "kb.planar_unordered",
       "cat(B(R^2,k)) = k - 1: cuplength of F(R^2,k), the covering "
       "inequality and the cell-dimension upper bound coincide",
       Direction::exact, planar, k_minus_one},
      {Invariant::cat_B, "kb.unordered_exact_family",
       "cat(B(R^n,k)) = (k-1)(n-1) when k is a power of 2, k = 3, or n is "
       "odd and k is prime",
       Direction::exact, exact_family, full_top},

      {Invariant::secat, "kb.contractible_base",
       "secat <= cat(base) = 0 when the base B(R,k) or B(R^n,1) is "
       "contractible",
       Direction::exact, trivial_base, zero},
      {Invariant::secat, "kb.unordered_exact_family",
       "secat(pi^n_k) = (k-1)(n-1) when k is a power of 2, k = 3, or n is "
       "odd and k is prime",
       Direction::exact, exact_family, full_top},
      {Invariant::secat, "kb.planar_k6",
       "de Concini-Procesi-Salvetti obstruction theory: secat(pi^2_6) < 5",
       Direction::upper, planar_six, four},
      {Invariant::secat, "kb.planar_arone",
       "Arone: secat(pi^2_k) < k - 1 when k is neither a prime power nor "
       "twice a prime power",
       Direction::upper, planar_arone, k_minus_two},
  };
  return entries;
}

namespace {

void append_knowledge(Invariant inv, int n, int k,
                      std::vector<BoundEvidence>& ev) {
  for (const auto& e : knowledge_base()) {
    if (e.invariant != inv || !e.applies(n, k)) continue;
    ev.push_back({e.direction, e.value(n, k), std::string(e.rule),
                  std::string(e.citation)});
  }
}

// cat(F(R^n,k)) <= cat(B(R^n,k)) <= dim of the cell model minus the
// connectivity of the removed skeleton: nk - (k + n - 1) = (k-1)(n-1).
std::int64_t cell_dimension_upper(int n, int k) {
  const auto range = trees::cell_dim_range(n, k);
  return static_cast<std::int64_t>(range.max) - range.min;
}

std::vector<BoundEvidence> secat_lower_rules(int n, int k) {
  std::vector<BoundEvidence> ev;
  if (n < 2) return ev;
  ev.push_back({Direction::lower, trees::cohdim_mod2(n, k), "rule.mod2_weight",
                "every nonzero class of H^*(B(R^n,k);Z/2) is pulled back from "
                "K(Sigma_k,1), so its degree bounds secat from below; the top "
                "such degree is (k - alpha(k))(n-1) (minimal labeling-tree "
                "collection)"});
  if (n == 2 && k >= 2) {
    auto cands = planar_candidates(k);
    auto best = std::max_element(
        cands.begin(), cands.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    ev.push_back({Direction::lower, best->second, "rule.planar_digit_sum",
                  "Vassiliev: k - D_p(k) <= secat(pi^2_k) for every prime p; "
                  "maximum attained at p = " +
                      std::to_string(best->first)});
  }
  if (k % 2 == 1 && is_prime(k)) {
    const std::int64_t v = n % 2 == 1
                               ? static_cast<std::int64_t>(k - 1) * (n - 1)
                               : static_cast<std::int64_t>(k - 1) * (n - 2);
    ev.push_back({Direction::lower, v, "rule.odd_prime_modp",
                  "H^{(p-1)(n-1)}(Sigma_p;Z/p) -> H^{(p-1)(n-1)}(B(R^n,p);Z/p) "
                  "is an isomorphism and nonzero for n odd; for n even the "
                  "class from R^{n-1} gives (p-1)(n-2)"});
  }
  return ev;
}

}  // namespace

BoundReport merge(Invariant inv, int n, int k,
                  std::vector<BoundEvidence> evidence) {
  const BoundEvidence* lo = nullptr;
  const BoundEvidence* hi = nullptr;
  for (const auto& e : evidence) {
    if (e.value < 0) {
      throw InconsistencyError("negative bound from " + e.rule);
    }
    if (e.citation.empty()) {
      throw InconsistencyError("bound from " + e.rule + " has no citation");
    }
    if (e.bounds_below() && (!lo || e.value > lo->value)) lo = &e;
    if (e.bounds_above() && (!hi || e.value < hi->value)) hi = &e;
  }
  const std::string where = std::string(to_string(inv)) + "(n=" +
                            std::to_string(n) + ", k=" + std::to_string(k) +
                            ")";
  if (!lo || !hi) {
    throw InconsistencyError(where + ": missing " +
                             (lo ? "upper" : "lower") + " evidence");
  }
  if (lo->value > hi->value) {
    throw InconsistencyError(where + ": " + describe(*lo) + " exceeds " +
                             describe(*hi));
  }
  BoundReport r{inv, n, k, lo->value, hi->value, lo->value == hi->value,
                std::nullopt, {}};
  r.evidence = std::move(evidence);
  return r;
}

BoundReport cat_F(int n, int k, const EngineOptions& opts) {
  require_nk(n, k);
  std::vector<BoundEvidence> ev;
  if (n >= 2) {
    if (k <= opts.ring_check_max_k) {
      const auto cl = ring::cuplength(ring::make_ring(n, k));
      if (cl.value != k - 1) {
        throw InconsistencyError("cat_F: ring cuplength " +
                                 std::to_string(cl.value) + " != k - 1");
      }
    }
    ev.push_back({Direction::lower, k - 1, "rule.cuplength",
                  "cuplength_Z(F(R^n,k)) = k - 1 (A_{2,1}A_{3,1}...A_{k,1} "
                  "is nonzero) and cuplength <= cat"});
    if (n >= 3) {
      // (n-2)-connected CW model of dimension (k-1)(n-1): cat <= dim/(n-1).
      const std::int64_t connectivity = n - 2;
      ev.push_back({Direction::upper, top_dimension(n, k) / (connectivity + 1),
                    "rule.connectivity_dimension",
                    "F(R^n,k) is (n-2)-connected (Fadell-Neuwirth fibrations) "
                    "with a CW model of dimension (k-1)(n-1); cat <= "
                    "dim/(connectivity+1)"});
    }
    ev.push_back({Direction::upper, cell_dimension_upper(n, k),
                  "rule.covering_upper",
                  "cat(E) <= cat(B) for the connected covering "
                  "F(R^n,k) -> B(R^n,k), and cat(B(R^n,k)) <= (k-1)(n-1)"});
  }
  append_knowledge(Invariant::cat_F, n, k, ev);
  return merge(Invariant::cat_F, n, k, std::move(ev));
}

BoundReport secat_bounds(int n, int k, const EngineOptions& opts) {
  require_nk(n, k);
  std::vector<BoundEvidence> ev = secat_lower_rules(n, k);
  if (n >= 2) {
    ev.push_back({Direction::upper, cell_dimension_upper(n, k),
                  "rule.base_category",
                  "secat(p) <= cat(base); cat(B(R^n,k)) <= nk - (k+n-1) = "
                  "(k-1)(n-1) from the cell range of the one-point "
                  "compactification"});
  }
  if (k == 3 && n >= 2) {
    const auto below = secat_bounds(n - 1, 3, opts);
    ev.push_back({Direction::upper, below.upper + 2,
                  "rule.three_point_recursion",
                  "secat(pi^{n}_3) <= secat(pi^{n-1}_3) + 2 (split B(R^n,3) "
                  "by the number of projected points)"});
  }
  append_knowledge(Invariant::secat, n, k, ev);
  return merge(Invariant::secat, n, k, std::move(ev));
}

BoundReport cat_B_bounds(int n, int k, const EngineOptions& opts) {
  require_nk(n, k);
  std::vector<BoundEvidence> ev;
  for (auto& e : secat_lower_rules(n, k)) {
    e.rule += "+secat_le_cat";
    e.citation += "; secat(p) <= cat(base)";
    ev.push_back(std::move(e));
  }
  if (n >= 2) {
    ev.push_back({Direction::lower, cat_F(n, k, opts).lower, "rule.covering",
                  "cat(E) <= cat(B) for the covering F(R^n,k) -> B(R^n,k) "
                  "with F(R^n,k) path-connected"});
    ev.push_back({Direction::upper, cell_dimension_upper(n, k),
                  "rule.cell_dimension",
                  "cells of the one-point compactification other than the "
                  "basepoint have dimension in [k+n-1, kn]; removing a "
                  "point from an m-dimensional complex leaves cat <= "
                  "nk - (k+n-1) = (k-1)(n-1)"});
  }
  append_knowledge(Invariant::cat_B, n, k, ev);
  auto r = merge(Invariant::cat_B, n, k, std::move(ev));
  r.conjecture_value = top_dimension(n, k);
  return r;
}

BoundReport evaluate(Invariant inv, int n, int k, const EngineOptions& opts) {
  switch (inv) {
    case Invariant::cat_F: return cat_F(n, k, opts);
    case Invariant::cat_B: return cat_B_bounds(n, k, opts);
    case Invariant::secat: return secat_bounds(n, k, opts);
  }
  throw DomainError("unknown invariant");
}

std::vector<std::pair<int, int>> planar_candidates(int k) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p <= k; ++p) {
    if (is_prime(p)) out.emplace_back(p, k - digit_sum(p, k));
  }
  return out;
}

std::vector<BoundReport> sweep(Range n_range, Range k_range,
                               const EngineOptions& opts) {
  if (n_range.first > n_range.last || k_range.first > k_range.last) {
    throw DomainError("sweep: empty range");
  }
  require_nk(n_range.first, k_range.first);
  std::vector<BoundReport> out;
  for (auto inv : {Invariant::cat_F, Invariant::cat_B, Invariant::secat}) {
    for (int n = n_range.first; n <= n_range.last; ++n) {
      for (int k = k_range.first; k <= k_range.last; ++k) {
        out.push_back(evaluate(inv, n, k, opts));
      }
    }
  }
  return out;
}

}  // namespace confcat::bounds
