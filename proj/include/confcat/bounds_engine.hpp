#pragma once

// Rule engine for certified intervals on cat(F(R^n,k)), cat(B(R^n,k)) and
// secat of the covering F(R^n,k) -> B(R^n,k). Every bound carries the rule
// that produced it and a citation describing the underlying result.
//
// Rule identifiers starting with "rule." are derived by the engine from
// general category theory plus computed invariants; identifiers starting
// with "kb." are imported results stored as data.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace confcat::bounds {

enum class Invariant { cat_F, cat_B, secat };
enum class Direction { lower, upper, exact };

std::string_view to_string(Invariant inv);
std::string_view to_string(Direction dir);
/// Throws DomainError on unknown names.
Invariant parse_invariant(std::string_view name);

struct BoundEvidence {
  Direction direction;
  std::int64_t value;
  std::string rule;
  std::string citation;

  bool is_derived() const { return rule.rfind("rule.", 0) == 0; }
  bool bounds_below() const { return direction != Direction::upper; }
  bool bounds_above() const { return direction != Direction::lower; }
};

struct BoundReport {
  Invariant invariant;
  int n;
  int k;
  std::int64_t lower;
  std::int64_t upper;
  bool exact;
  /// Conjectured value of cat(B); annotation only, never used as evidence.
  std::optional<std::int64_t> conjecture_value;
  std::vector<BoundEvidence> evidence;
};

/// Merges evidence into an interval. Throws InconsistencyError naming both
/// items if the best lower bound exceeds the best upper bound.
BoundReport merge(Invariant inv, int n, int k,
                  std::vector<BoundEvidence> evidence);

struct KnowledgeEntry {
  Invariant invariant;
  std::string_view rule;
  std::string_view citation;
  Direction direction;
  bool (*applies)(int n, int k);
  std::int64_t (*value)(int n, int k);
};

/// Imported results, immutable.
const std::vector<KnowledgeEntry>& knowledge_base();

struct EngineOptions {
  /// cat_F cross-checks the cuplength against the ring for k up to this.
  int ring_check_max_k = 8;
};

BoundReport cat_F(int n, int k, const EngineOptions& opts = {});
BoundReport cat_B_bounds(int n, int k, const EngineOptions& opts = {});
BoundReport secat_bounds(int n, int k, const EngineOptions& opts = {});
BoundReport evaluate(Invariant inv, int n, int k,
                     const EngineOptions& opts = {});

/// Candidate planar lower bounds k - D_p(k) for every prime p <= k.
std::vector<std::pair<int, int>> planar_candidates(int k);

struct Range {
  int first;
  int last;
};

/// Reports ordered by invariant (cat_F, cat_B, secat), then n, then k.
std::vector<BoundReport> sweep(Range n_range, Range k_range,
                               const EngineOptions& opts = {});

}  // namespace confcat::bounds
