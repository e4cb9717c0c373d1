#pragma once

// Labeling-tree collections for the cell structure of the one-point
// compactification of B(R^n,k), restricted to the family that governs the
// mod-2 cohomological dimension: trees whose vertices sit on n+1 horizontal
// lines, with a power-of-two number of vertices per line, non-decreasing
// from the single root down to the leaves.

#include <string>
#include <vector>

namespace confcat::trees {

class LabelTree {
 public:
  /// line_counts[0] is the root line. Throws DomainError unless the counts
  /// start at 1, are powers of two, and never decrease.
  explicit LabelTree(std::vector<int> line_counts);

  /// Chain of n edges with 2^log2_leaves vertices on the bottom line and
  /// no branching above it.
  static LabelTree bottom_branching(int n, int log2_leaves);

  const std::vector<int>& line_counts() const { return counts_; }
  int lines() const { return static_cast<int>(counts_.size()); }
  int leaves() const { return counts_.back(); }
  /// Every non-root vertex has exactly one parent.
  int edges() const;
  /// Highest line beneath which no more branching happens.
  int depth() const;

  bool operator==(const LabelTree&) const = default;

 private:
  std::vector<int> counts_;
};

struct TreeCollection {
  int n = 0;
  int k = 0;
  std::vector<LabelTree> trees;

  int total_edges() const;
  int total_leaves() const;
};

enum class Mode { closed_form, search };

struct MinEdges {
  int value;
  TreeCollection witness;
};

/// Minimal total edge count over collections whose leaves sum to k.
/// closed_form: k + (n-1) alpha(k) with one bottom-branching tree per binary
/// digit. search: exhaustive over every admissible line-count sequence and
/// every multiset of power-of-two leaf counts summing to k.
MinEdges min_edges(int n, int k, Mode mode);

/// All trees on n+1 lines with the given leaf count (a power of two).
std::vector<LabelTree> enumerate_trees(int n, int leaves);

/// All multisets of powers of two summing to k, parts non-increasing.
std::vector<std::vector<int>> binary_partitions(int k);

/// (n-1)(k - alpha(k)); cross-checked against nk - min_edges.
int cohdim_mod2(int n, int k);

struct CellRange {
  int min;
  int max;
};

/// Dimensions of the non-basepoint cells: [k+n-1, k*n].
CellRange cell_dim_range(int n, int k);

/// One digraph per tree; vertices are named "line:index".
std::string to_dot(const TreeCollection& c);

std::string to_string(const LabelTree& t);

}  // namespace confcat::trees
