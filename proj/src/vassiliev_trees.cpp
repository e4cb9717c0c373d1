#include "confcat/vassiliev_trees.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "confcat/errors.hpp"
#include "confcat/number_theory.hpp"

namespace confcat::trees {

namespace {

void require_n(int n, const char* op) {
  if (n < 2) {
    throw DomainError(std::string(op) + ": n must be >= 2 (got n = " +
                      std::to_string(n) + ")");
  }
}

void require_k(int k, const char* op) {
  if (k < 1) {
    throw DomainError(std::string(op) + ": k must be >= 1 (got k = " +
                      std::to_string(k) + ")");
  }
}

}  // namespace

LabelTree::LabelTree(std::vector<int> line_counts)
    : counts_(std::move(line_counts)) {
  if (counts_.size() < 2) throw DomainError("tree: needs at least two lines");
  if (counts_.front() != 1) throw DomainError("tree: root line must hold 1");
  for (std::size_t t = 0; t < counts_.size(); ++t) {
    if (!is_power_of_two(counts_[t])) {
      throw DomainError("tree: line " + std::to_string(t) +
                        " count is not a power of two");
    }
    if (t > 0 && counts_[t] < counts_[t - 1]) {
      throw DomainError("tree: line " + std::to_string(t) +
                        " has fewer vertices than the line above");
    }
  }
}

LabelTree LabelTree::bottom_branching(int n, int log2_leaves) {
  require_n(n, "tree");
  std::vector<int> counts(static_cast<std::size_t>(n) + 1, 1);
  counts.back() = 1 << log2_leaves;
  return LabelTree(std::move(counts));
}

int LabelTree::edges() const {
  int e = 0;
  for (std::size_t t = 1; t < counts_.size(); ++t) e += counts_[t];
  return e;
}

int LabelTree::depth() const {
  int d = lines() - 1;
  while (d > 0 && counts_[static_cast<std::size_t>(d) - 1] == leaves()) --d;
  return d;
}

int TreeCollection::total_edges() const {
  int e = 0;
  for (const auto& t : trees) e += t.edges();
  return e;
}

int TreeCollection::total_leaves() const {
  int s = 0;
  for (const auto& t : trees) s += t.leaves();
  return s;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void extend_lines(int n, int target_exp, std::vector<int>& exps,
                  std::vector<LabelTree>& out) {
  if (static_cast<int>(exps.size()) == n) {
    if (exps.back() != target_exp) return;
    std::vector<int> counts{1};
    for (int e : exps) counts.push_back(1 << e);
    out.emplace_back(std::move(counts));
    return;
  }
  const int lo = exps.empty() ? 0 : exps.back();
  for (int e = lo; e <= target_exp; ++e) {
    exps.push_back(e);
    extend_lines(n, target_exp, exps, out);
    exps.pop_back();
  }
}

void extend_partition(int remaining, int max_part, std::vector<int>& parts,
                      std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(parts);
    return;
  }
  for (int p = max_part; p >= 1; p /= 2) {
    if (p > remaining) continue;
    parts.push_back(p);
    extend_partition(remaining - p, p, parts, out);
    parts.pop_back();
  }
}

int floor_log2(int m) { return 31 - __builtin_clz(static_cast<unsigned>(m)); }

}  // namespace

std::vector<LabelTree> enumerate_trees(int n, int leaves) {
  require_n(n, "enumerate_trees");
  if (!is_power_of_two(leaves)) {
    throw DomainError("enumerate_trees: leaf count must be a power of two");
  }
  std::vector<LabelTree> out;
  std::vector<int> exps;
  extend_lines(n, floor_log2(leaves), exps, out);
  return out;
}

std::vector<std::vector<int>> binary_partitions(int k) {
  require_k(k, "binary_partitions");
  std::vector<std::vector<int>> out;
  std::vector<int> parts;
  extend_partition(k, 1 << floor_log2(k), parts, out);
  return out;
}

// ---------------------------------------------------------------------------
// Minimisation

namespace {

MinEdges closed_form(int n, int k) {
  TreeCollection c{n, k, {}};
  for (int l = floor_log2(k); l >= 0; --l) {
    if (k & (1 << l)) c.trees.push_back(LabelTree::bottom_branching(n, l));
  }
  const int value = c.total_edges();
  if (value != k + (n - 1) * alpha(k)) {
    throw InconsistencyError("min_edges: closed-form witness has " +
                             std::to_string(value) + " edges");
  }
  return {value, std::move(c)};
}

MinEdges exhaustive(int n, int k) {
  // Cheapest tree for every possible leaf count, found by enumeration.
  std::vector<LabelTree> cheapest;
  for (int leaves = 1; leaves <= k; leaves *= 2) {
    auto all = enumerate_trees(n, leaves);
    auto best = std::min_element(
        all.begin(), all.end(),
        [](const LabelTree& a, const LabelTree& b) { return a.edges() < b.edges(); });
    cheapest.push_back(*best);
  }

  MinEdges result{std::numeric_limits<int>::max(), {n, k, {}}};
  for (const auto& parts : binary_partitions(k)) {
    TreeCollection c{n, k, {}};
    for (int p : parts) {
      c.trees.push_back(cheapest[static_cast<std::size_t>(floor_log2(p))]);
    }
    const int e = c.total_edges();
    if (e < result.value) result = {e, std::move(c)};
  }
  return result;
}

}  // namespace

MinEdges min_edges(int n, int k, Mode mode) {
  require_n(n, "min_edges");
  require_k(k, "min_edges");
  return mode == Mode::closed_form ? closed_form(n, k) : exhaustive(n, k);
}

int cohdim_mod2(int n, int k) {
  require_n(n, "cohdim_mod2");
  require_k(k, "cohdim_mod2");
  if (k == 1) return 0;
  const int by_formula = (n - 1) * (k - alpha(k));
  const int by_edges = n * k - min_edges(n, k, Mode::closed_form).value;
  if (by_formula != by_edges) {
    throw InconsistencyError("cohdim_mod2: formula gives " +
                             std::to_string(by_formula) + ", edge count gives " +
                             std::to_string(by_edges));
  }
  return by_formula;
}

CellRange cell_dim_range(int n, int k) {
  require_n(n, "cell_dim_range");
  require_k(k, "cell_dim_range");
  return {k + n - 1, k * n};
}

// ---------------------------------------------------------------------------
// Output

std::string to_string(const LabelTree& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.line_counts().size(); ++i) {
    if (i) os << ",";
    os << t.line_counts()[i];
  }
  os << ")";
  return os.str();
}

std::string to_dot(const TreeCollection& c) {
  std::ostringstream os;
  for (std::size_t idx = 0; idx < c.trees.size(); ++idx) {
    const auto& counts = c.trees[idx].line_counts();
    os << "digraph tree" << idx << " {\n";
    for (std::size_t line = 0; line < counts.size(); ++line) {
      for (int v = 0; v < counts[line]; ++v) {
        os << "  \"" << line << ":" << v << "\";\n";
      }
    }
    for (std::size_t line = 1; line < counts.size(); ++line) {
      // Children of one parent are contiguous on the line below.
      const int fan = counts[line] / counts[line - 1];
      for (int v = 0; v < counts[line]; ++v) {
        os << "  \"" << line - 1 << ":" << v / fan << "\" -> \"" << line
           << ":" << v << "\";\n";
      }
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace confcat::trees
