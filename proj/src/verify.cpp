#include "confcat/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "confcat/bounds_engine.hpp"
#include "confcat/number_theory.hpp"
#include "confcat/vassiliev_trees.hpp"

namespace confcat::verify {

using ring::Element;
using ring::GeneratorIndex;
using ring::RingContext;
using ring::Word;

std::vector<std::int64_t> product_formula_ranks(int k) {
  std::vector<std::int64_t> poly{1};
  for (int i = 2; i <= k; ++i) {
    std::vector<std::int64_t> next(poly.size() + 1, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d] += poly[d];
      next[d + 1] += poly[d] * (i - 1);
    }
    poly = std::move(next);
  }
  return poly;
}

// ---------------------------------------------------------------------------
// Confluence

namespace {

void add_unique(std::vector<Element>& set, const Element& e) {
  if (std::find(set.begin(), set.end(), e) == set.end()) set.push_back(e);
}

std::vector<Element> reductions(const RingContext& ctx, const Word& word,
                                std::map<Word, std::vector<Element>>& memo) {
  if (auto it = memo.find(word); it != memo.end()) return it->second;

  std::vector<Element> results;
  if (ring::has_distinct_tops(word)) {
    auto s = ring::sort_admissible(ctx, word);
    Element e(ctx);
    e.add_admissible(s.word, s.coefficient);
    results.push_back(std::move(e));
  } else {
    for (std::size_t a = 0; a < word.size(); ++a) {
      for (std::size_t b = a + 1; b < word.size(); ++b) {
        if (word[a].i != word[b].i) continue;
        for (auto approach : {ring::Approach::pull_right_left,
                              ring::Approach::push_left_right}) {
          std::vector<Element> partial{Element(ctx)};
          for (const auto& t :
               ring::rewrite_step(ctx, word, a, b, approach)) {
            std::vector<Element> next;
            for (const auto& sub : reductions(ctx, t.word, memo)) {
              for (const auto& acc : partial) {
                add_unique(next, acc + sub.scaled(t.coefficient));
              }
            }
            partial = std::move(next);
          }
          for (const auto& p : partial) add_unique(results, p);
        }
      }
    }
  }
  memo.emplace(word, results);
  return results;
}

std::vector<GeneratorIndex> generators(const RingContext& ctx) {
  std::vector<GeneratorIndex> gens;
  for (int i = 2; i <= ctx.k(); ++i) {
    for (int j = 1; j < i; ++j) gens.push_back({i, j});
  }
  return gens;
}

}  // namespace

std::vector<Element> all_reductions(const RingContext& ctx, const Word& word) {
  std::map<Word, std::vector<Element>> memo;
  return reductions(ctx, word, memo);
}

std::vector<Word> all_words(const RingContext& ctx, int length) {
  const auto gens = generators(ctx);
  std::vector<Word> out{{}};
  for (int step = 0; step < length; ++step) {
    std::vector<Word> next;
    for (const auto& w : out) {
      for (const auto& g : gens) {
        Word x = w;
        x.push_back(g);
        next.push_back(std::move(x));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Word> all_multiset_words(const RingContext& ctx, int length) {
  const auto gens = generators(ctx);
  std::vector<Word> out;
  Word cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (std::size_t g = from; g < gens.size(); ++g) {
      cur.push_back(gens[g]);
      rec(g);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::int64_t span_rank(const RingContext& ctx, int q) {
  constexpr std::int64_t mod = 2147483647;
  auto pow_mod = [](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b %= mod;
    for (; e > 0; e >>= 1, b = b * b % mod) {
      if (e & 1) r = r * b % mod;
    }
    return r;
  };

  std::map<Word, std::size_t> column;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> sparse;
  for (const auto& w : all_multiset_words(ctx, q)) {
    auto& entries = sparse.emplace_back();
    const Element nf = ring::normal_form(ctx, w);
    for (const auto& [m, c] : nf.terms()) {
      auto it = column.try_emplace(m, column.size()).first;
      entries.emplace_back(it->second, ((c % mod) + mod) % mod);
    }
  }
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& entries : sparse) {
    auto& row = rows.emplace_back(column.size(), 0);
    for (auto [col, v] : entries) row[col] = v;
  }

  std::int64_t rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < column.size() && pivot_row < rows.size();
       ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    const std::int64_t inv = pow_mod(rows[pivot_row][col], mod - 2);
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const std::int64_t f = rows[r][col] * inv % mod;
      for (std::size_t c = col; c < column.size(); ++c) {
        rows[r][c] = ((rows[r][c] - f * rows[pivot_row][c]) % mod + mod) % mod;
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Number-theoretic and tree oracles

namespace {

std::vector<int> primes_up_to(int k) {
  std::vector<bool> composite(static_cast<std::size_t>(std::max(k, 1)) + 1);
  std::vector<int> primes;
  for (int p = 2; p <= k; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (int m = 2 * p; m <= k; m += p) composite[static_cast<std::size_t>(m)] = true;
  }
  return primes;
}

}  // namespace

bool brute_prime_power(int k) {
  for (int p : primes_up_to(k)) {
    for (long long v = p; v <= k; v *= p) {
      if (v == k) return true;
    }
  }
  return false;
}

bool brute_twice_prime_power(int k) {
  for (int p : primes_up_to(k)) {
    for (long long v = p; 2 * v <= k; v *= p) {
      if (2 * v == k) return true;
    }
  }
  return false;
}

int brute_min_edges(int n, int k) {
  // Choose a multiplicity for every power of two 2^l <= k.
  std::vector<int> powers;
  for (int p = 1; p <= k; p *= 2) powers.push_back(p);
  int best = -1;
  std::vector<int> mult(powers.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx == powers.size()) {
      if (left != 0) return;
      int trees = 0;
      for (int m : mult) trees += m;
      const int edges = k + (n - 1) * trees;
      if (best < 0 || edges < best) best = edges;
      return;
    }
    for (int m = 0; m * powers[idx] <= left; ++m) {
      mult[idx] = m;
      rec(idx + 1, left - m * powers[idx]);
    }
    mult[idx] = 0;
  };
  rec(0, k);
  return best;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

class Failures {
 public:
  void note(const std::string& what) {
    ++count_;
    if (count_ <= 5) msgs_ << (count_ > 1 ? "; " : "") << what;
  }
  SuiteResult result(std::string name, std::size_t checks) const {
    std::ostringstream os;
    if (count_ == 0) {
      os << checks << " checks";
    } else {
      os << count_ << " of " << checks << " checks failed: " << msgs_.str();
    }
    return {std::move(name), count_ == 0, os.str()};
  }

 private:
  std::size_t count_ = 0;
  std::ostringstream msgs_;
};

std::string nk(int n, int k) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
}

}  // namespace

SuiteResult confluence_suite(const VerifyOptions& opts) {
  Failures f;
  std::size_t checks = 0;
  for (int n : {2, 3}) {
    for (int k = 1; k <= std::min(4, opts.max_k); ++k) {
      const RingContext ctx(n, k);
      std::map<Word, std::vector<Element>> memo;
      for (int len = 0; len <= 3; ++len) {
        for (const auto& w : all_words(ctx, len)) {
          ++checks;
          const auto all = reductions(ctx, w, memo);
          if (all.size() != 1) {
            f.note(ring::to_string(w) + " " + nk(n, k) + " has " +
                   std::to_string(all.size()) + " normal forms");
          } else if (!(all.front() == ring::normal_form(ctx, w))) {
            f.note(ring::to_string(w) + " " + nk(n, k) +
                   ": normal_form disagrees with replayed orders");
          }
        }
      }
    }
  }
  return f.result("confluence", checks);
}

SuiteResult rank_suite(const VerifyOptions& opts) {
  Failures f;
  std::size_t checks = 0;
  for (int n : {2, 3}) {
    for (int k = 1; k <= opts.max_k; ++k) {
      const RingContext ctx(n, k);
      const auto expected = product_formula_ranks(k);
      const auto table = ring::poincare_table(ctx);
      ++checks;
      if (table.size() != expected.size()) {
        f.note("table length " + nk(n, k));
        continue;
      }
      for (std::size_t q = 0; q < table.size(); ++q) {
        ++checks;
        if (table[q].rank != expected[q] ||
            table[q].degree != static_cast<int>(q) * (n - 1)) {
          f.note("rank at q=" + std::to_string(q) + " " + nk(n, k));
        }
        if (k <= std::min(5, opts.max_k)) {
          ++checks;
          if (span_rank(ctx, static_cast<int>(q)) != expected[q]) {
            f.note("span rank at q=" + std::to_string(q) + " " + nk(n, k));
          }
        }
      }
    }
  }
  return f.result("rank-vs-product-formula", checks);
}

SuiteResult total_rank_suite(const VerifyOptions& opts) {
  Failures f;
  std::size_t checks = 0;
  std::int64_t fact = 1;
  for (int k = 1; k <= opts.max_k; ++k) {
    fact *= k;
    for (int n : {2, 3}) {
      ++checks;
      std::int64_t total = 0;
      for (const auto& row : ring::poincare_table(RingContext(n, k))) {
        total += row.rank;
      }
      if (total != fact) f.note("total rank " + nk(n, k));
    }
  }
  return f.result("total-rank-equals-k!", checks);
}

SuiteResult relation_suite(const VerifyOptions& opts) {
  Failures f;
  std::size_t checks = 0;
  for (int n : {2, 3}) {
    for (int k = 2; k <= std::min(6, opts.max_k); ++k) {
      const RingContext ctx(n, k);
      for (int i = 2; i <= k; ++i) {
        for (int j = 1; j < i; ++j) {
          ++checks;
          if (!ring::normal_form(ctx, {{i, j}, {i, j}}).is_zero()) {
            f.note("square of " + ring::to_string(GeneratorIndex{i, j}));
          }
          for (int l = j + 1; l < i; ++l) {
            ++checks;
            const Element lhs = ring::normal_form(ctx, {{i, j}, {i, l}});
            const Element a = ring::generator(ctx, l, j);
            const Element rhs =
                a * (ring::generator(ctx, i, l) - ring::generator(ctx, i, j));
            if (!(lhs == rhs)) {
              f.note("three-term relation (" + std::to_string(i) + "," +
                     std::to_string(j) + "," + std::to_string(l) + ") " +
                     nk(n, k));
            }
          }
        }
      }
      ++checks;
      const auto cl = ring::cuplength(ctx);
      if (cl.value != k - 1 ||
          ring::normal_form(ctx, cl.witness.factors).is_zero()) {
        f.note("cuplength " + nk(n, k));
      }
      for (const auto& w : all_multiset_words(ctx, k)) {
        ++checks;
        if (!ring::normal_form(ctx, w).is_zero()) {
          f.note("product of k generators " + ring::to_string(w));
        }
      }
    }
  }
  return f.result("relations-and-cuplength", checks);
}

SuiteResult ring_property_suite(const VerifyOptions& opts) {
  Failures f;
  std::size_t checks = 0;
  std::mt19937_64 rng(opts.seed);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  for (int n : {2, 3}) {
    for (int k = 2; k <= std::min(5, opts.max_k); ++k) {
      const RingContext ctx(n, k);
      auto random_homogeneous = [&]() {
        const int q = pick(0, k - 1);
        const auto b = ring::basis(ctx, q);
        Element e(ctx);
        for (int t = pick(1, 3); t > 0; --t) {
          const auto& m = b[static_cast<std::size_t>(
              pick(0, static_cast<int>(b.size()) - 1))];
          e.add_admissible(m.factors, pick(-3, 3));
        }
        return e;
      };
      auto random_generator = [&]() {
        const int i = pick(2, k);
        return ring::generator(ctx, i, pick(1, i - 1));
      };
      for (int trial = 0; trial < 100; ++trial) {
        const Element a = random_homogeneous();
        const Element b = random_homogeneous();
        if (!a.is_zero() && !b.is_zero()) {
          ++checks;
          const int da = *a.degree();
          const int db = *b.degree();
          const Element ba = (b * a).scaled((da * db) % 2 == 0 ? 1 : -1);
          if (!((a * b) - ba).is_zero()) {
            f.note("graded commutativity " + ring::to_string(a) + " , " +
                   ring::to_string(b));
          }
        }
        ++checks;
        const Element x = random_generator();
        const Element y = random_generator();
        const Element z = random_generator();
        if (!((x * y) * z == x * (y * z))) {
          f.note("associativity " + ring::to_string(x) + ring::to_string(y) +
                 ring::to_string(z));
        }
      }
    }
  }
  return f.result("ring-properties (seed " + std::to_string(opts.seed) + ")",
                  checks);
}

SuiteResult tree_suite(const VerifyOptions&) {
  Failures f;
  std::size_t checks = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 16; ++k) {
      ++checks;
      const int formula = k + (n - 1) * alpha(k);
      const auto searched = trees::min_edges(n, k, trees::Mode::search);
      const auto closed = trees::min_edges(n, k, trees::Mode::closed_form);
      if (searched.value != formula || closed.value != formula ||
          brute_min_edges(n, k) != formula) {
        f.note("min_edges " + nk(n, k));
      }
      if (searched.witness.total_leaves() != k ||
          searched.witness.total_edges() != searched.value ||
          static_cast<int>(searched.witness.trees.size()) < alpha(k)) {
        f.note("search witness " + nk(n, k));
      }
      const int cohdim = (n - 1) * (k - alpha(k));
      if (trees::cohdim_mod2(n, k) != cohdim || n * k - searched.value != cohdim) {
        f.note("cohdim " + nk(n, k));
      }
    }
  }
  return f.result("tree-search-vs-closed-form", checks);
}

SuiteResult bound_consistency_suite(const VerifyOptions&) {
  Failures f;
  std::size_t checks = 0;
  try {
    for (int n = 1; n <= 5; ++n) {
      for (int k = 1; k <= 12; ++k) {
        ++checks;
        const auto s = bounds::secat_bounds(n, k);
        const auto b = bounds::cat_B_bounds(n, k);
        const auto c = bounds::cat_F(n, k);
        const std::int64_t weight =
            static_cast<std::int64_t>(k - alpha(k)) * (n - 1);
        const std::int64_t top = static_cast<std::int64_t>(k - 1) * (n - 1);
        if (!(weight <= s.lower && s.lower <= s.upper && s.upper <= b.upper &&
              b.upper <= top && b.lower <= b.upper && c.lower <= c.upper)) {
          f.note("bound chain " + nk(n, k));
        }
        if (n == 2 && k >= 2) {
          ++checks;
          int best = 0;
          for (auto [p, v] : bounds::planar_candidates(k)) best = std::max(best, v);
          const bool arone = std::any_of(
              s.evidence.begin(), s.evidence.end(),
              [](const auto& e) { return e.rule == "kb.planar_arone"; });
          const bool expect_arone =
              !brute_prime_power(k) && !brute_twice_prime_power(k);
          if (s.lower != best || (best == k - 1) != brute_prime_power(k) ||
              arone != expect_arone) {
            f.note("planar sector k=" + std::to_string(k));
          }
        }
      }
    }
  } catch (const std::exception& e) {
    f.note(std::string("engine raised: ") + e.what());
  }
  return f.result("bound-consistency-sweep", checks);
}

std::vector<SuiteResult> run_all(const VerifyOptions& opts) {
  return {confluence_suite(opts),     rank_suite(opts),
          total_rank_suite(opts),     relation_suite(opts),
          ring_property_suite(opts),  tree_suite(opts),
          bound_consistency_suite(opts)};
}

}  // namespace confcat::verify
