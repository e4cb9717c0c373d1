#pragma once

// Independent oracles and the self-verification suites behind `confcat
// verify`. The oracles here deliberately avoid the code paths they check:
// ranks come from polynomial expansion, confluence from replaying every
// rewrite order, prime powers from explicit enumeration of p^l.

#include <cstdint>
#include <string>
#include <vector>

#include "confcat/cohen_ring.hpp"

namespace confcat::verify {

/// Coefficients of prod_{i=2}^{k} (1 + (i-1) t), index = power of t.
std::vector<std::int64_t> product_formula_ranks(int k);

/// Every normal form reachable from the word under any choice of repeated
/// pair and approach direction at every step. Confluence means size 1.
std::vector<ring::Element> all_reductions(const ring::RingContext& ctx,
                                          const ring::Word& word);

/// All words of the given length over the generators of ctx.
std::vector<ring::Word> all_words(const ring::RingContext& ctx, int length);

/// Non-decreasing words (one representative per multiset of generators).
std::vector<ring::Word> all_multiset_words(const ring::RingContext& ctx,
                                           int length);

/// Rank modulo 2^31-1 of the span of normal forms of all q-fold products.
std::int64_t span_rank(const ring::RingContext& ctx, int q);

/// k = p^l (l >= 1) by enumerating primes p <= k and their powers.
bool brute_prime_power(int k);
/// k = 2 p^l (l >= 1), by the same enumeration.
bool brute_twice_prime_power(int k);

/// Minimum of sum(parts) + (n-1) * (#parts) over binary partitions of k,
/// enumerated by part multiplicities rather than recursion on k.
int brute_min_edges(int n, int k);

struct SuiteResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20061015;
  int max_k = 8;
};

SuiteResult confluence_suite(const VerifyOptions& opts);
SuiteResult rank_suite(const VerifyOptions& opts);
SuiteResult total_rank_suite(const VerifyOptions& opts);
SuiteResult relation_suite(const VerifyOptions& opts);
SuiteResult ring_property_suite(const VerifyOptions& opts);
SuiteResult tree_suite(const VerifyOptions& opts);
SuiteResult bound_consistency_suite(const VerifyOptions& opts);

std::vector<SuiteResult> run_all(const VerifyOptions& opts);

}  // namespace confcat::verify
