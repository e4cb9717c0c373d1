#pragma once

// Exact integral arithmetic in H^*(F(R^n,k)) presented by generators
// A_{i,j} (1 <= j < i <= k) of degree n-1 subject to
//   A_{i,j}^2 = 0,
//   A_{i,j} A_{i,l} = A_{l,j} (A_{i,l} - A_{i,j})   for j < l < i,
// and graded commutativity. Elements are kept in the admissible normal
// form: every monomial has strictly increasing top indices i.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace confcat::ring {

enum class Parity { even, odd };

class RingContext {
 public:
  /// Throws DomainError unless n >= 2 and k >= 1.
  RingContext(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int gen_degree() const { return n_ - 1; }
  Parity gen_parity() const {
    return gen_degree() % 2 == 0 ? Parity::even : Parity::odd;
  }
  /// Sign picked up by swapping two adjacent generators.
  int swap_sign() const { return gen_parity() == Parity::even ? 1 : -1; }
  int generator_count() const { return k_ * (k_ - 1) / 2; }

  bool operator==(const RingContext&) const = default;

 private:
  int n_;
  int k_;
};

RingContext make_ring(int n, int k);

struct GeneratorIndex {
  int i;
  int j;

  auto operator<=>(const GeneratorIndex&) const = default;
};

/// Product of generators in the written order.
using Word = std::vector<GeneratorIndex>;

struct Monomial {
  Word factors;
  std::int64_t coefficient = 1;
};

/// A signed word produced by one rewrite step.
struct Term {
  Word word;
  std::int64_t coefficient;
};

class Element {
 public:
  using TermMap = std::map<Word, std::int64_t>;

  explicit Element(RingContext ctx) : ctx_(ctx) {}

  static Element zero(RingContext ctx) { return Element(ctx); }
  static Element unit(RingContext ctx, std::int64_t c = 1);

  const RingContext& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Common degree of all terms; nullopt for zero or inhomogeneous elements.
  std::optional<int> degree() const;
  /// Coefficient of an admissible word (0 if absent).
  std::int64_t coefficient(const Word& admissible) const;

  std::vector<Monomial> monomials() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element operator-() const;
  Element scaled(std::int64_t c) const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  bool operator==(const Element& other) const;

  /// Adds c * word where word is already admissible.
  void add_admissible(const Word& word, std::int64_t c);

 private:
  RingContext ctx_;
  TermMap terms_;
};

/// Throws DomainError naming the violated inequality of 1 <= j < i <= k.
void validate_index(const RingContext& ctx, GeneratorIndex g);

Element generator(const RingContext& ctx, int i, int j);

/// Context mismatch throws DomainError.
Element multiply(const Element& a, const Element& b);

bool is_zero(const Element& a);
std::optional<int> element_degree(const Element& a);

/// Reduces coeff * raw to the admissible normal form.
Element normal_form(const RingContext& ctx, const Word& raw,
                    std::int64_t coeff = 1);

// Rewrite primitives. normal_form composes these with one fixed strategy;
// they are public so other strategies can be replayed against it.

enum class Approach {
  pull_right_left,  // move the right factor leftwards next to the left one
  push_left_right,  // move the left factor rightwards next to the right one
};

/// One reduction of a repeated top index at positions left < right
/// (word[left].i == word[right].i). Returns no terms when the two factors
/// coincide, otherwise the two terms of the three-term relation.
std::vector<Term> rewrite_step(const RingContext& ctx, const Word& word,
                               std::size_t left, std::size_t right,
                               Approach approach);

/// True when no top index repeats.
bool has_distinct_tops(const Word& word);

/// Sorts a word with distinct tops by i, tracking the Koszul sign.
Term sort_admissible(const RingContext& ctx, const Word& word);

/// Admissible monomials with q factors, in lexicographic order.
std::vector<Monomial> basis(const RingContext& ctx, int q);

struct GradedRank {
  int q;
  int degree;
  std::int64_t rank;
};

/// Ranks in degrees q(n-1), q = 0..k-1, counted from the basis.
std::vector<GradedRank> poincare_table(const RingContext& ctx);

struct Cuplength {
  int value;
  Monomial witness;
};

/// Longest nonzero product of positive-degree classes, with a witness.
/// Throws InconsistencyError if the witness reduces to zero.
Cuplength cuplength(const RingContext& ctx);

std::string to_string(GeneratorIndex g);
std::string to_string(const Word& w);
std::string to_string(const Element& e);

}  // namespace confcat::ring
