#include "confcat/cohen_ring.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "confcat/errors.hpp"
#include "confcat/number_theory.hpp"

namespace confcat::ring {

RingContext::RingContext(int n, int k) : n_(n), k_(k) {
  if (n < 2) {
    throw DomainError("ring: n must be >= 2 (got n = " + std::to_string(n) +
                      ")");
  }
  if (k < 1) {
    throw DomainError("ring: k must be >= 1 (got k = " + std::to_string(k) +
                      ")");
  }
}

RingContext make_ring(int n, int k) { return RingContext(n, k); }

// ---------------------------------------------------------------------------
// Element

Element Element::unit(RingContext ctx, std::int64_t c) {
  Element e(ctx);
  e.add_admissible({}, c);
  return e;
}

void Element::add_admissible(const Word& word, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

std::optional<int> Element::degree() const {
  if (terms_.empty()) return std::nullopt;
  const std::size_t len = terms_.begin()->first.size();
  for (const auto& [w, c] : terms_) {
    if (w.size() != len) return std::nullopt;
  }
  return static_cast<int>(len) * ctx_.gen_degree();
}

std::int64_t Element::coefficient(const Word& admissible) const {
  auto it = terms_.find(admissible);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<Monomial> Element::monomials() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.push_back({w, c});
  return out;
}

namespace {

void require_same_context(const Element& a, const Element& b) {
  if (!(a.context() == b.context())) {
    throw DomainError("ring: elements belong to different contexts");
  }
}

}  // namespace

Element& Element::operator+=(const Element& other) {
  require_same_context(*this, other);
  for (const auto& [w, c] : other.terms_) add_admissible(w, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_context(*this, other);
  for (const auto& [w, c] : other.terms_) add_admissible(w, checked_mul(c, -1));
  return *this;
}

Element Element::operator-() const { return scaled(-1); }

Element Element::scaled(std::int64_t c) const {
  Element out(ctx_);
  for (const auto& [w, v] : terms_) out.add_admissible(w, checked_mul(v, c));
  return out;
}

bool Element::operator==(const Element& other) const {
  return ctx_ == other.ctx_ && terms_ == other.terms_;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

// ---------------------------------------------------------------------------
// Generators and validation

void validate_index(const RingContext& ctx, GeneratorIndex g) {
  const std::string name = to_string(g);
  if (g.j < 1) throw DomainError(name + ": requires 1 <= j");
  if (g.j >= g.i) throw DomainError(name + ": requires j < i");
  if (g.i > ctx.k()) {
    throw DomainError(name + ": requires i <= k (k = " +
                      std::to_string(ctx.k()) + ")");
  }
}

Element generator(const RingContext& ctx, int i, int j) {
  validate_index(ctx, {i, j});
  Element e(ctx);
  e.add_admissible({{i, j}}, 1);
  return e;
}

bool is_zero(const Element& a) { return a.is_zero(); }

std::optional<int> element_degree(const Element& a) { return a.degree(); }

// ---------------------------------------------------------------------------
// Rewriting

std::vector<Term> rewrite_step(const RingContext& ctx, const Word& word,
                               std::size_t left, std::size_t right,
                               Approach approach) {
  if (left >= right || right >= word.size() ||
      word[left].i != word[right].i) {
    throw DomainError("rewrite_step: positions do not share a top index");
  }
  Word w = word;
  std::int64_t sign = 1;
  // Each adjacent transposition of two generators contributes swap_sign.
  const std::size_t hops = right - left - 1;
  if (hops % 2 == 1) sign *= ctx.swap_sign();

  std::size_t p;
  if (approach == Approach::pull_right_left) {
    std::rotate(w.begin() + static_cast<std::ptrdiff_t>(left) + 1,
                w.begin() + static_cast<std::ptrdiff_t>(right),
                w.begin() + static_cast<std::ptrdiff_t>(right) + 1);
    p = left;
  } else {
    std::rotate(w.begin() + static_cast<std::ptrdiff_t>(left),
                w.begin() + static_cast<std::ptrdiff_t>(left) + 1,
                w.begin() + static_cast<std::ptrdiff_t>(right));
    p = right - 1;
  }

  if (w[p].j == w[p + 1].j) return {};  // A_{i,j}^2 = 0
  if (w[p].j > w[p + 1].j) {
    std::swap(w[p], w[p + 1]);
    sign *= ctx.swap_sign();
  }
  // A_{i,j} A_{i,l} = A_{l,j} A_{i,l} - A_{l,j} A_{i,j}
  const int i = w[p].i;
  const int j = w[p].j;
  const int l = w[p + 1].j;

  Word first = w;
  first[p] = {l, j};
  first[p + 1] = {i, l};
  Word second = std::move(w);
  second[p] = {l, j};
  second[p + 1] = {i, j};
  return {{std::move(first), sign}, {std::move(second), -sign}};
}

bool has_distinct_tops(const Word& word) {
  for (std::size_t a = 0; a < word.size(); ++a) {
    for (std::size_t b = a + 1; b < word.size(); ++b) {
      if (word[a].i == word[b].i) return false;
    }
  }
  return true;
}

Term sort_admissible(const RingContext& ctx, const Word& word) {
  Word w = word;
  std::size_t inversions = 0;
  for (std::size_t a = 1; a < w.size(); ++a) {
    for (std::size_t b = a; b > 0 && w[b - 1].i > w[b].i; --b) {
      std::swap(w[b - 1], w[b]);
      ++inversions;
    }
  }
  const std::int64_t sign = (inversions % 2 == 1) ? ctx.swap_sign() : 1;
  return {std::move(w), sign};
}

namespace {

// Chooses the largest repeated top index and its two leftmost occurrences.
std::optional<std::pair<std::size_t, std::size_t>> pick_repeat(
    const Word& w) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  int best_top = 0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    if (w[a].i <= best_top) continue;
    for (std::size_t b = a + 1; b < w.size(); ++b) {
      if (w[b].i == w[a].i) {
        best = {a, b};
        best_top = w[a].i;
        break;
      }
    }
  }
  return best;
}

}  // namespace

Element normal_form(const RingContext& ctx, const Word& raw,
                    std::int64_t coeff) {
  for (const auto& g : raw) validate_index(ctx, g);
  Element out(ctx);
  if (coeff == 0) return out;

  // Each step replaces a repeated top i by {l, i} with l < i, so the
  // multiset of tops strictly decreases and the worklist drains.
  std::vector<Term> work{{raw, coeff}};
  while (!work.empty()) {
    Term t = std::move(work.back());
    work.pop_back();
    if (auto rep = pick_repeat(t.word)) {
      for (auto& r : rewrite_step(ctx, t.word, rep->first, rep->second,
                                  Approach::pull_right_left)) {
        work.push_back({std::move(r.word), checked_mul(r.coefficient,
                                                       t.coefficient)});
      }
    } else {
      Term s = sort_admissible(ctx, t.word);
      out.add_admissible(s.word, checked_mul(s.coefficient, t.coefficient));
    }
  }
  return out;
}

Element multiply(const Element& a, const Element& b) {
  require_same_context(a, b);
  Element out(a.context());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out += normal_form(a.context(), w, checked_mul(ca, cb));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Basis, ranks, cuplength

namespace {

void enumerate_admissible(const RingContext& ctx, int q, int min_top,
                          Word& prefix, std::vector<Monomial>& out) {
  if (q == 0) {
    out.push_back({prefix, 1});
    return;
  }
  // Leave room for the remaining q - 1 strictly larger tops.
  for (int i = min_top; i <= ctx.k() - (q - 1); ++i) {
    for (int j = 1; j < i; ++j) {
      prefix.push_back({i, j});
      enumerate_admissible(ctx, q - 1, i + 1, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<Monomial> basis(const RingContext& ctx, int q) {
  if (q < 0) throw DomainError("basis: q must be >= 0");
  std::vector<Monomial> out;
  if (q > ctx.k() - 1) return out;
  Word prefix;
  enumerate_admissible(ctx, q, 2, prefix, out);
  return out;
}

std::vector<GradedRank> poincare_table(const RingContext& ctx) {
  std::vector<GradedRank> table;
  for (int q = 0; q <= ctx.k() - 1; ++q) {
    table.push_back({q, q * ctx.gen_degree(),
                     static_cast<std::int64_t>(basis(ctx, q).size())});
  }
  return table;
}

Cuplength cuplength(const RingContext& ctx) {
  if (ctx.k() == 1) return {0, Monomial{{}, 1}};

  // Positive-degree classes live in q >= 1, so a product of m of them sits
  // in q >= m; it can only survive while basis(q) is nonempty.
  int value = 0;
  while (!basis(ctx, value + 1).empty()) ++value;

  Word witness;
  for (int i = 2; i <= value + 1; ++i) witness.push_back({i, 1});
  const Element product = normal_form(ctx, witness);
  if (product.is_zero()) {
    throw InconsistencyError("cuplength: witness " + to_string(witness) +
                             " reduced to zero");
  }
  return {value, Monomial{witness, 1}};
}

// ---------------------------------------------------------------------------
// Text

std::string to_string(GeneratorIndex g) {
  return "A_{" + std::to_string(g.i) + "," + std::to_string(g.j) + "}";
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& g : w) s += to_string(g);
  return s;
}

std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (w.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << to_string(w);
    }
  }
  return os.str();
}

}  // namespace confcat::ring
