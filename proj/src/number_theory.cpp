#include "confcat/number_theory.hpp"

#include <string>

#include "confcat/errors.hpp"

namespace confcat {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in addition");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return r;
}

std::int64_t factorial(int k) {
  if (k < 0) throw DomainError("factorial: k must be >= 0");
  std::int64_t r = 1;
  for (int i = 2; i <= k; ++i) r = checked_mul(r, i);
  return r;
}

int digit_sum(int p, int k) {
  if (p < 2) throw DomainError("digit_sum: base p must be >= 2");
  if (k < 1) throw DomainError("digit_sum: k must be >= 1");
  int s = 0;
  for (; k > 0; k /= p) s += k % p;
  return s;
}

int alpha(int k) {
  if (k < 1) throw DomainError("alpha: k must be >= 1");
  return __builtin_popcount(static_cast<unsigned>(k));
}

bool is_prime(int m) {
  if (m < 2) return false;
  for (int d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

namespace {

// Smallest prime factor of m >= 2.
int least_factor(int m) {
  for (int d = 2; d * d <= m; ++d) {
    if (m % d == 0) return d;
  }
  return m;
}

}  // namespace

bool is_prime_power(int m) {
  if (m < 2) return false;
  const int p = least_factor(m);
  while (m % p == 0) m /= p;
  return m == 1;
}

bool is_twice_prime_power(int m) {
  return m >= 4 && m % 2 == 0 && is_prime_power(m / 2);
}

bool is_power_of_two(int m) { return m >= 1 && (m & (m - 1)) == 0; }

}  // namespace confcat
