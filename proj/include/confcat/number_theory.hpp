#pragma once

#include <cstdint>

namespace confcat {

// Checked int64 arithmetic; throws OverflowError instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// k! with overflow detection (k <= 20 fits).
std::int64_t factorial(int k);

/// Sum of the base-p digits of k. Requires p >= 2, k >= 1.
int digit_sum(int p, int k);

/// Number of ones in the binary expansion of k (k >= 1).
int alpha(int k);

// Trial-division predicates. Prime powers are p^l with l >= 1.
bool is_prime(int m);
bool is_prime_power(int m);
bool is_twice_prime_power(int m);
bool is_power_of_two(int m);

}  // namespace confcat
