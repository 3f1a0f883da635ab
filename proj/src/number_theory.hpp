#pragma once

#include <cstdint>
#include <vector>

namespace flrs::detail {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Distinct prime factors of n, ascending. n >= 1.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Returns (p, e) with n = p^e, or (0, 0) if n is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n);

/// Checked integer power; throws ParameterError on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

}  // namespace flrs::detail
