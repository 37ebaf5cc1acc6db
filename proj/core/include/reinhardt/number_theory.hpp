#pragma once
// Small number-theoretic helpers. All inputs here are tiny (a few hundred at
// most), so plain trial division is used throughout.

#include <cstdint>
#include <vector>

namespace reinhardt {

// Möbius function; requires n >= 1.
int mobius(std::int64_t n);

// Euler's totient; requires n >= 1.
std::int64_t totient(std::int64_t n);

// Divisors of n in increasing order; requires n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

// Distinct odd prime divisors of n, increasing.
std::vector<std::int64_t> odd_prime_factors(std::int64_t n);

bool is_prime(std::int64_t n);
bool is_power_of_two(std::int64_t n);

}  // namespace reinhardt
