#include "reinhardt/number_theory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace reinhardt {

namespace {

void require_positive(std::int64_t n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": argument must be >= 1");
}

}  // namespace

int mobius(std::int64_t n) {
  require_positive(n, "mobius");
  int factors = 0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;  // square factor
    ++factors;
  }
  if (n > 1) ++factors;
  return factors % 2 == 0 ? 1 : -1;
}

std::int64_t totient(std::int64_t n) {
  require_positive(n, "totient");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  require_positive(n, "divisors");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::int64_t> odd_prime_factors(std::int64_t n) {
  require_positive(n, "odd_prime_factors");
  std::vector<std::int64_t> out;
  while (n % 2 == 0) n /= 2;
  for (std::int64_t p = 3; p * p <= n; p += 2) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_power_of_two(std::int64_t n) {
  return n >= 1 && (n & (n - 1)) == 0;
}

}  // namespace reinhardt
