#include "reinhardt/classify.hpp"

#include <stdexcept>

#include "reinhardt/internal_check.hpp"
#include "reinhardt/number_theory.hpp"

namespace reinhardt {

namespace {

bool is_d_periodic(std::span<const std::int8_t> u, int d) {
  const int n = static_cast<int>(u.size());
  for (int k = 0; k + d < n; ++k)
    if (u[k] != -u[k + d]) return false;
  return true;
}

}  // namespace

std::vector<int> periods(std::span<const std::int8_t> coeffs) {
  const int n = static_cast<int>(coeffs.size());
  std::vector<int> out;
  for (std::int64_t d : divisors(n)) {
    if (d == n) continue;
    if ((n / d) % 2 == 0) continue;
    if (is_d_periodic(coeffs, static_cast<int>(d))) out.push_back(static_cast<int>(d));
  }
  return out;
}

std::vector<int> periods(const SignVector& v) {
  return periods(std::span<const std::int8_t>(v.entries()));
}

std::vector<int> maximal_period_divisors(int n) {
  // d-periodicity with n/d odd propagates to every d' = n/m with m an odd
  // prime dividing n/d (apply the relation d'/d times, an odd count), so
  // testing the maximal divisors n/m suffices.
  std::vector<int> out;
  for (std::int64_t m : odd_prime_factors(n)) out.push_back(static_cast<int>(n / m));
  return out;
}

bool has_any_period(std::span<const std::int8_t> coeffs, std::span<const int> divisors) {
  for (int d : divisors)
    if (is_d_periodic(coeffs, d)) return true;
  return false;
}

bool has_any_period(std::span<const std::int8_t> coeffs) {
  auto ds = maximal_period_divisors(static_cast<int>(coeffs.size()));
  return has_any_period(coeffs, ds);
}

Classification classify(const Composition& c) {
  if (!is_reinhardt(c))
    throw std::invalid_argument("classify: composition " + format_composition(c) +
                                " is not a Reinhardt composition");
  SignVector v = composition_to_sign_vector(c);
  Classification result;
  result.periods = periods(v);
  result.kind = result.periods.empty() ? Periodicity::sporadic : Periodicity::periodic;
  return result;
}

mpq_class odd_dihedral_composition_count(int m) {
  if (m < 1) throw std::invalid_argument("odd_dihedral_composition_count: m must be >= 1");
  // 2^{floor((m-3)/2)}, which is 2^{-1} for m in {1, 2}
  mpq_class total;
  int e = (m - 3) >= 0 ? (m - 3) / 2 : -((3 - m + 1) / 2);  // floor((m-3)/2)
  if (e >= 0) {
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(e));
    total = pow2;
  } else {
    total = mpq_class(1, 2);  // only e = -1 occurs (m = 1 or 2)
  }
  mpq_class sum;
  for (std::int64_t d : divisors(m)) {
    if (d % 2 == 0) continue;
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(m / d));
    sum += mpq_class(pow2 * totient(d));
  }
  total += sum / (4 * m);
  total.canonicalize();
  return total;
}

mpz_class periodic_count_formula(int n) {
  if (n < 3 || is_power_of_two(n))
    throw std::invalid_argument(
        "periodic_count_formula: n must be >= 3 and not a power of two");
  mpq_class total;
  for (std::int64_t d : divisors(n)) {
    if (d == 1) continue;
    int mu = mobius(2 * d);
    if (mu == 0) continue;
    total += mu * odd_dihedral_composition_count(static_cast<int>(n / d));
  }
  total.canonicalize();
  detail::check(total.get_den() == 1, "periodic count formula yields an integer");
  return total.get_num();
}

mpz_class two_prime_count_formula(int p, int q) {
  if (p == q || p < 3 || q < 3 || p % 2 == 0 || q % 2 == 0 || !is_prime(p) || !is_prime(q))
    throw std::invalid_argument("two_prime_count_formula: p, q must be distinct odd primes");
  auto half = [](int s) -> mpz_class {
    mpz_class pow_a, pow_b;
    mpz_ui_pow_ui(pow_a.get_mpz_t(), 2, static_cast<unsigned long>((s - 3) / 2));
    mpz_ui_pow_ui(pow_b.get_mpz_t(), 2, static_cast<unsigned long>(s - 1));
    mpz_class num = pow_b + s - 1;
    detail::check(num % (2 * s) == 0, "two-prime formula term is integral");
    return pow_a + num / (2 * s);
  };
  return half(p) + half(q) - 1;
}

}  // namespace reinhardt
