#pragma once
/*
 * Periodicity detection and the closed-form counting functions.
 *
 * A length-n coefficient sequence u is d-periodic when d | n, n/d is odd and
 * u[k] == -u[k+d] for 0 <= k < n-d; the polygon is periodic exactly when its
 * composition is a repeated block [(k1,...,ks)^m] with m = n/d odd, >= 3.
 */

#include <cstdint>
#include <gmpxx.h>
#include <span>
#include <vector>

#include "reinhardt/composition.hpp"

namespace reinhardt {

enum class Periodicity { periodic, sporadic };

struct Classification {
  Periodicity kind = Periodicity::sporadic;
  std::vector<int> periods;  // all valid d, increasing; empty iff sporadic

  bool is_periodic() const { return kind == Periodicity::periodic; }
  bool operator==(const Classification&) const = default;
};

// All d with d | n, 1 <= d < n, n/d odd, and u[k] == -u[k+d] for k < n-d.
// Works on raw coefficient sequences (no leading-entry requirement), so the
// sporadic construction can classify vectors before normalization.
std::vector<int> periods(std::span<const std::int8_t> coeffs);
std::vector<int> periods(const SignVector& v);

// Fast predicate: is the sequence d-periodic for any valid d? (It suffices
// to test d = n/m over odd primes m | n.) The second form takes that divisor
// list precomputed, for use inside tight sweeps.
bool has_any_period(std::span<const std::int8_t> coeffs);
bool has_any_period(std::span<const std::int8_t> coeffs, std::span<const int> divisors);

// The d = n/m candidates used by has_any_period.
std::vector<int> maximal_period_divisors(int n);

// Requires is_reinhardt(c); throws std::invalid_argument otherwise.
Classification classify(const Composition& c);

// Number of dihedral equivalence classes of compositions of m into an odd
// number of parts: 2^{floor((m-3)/2)} + (1/4m) sum_{d|m, d odd} 2^{m/d} phi(d),
// evaluated with exact rationals (the m <= 2 cases are genuinely fractional
// termwise and only cancel in the sum).
mpq_class odd_dihedral_composition_count(int m);

// Count of periodic Reinhardt polygons with n sides:
// sum_{d|n, d>1} mu(2d) * odd_dihedral_composition_count(n/d).
// Requires n >= 3 and n not a power of two.
mpz_class periodic_count_formula(int n);

// Count of all Reinhardt polygons with pq sides, p and q distinct odd
// primes: 2^{(p-3)/2} + (2^{p-1}+p-1)/2p + 2^{(q-3)/2} + (2^{q-1}+q-1)/2q - 1.
mpz_class two_prime_count_formula(int p, int q);

}  // namespace reinhardt
