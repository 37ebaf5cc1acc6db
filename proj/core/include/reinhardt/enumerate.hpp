#pragma once
/*
 * Exhaustive enumeration of all Reinhardt polygons with n sides, up to
 * dihedral equivalence, with classification, largest-part stratification and
 * a versioned JSON-lines result cache.
 *
 * Search design. Write F(z) = (1-z)C(z) + z^n where C's coefficients are the
 * prefix sums c_i of the coefficients of F; the alternating-sign constraint
 * on F is exactly c in {0,1}^n with c_0 = 1, and the odd-term constraint is
 * c_{n-1} = 1. Since z^n = -1 mod Phi_{2n}, the Reinhardt condition becomes
 * (1-z)C(z) = 1 mod Phi_{2n}. Coefficients c_t with t below
 * D = deg Phi_{2n} = phi(2n) appear as untouched monomials in the reduced
 * remainder, so once the n - D coefficients at positions >= D are chosen, the
 * low ones are forced linearly; a depth-first search over the high positions
 * with an incrementally maintained exact remainder visits 2^{n-phi(2n)-1}
 * leaves and accepts a leaf iff every forced coefficient lands in {0,1}.
 * Survivors are canonicalized and deduplicated, so the result is correct even
 * where the anchoring is redundant.
 */

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "reinhardt/classify.hpp"
#include "reinhardt/composition.hpp"

namespace reinhardt {

struct EnumerationOptions {
  std::uint64_t node_budget = std::uint64_t{1} << 26;  // DFS nodes; n<=48 fits
  int threads = 0;                                     // 0 = hardware threads
};

struct CountSummary {
  std::int64_t total = 0;     // E
  std::int64_t periodic = 0;  // E0
  std::int64_t sporadic = 0;  // E1
  bool operator==(const CountSummary&) const = default;
};

struct StratumCount {
  std::int64_t total = 0;
  std::int64_t sporadic = 0;
  bool operator==(const StratumCount&) const = default;
};

struct EnumerationResult {
  int n = 0;
  // Canonical compositions with their classification, sorted by parts in
  // decreasing lexicographic order.
  std::vector<std::pair<Composition, Classification>> polygons;
  CountSummary counts;
  std::map<int, StratumCount> by_largest_part;
};

class budget_exhausted_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class cache_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Complete enumeration for n >= 3, n not a power of two (throws
// std::invalid_argument otherwise). Throws budget_exhausted_error when the
// node budget is hit; never returns a silently truncated result. Output is
// byte-stable across thread counts.
EnumerationResult enumerate_reinhardt(int n, const EnumerationOptions& opts = {});

CountSummary count_summary(const EnumerationResult& result);

// Cache file "reinhardt-<n>.v1.jsonl" under dir: one composition per line,
// trailing record with the counts and an FNV-1a checksum of the data lines.
void store_cache(const EnumerationResult& result, const std::filesystem::path& dir);

// nullopt when no cache file exists; throws cache_error on version mismatch,
// checksum mismatch or any malformed content.
std::optional<EnumerationResult> load_cache(int n, const std::filesystem::path& dir);

// Cached wrapper: load if present, else enumerate and store (best effort).
EnumerationResult enumerate_with_cache(int n, const std::filesystem::path& dir,
                                       const EnumerationOptions& opts = {});

namespace detail {

// z^i mod Phi_{2n} for i in [degree, n), plus (1-z)^{-1} mod Phi_{2n},
// all with proven-in-range int64 coefficients. Shared by the enumerator and
// by bulk divisibility checks.
struct ReductionTable {
  int n = 0;
  int degree = 0;                                    // phi(2n)
  std::vector<std::vector<std::int64_t>> reduced;    // reduced[i - degree]
  std::vector<std::int64_t> inv_one_minus_z;         // R0

  static ReductionTable build(int n);
  // Same predicate as divides(cyclotomic(2n), F), evaluated in int64.
  bool divisible(std::span<const std::int8_t> coeffs) const;
};

}  // namespace detail

}  // namespace reinhardt
