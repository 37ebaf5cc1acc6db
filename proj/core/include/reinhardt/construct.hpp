#pragma once
/*
 * The sporadic-polygon construction for n = pqr (p, q distinct odd primes,
 * r >= 2), and the decomposition of a Reinhardt polynomial for n = pq over
 * the two generators Phi_p(-z^q), Phi_q(-z^p).
 *
 * Construction layout. With S a nontrivial proper subset of {0..p-1}:
 *   f1(z) = sum_{s in S} (-1)^s z^{rs} (1-z),       g1 = f1 * Phi_q(-z^{pr})
 * and f2 given coefficient-wise as the concatenation
 *   0 A_1 B_1 ... A_t B_t C,  t = (q-1)/2,          g2 = f2 * Phi_p(-z^{qr})
 * where each A_i/B_i is a length-r block and C a length-(r-1) block, each
 * with an odd number of alternating nonzero entries, starting +1 for A_i and
 * C and -1 for B_i. F = g1 + g2 always lands in {-1,0,1} with alternating
 * nonzero signs; its cyclic part sequence, normalized under the dihedral
 * action, is a Reinhardt composition.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "reinhardt/classify.hpp"
#include "reinhardt/composition.hpp"
#include "reinhardt/int_polynomial.hpp"

namespace reinhardt {

struct ConstructionParams {
  int p = 0;
  int q = 0;
  int r = 0;
  std::uint32_t s_mask = 0;  // bit s set <=> s in S, over {0..p-1}

  int n() const { return p * q * r; }
};

// Throws std::invalid_argument unless p, q are distinct odd primes, r >= 2,
// and s_mask is a nonempty proper subset of {0..p-1}.
void validate_params(const ConstructionParams& params);

// Each block is an odd-popcount support mask: bit j set means block position
// j holds a nonzero entry; signs then alternate from the block's first sign.
struct BlockChoice {
  std::vector<std::uint32_t> a_masks;  // t masks over r bits
  std::vector<std::uint32_t> b_masks;  // t masks over r bits
  std::uint32_t c_mask = 0;            // mask over r-1 bits
};

// Number of valid block choices for (q, r): 2^{q(r-1)-1}.
std::uint64_t block_choice_count(int q, int r);

// index in [0, block_choice_count(q,r)); enumerating all indices yields every
// valid choice exactly once.
BlockChoice block_choice_from_index(int q, int r, std::uint64_t index);

// f1 for the given S; S = {0} gives 1 - z.
IntPolynomial build_f1(const ConstructionParams& params);

// Raw coefficient sequence of F = g1 + g2 (length n). Verifies the overlay
// guarantees (tri-valued coefficients, alternating nonzero signs, odd count)
// and throws std::logic_error if any fails, since that would contradict the
// construction's correctness argument.
std::vector<std::int8_t> construct_coefficients(const ConstructionParams& params,
                                                const BlockChoice& blocks);

// Canonical dihedral composition of a raw coefficient sequence (the cyclic
// gaps between nonzero positions). The leading coefficient may be zero.
Composition composition_from_coefficients(std::span<const std::int8_t> coeffs);

// Strict-vector form of the above; valid only when 0 is in S, i.e. the raw
// sequence already starts with +1.
SignVector construct_sign_vector(const ConstructionParams& params,
                                 const BlockChoice& blocks);

enum class SubsetPolicy {
  all_nontrivial,   // every nonempty proper S
  zero_containing,  // only S containing 0
  zero_only,        // exactly S = {0}
};

struct SporadicConstructionOptions {
  SubsetPolicy subsets = SubsetPolicy::all_nontrivial;
  // When set, restrict to this single ordered (p, q) choice; otherwise every
  // ordered pair of distinct odd primes with pq | n and n/(pq) >= 2 is used
  // (r is always n / pq).
  std::optional<std::pair<int, int>> pq;
  // Keep only compositions with this largest part (for the stratified
  // long-running jobs); dedup then only tracks that stratum.
  std::optional<int> largest_part;
  int threads = 0;
};

struct ConstructionSurvey {
  int n = 0;
  std::vector<std::tuple<int, int, int>> factorizations;  // ordered (p,q,r)
  std::int64_t raw_count = 0;           // constructions over the whole grid
  std::int64_t periodic_raw_count = 0;  // of which d-periodic
  std::vector<Composition> sporadic;    // distinct canonical, sorted decreasing
};

// All constructions over the parameter grid for n, deduplicated across
// parameter choices by canonical composition and filtered to the sporadic
// ones. Throws std::invalid_argument when n has no pqr factorization.
ConstructionSurvey construct_sporadic(int n, const SporadicConstructionOptions& opts = {});

// Raw constructions over one (p,q,r) grid that produce a periodic sequence.
// Expected: 2^{r-2} for S = {0}, (2^p - 2) 2^{r-2} for all nontrivial S.
std::int64_t count_periodic_constructed(int p, int q, int r,
                                        SubsetPolicy subsets = SubsetPolicy::zero_only,
                                        int threads = 0);

// Streams every raw construction of one (p,q,r) grid to sink, sharded by
// block index; sink(shard, coefficients) must not retain the span and may
// only touch its own shard's state. For verification sweeps that need
// per-vector access without materializing results.
void for_each_construction(
    int p, int q, int r, SubsetPolicy subsets, int threads,
    const std::function<void(std::int64_t, std::span<const std::int8_t>)>& sink);

// f1 * Phi_p(-z^q) + f2 * Phi_q(-z^p) == F with deg f1 < q, deg f2 < p and
// all coefficients of f1, f2 in {-1,0,1}.
struct Decomposition {
  IntPolynomial f1;
  IntPolynomial f2;
  bool trivial = false;  // f1 in {0, Phi_q(-z)} or f2 in {0, Phi_p(-z)}
};

// Requires n = pq with p, q distinct odd primes and F Reinhardt; throws
// std::invalid_argument otherwise. Follows the Bezout-cofactor reduction and
// the s0 = 1 / t0 = 0 normalization; any failure to reach a tri-valued pair
// is a std::logic_error (it would contradict the decomposition lemma).
Decomposition decompose(const SignVector& F, int p, int q);

struct TrivialDecompositionCheck {
  bool p_side = false;  // Phi_p(-z^q) | F
  bool q_side = false;  // Phi_q(-z^p) | F
};

TrivialDecompositionCheck has_trivial_decomposition(const SignVector& F, int p, int q);

}  // namespace reinhardt
