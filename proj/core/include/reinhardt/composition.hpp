#pragma once
/*
 * The two equivalent descriptions of a Reinhardt polygon candidate:
 *
 *  - Composition: the parts [k1,...,kr] (r odd, sum n) read around the star
 *    polygon, considered up to cyclic shifts and reversal (dihedral action).
 *  - SignVector: the length-n coefficient sequence of
 *    F(z) = 1 - z^{k1} + z^{k1+k2} - ... , entries in {-1,0,+1}, entry 0
 *    equal to +1, nonzero entries alternating in sign and odd in number.
 *
 * A composition names a Reinhardt polygon exactly when Phi_{2n}(z) | F(z).
 */

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reinhardt/int_polynomial.hpp"

namespace reinhardt {

class Composition {
 public:
  // Validates: at least one part, odd number of parts, every part >= 1.
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int part_count() const { return static_cast<int>(parts_.size()); }
  int largest_part() const;

  bool operator==(const Composition& other) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

class SignVector {
 public:
  // Strict validation: nonempty, entries in {-1,0,1}, entries[0] == +1,
  // odd number of nonzero entries, nonzero entries alternating from +1.
  // Throws std::invalid_argument on any violation.
  explicit SignVector(std::vector<std::int8_t> entries);

  const std::vector<std::int8_t>& entries() const { return entries_; }
  int n() const { return static_cast<int>(entries_.size()); }

  bool operator==(const SignVector& other) const = default;

 private:
  std::vector<std::int8_t> entries_;
};

SignVector composition_to_sign_vector(const Composition& c);
Composition sign_vector_to_composition(const SignVector& v);

// F(z) as an integer polynomial (degree < n).
IntPolynomial to_polynomial(const SignVector& v);

// Lexicographically greatest sequence among all rotations and reversals of
// the parts; this places a largest part first. Idempotent. The into-form
// reuses the output buffer for tight loops.
Composition canonicalize(const Composition& c);
std::vector<int> canonical_parts(std::span<const int> parts);
void canonical_parts_into(std::span<const int> parts, std::vector<int>& out);

// Phi_{2n}(z) | F(z)?
bool is_reinhardt(const Composition& c);
bool is_reinhardt(const SignVector& v);

// Text format used by every external surface: "[7,6,1,1,...]".
std::string format_composition(const Composition& c);

// Parses the plain bracket format (no run-length groups; the CLI expands
// those first). Throws std::invalid_argument on malformed text.
Composition parse_composition(std::string_view text);

}  // namespace reinhardt
