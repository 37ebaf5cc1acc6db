#pragma once
/*
 * Dense integer polynomials with arbitrary-precision coefficients, plus the
 * cyclotomic polynomials built on top of them. Coefficient index i holds the
 * coefficient of z^i; trailing zeros are trimmed, so the zero polynomial is
 * the empty sequence with degree() == -1.
 *
 * Degrees stay in the low hundreds throughout this project, so everything is
 * plain dense schoolbook arithmetic. Exactness matters more than speed here:
 * coefficients use GMP integers.
 */

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace reinhardt {

class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  // c * z^degree
  static IntPolynomial monomial(int degree, const mpz_class& c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  // Coefficient of z^i; zero outside the stored range.
  const mpz_class& coeff(int i) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial& other) const = default;

  // Human-readable form, e.g. "z^2 - z + 1"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

struct DivRem {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

// Exact Euclidean division in Z[z]. Requires den monic (and hence nonzero);
// throws std::invalid_argument otherwise. num == quotient*den + remainder
// with deg(remainder) < deg(den).
DivRem poly_divrem(const IntPolynomial& num, const IntPolynomial& den);

// True iff den divides num exactly (den monic, nonzero).
bool divides(const IntPolynomial& den, const IntPolynomial& num);

// The m-th cyclotomic polynomial, by the Möbius product
// prod_{d|m} (z^{m/d} - 1)^{mu(d)} evaluated with exact division.
// Memoized per process; thread-safe.
const IntPolynomial& cyclotomic(int m);

// f(-z^k): coefficient c_i moves to position k*i with sign (-1)^i.
IntPolynomial compose_neg_power(const IntPolynomial& f, int k);

// 1 + z + ... + z^{count-1}
IntPolynomial all_ones(int count);

}  // namespace reinhardt
