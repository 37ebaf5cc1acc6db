#include <doctest.h>

#include <random>

#include "reinhardt/int_polynomial.hpp"
#include "reinhardt/number_theory.hpp"

using reinhardt::all_ones;
using reinhardt::compose_neg_power;
using reinhardt::cyclotomic;
using reinhardt::divides;
using reinhardt::IntPolynomial;
using reinhardt::poly_divrem;

namespace {

IntPolynomial random_poly(std::mt19937& rng, int max_degree, int max_coeff) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::vector<mpz_class> c(deg(rng) + 1);
  for (auto& v : c) v = coeff(rng);
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("canonical trimmed form") {
  IntPolynomial p(std::vector<mpz_class>{1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{}.is_zero());
  CHECK(IntPolynomial({0, 0}).is_zero());
}

TEST_CASE("cyclotomic base cases") {
  CHECK(cyclotomic(1) == IntPolynomial({-1, 1}));
  CHECK(cyclotomic(6) == IntPolynomial({1, -1, 1}));
  CHECK(cyclotomic(2) == IntPolynomial({1, 1}));
  // degree-12 divisor of 1 - z^7 + z^14
  CHECK(cyclotomic(42).degree() == 12);
  CHECK(divides(cyclotomic(42), IntPolynomial({1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1})));
}

TEST_CASE("divrem examples") {
  // (z^2 - 1) / (z - 1)
  auto dr = poly_divrem(IntPolynomial({-1, 0, 1}), IntPolynomial({-1, 1}));
  CHECK(dr.quotient == IntPolynomial({1, 1}));
  CHECK(dr.remainder.is_zero());

  IntPolynomial fig_a({1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1});
  CHECK(poly_divrem(fig_a, cyclotomic(42)).remainder.is_zero());

  IntPolynomial not_closed({1, 0, 0, 0, -1, 0, 0, 0, 1});  // 1 - z^4 + z^8
  CHECK_FALSE(poly_divrem(not_closed, cyclotomic(18)).remainder.is_zero());
}

TEST_CASE("divides examples") {
  IntPolynomial fig_b({1, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, 1});
  CHECK(divides(cyclotomic(42), fig_b));
  CHECK(divides(IntPolynomial({-1, 1}), IntPolynomial({-1, 1})));
  CHECK_FALSE(divides(cyclotomic(18), IntPolynomial({1, 0, 0, 0, -1, 0, 0, 0, 1})));
}

TEST_CASE("divrem rejects bad divisors") {
  CHECK_THROWS_AS(poly_divrem(IntPolynomial({1}), IntPolynomial{}), std::invalid_argument);
  CHECK_THROWS_AS(poly_divrem(IntPolynomial({1}), IntPolynomial({1, 2})),
                  std::invalid_argument);
}

TEST_CASE("divrem reconstruction property") {
  std::mt19937 rng(20260809);
  for (int trial = 0; trial < 200; ++trial) {
    IntPolynomial a = random_poly(rng, 40, 50);
    IntPolynomial b = random_poly(rng, 12, 50);
    // force monic
    std::vector<mpz_class> bc(b.coeffs());
    if (bc.empty()) bc.push_back(0);
    bc.push_back(1);
    IntPolynomial monic(std::move(bc));
    auto [q, r] = poly_divrem(a, monic);
    CHECK(q * monic + r == a);
    CHECK(r.degree() < monic.degree());
  }
}

TEST_CASE("cyclotomic identities") {
  // odd m > 1: Phi_{2m}(z) = Phi_m(-z); at m = 1 the two sides differ by sign
  for (int m = 3; m <= 99; m += 2) {
    const IntPolynomial& odd = cyclotomic(m);
    std::vector<mpz_class> flipped(odd.coeffs());
    for (size_t i = 1; i < flipped.size(); i += 2) flipped[i] = -flipped[i];
    CHECK(cyclotomic(2 * m) == IntPolynomial(std::move(flipped)));
  }

  // Phi_{pq} * Phi_p * (z^q - 1) = z^{pq} - 1
  for (auto [p, q] : {std::pair{3, 5}, {5, 3}, {3, 7}, {7, 11}, {5, 13}}) {
    IntPolynomial lhs = cyclotomic(p * q) * cyclotomic(p) *
                        (IntPolynomial::monomial(q) - IntPolynomial({1}));
    IntPolynomial rhs = IntPolynomial::monomial(p * q) - IntPolynomial({1});
    CHECK(lhs == rhs);
  }

  // prod_{d|m} Phi_d = z^m - 1
  for (int m = 1; m <= 200; ++m) {
    IntPolynomial prod({1});
    for (std::int64_t d : reinhardt::divisors(m)) prod = prod * cyclotomic(static_cast<int>(d));
    CHECK(prod == IntPolynomial::monomial(m) - IntPolynomial({1}));
  }
}

TEST_CASE("cyclotomic is monic of totient degree") {
  for (int m = 1; m <= 128; ++m) {
    CHECK(cyclotomic(m).is_monic());
    CHECK(cyclotomic(m).degree() == reinhardt::totient(m));
  }
}

TEST_CASE("compose_neg_power") {
  // Phi_3(-z^5) = 1 - z^5 + z^10
  CHECK(compose_neg_power(cyclotomic(3), 5) ==
        IntPolynomial({1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1}));
  CHECK(compose_neg_power(all_ones(3), 1) == IntPolynomial({1, -1, 1}));
}

TEST_CASE("to_string") {
  CHECK(cyclotomic(6).to_string() == "z^2 - z + 1");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial({-2, 0, 3}).to_string() == "3z^2 - 2");
}
