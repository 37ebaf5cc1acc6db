#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "reinhardt/construct.hpp"
#include "reinhardt/enumerate.hpp"
#include "reinhardt/number_theory.hpp"

using namespace reinhardt;

namespace {

// Figure-2 block language: "0+" puts the nonzero in the second position.
constexpr std::uint32_t kSecond = 0b10;  // 0+ / 0-
constexpr std::uint32_t kFirst = 0b01;   // +0 / -0

BlockChoice fig2_blocks(std::uint32_t a2, std::uint32_t b2) {
  BlockChoice blocks;
  blocks.a_masks = {kSecond, a2};  // A1 = 0+
  blocks.b_masks = {kSecond, b2};  // B1 = 0-
  blocks.c_mask = 0b1;             // C = +
  return blocks;
}

std::vector<std::uint32_t> subsets_all(int p) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 1; m + 1 < (1u << p); ++m) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate_params({4, 5, 2, 1}), std::invalid_argument);   // p even
  CHECK_THROWS_AS(validate_params({3, 3, 2, 1}), std::invalid_argument);   // p == q
  CHECK_THROWS_AS(validate_params({3, 9, 2, 1}), std::invalid_argument);   // q not prime
  CHECK_THROWS_AS(validate_params({3, 5, 1, 1}), std::invalid_argument);   // r < 2
  CHECK_THROWS_AS(validate_params({3, 5, 2, 0}), std::invalid_argument);   // S empty
  CHECK_THROWS_AS(validate_params({3, 5, 2, 0b111}), std::invalid_argument);  // S full
  CHECK_NOTHROW(validate_params({3, 5, 2, 0b101}));
}

TEST_CASE("build_f1 examples") {
  CHECK(build_f1({3, 5, 2, 0b001}) == IntPolynomial({1, -1}));             // S={0}: 1-z
  CHECK(build_f1({3, 5, 2, 0b010}) == IntPolynomial({0, 0, -1, 1}));       // S={1}: -z^2+z^3
  CHECK(build_f1({3, 5, 2, 0b011}) == IntPolynomial({1, -1, -1, 1}));      // S={0,1}
}

TEST_CASE("block choice counting") {
  CHECK(block_choice_count(3, 2) == 4);
  CHECK(block_choice_count(3, 3) == 32);
  CHECK(block_choice_count(5, 2) == 16);
  CHECK(block_choice_count(7, 3) == 8192);

  // every index yields a distinct, structurally valid choice
  std::set<std::tuple<std::vector<std::uint32_t>, std::vector<std::uint32_t>, std::uint32_t>>
      seen;
  for (std::uint64_t i = 0; i < block_choice_count(3, 3); ++i) {
    BlockChoice b = block_choice_from_index(3, 3, i);
    REQUIRE(b.a_masks.size() == 1);
    REQUIRE(b.b_masks.size() == 1);
    CHECK(std::popcount(b.a_masks[0]) % 2 == 1);
    CHECK(std::popcount(b.b_masks[0]) % 2 == 1);
    CHECK(std::popcount(b.c_mask) % 2 == 1);
    CHECK(b.a_masks[0] < 8);
    CHECK(b.c_mask < 4);
    seen.insert({b.a_masks, b.b_masks, b.c_mask});
  }
  CHECK(seen.size() == 32);
  CHECK_THROWS_AS(block_choice_from_index(3, 3, 32), std::invalid_argument);
}

TEST_CASE("worked n=30 block choices reproduce the three sporadic polygons") {
  ConstructionParams params{3, 5, 2, 0b001};  // p=3, q=5, r=2, S={0}

  // A2=+0, B2=0-
  Composition a = composition_from_coefficients(
      construct_coefficients(params, fig2_blocks(kFirst, kSecond)));
  CHECK(a.parts() == std::vector<int>{7, 6, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 4, 1, 1});

  // A2=0+, B2=0-
  Composition b = composition_from_coefficients(
      construct_coefficients(params, fig2_blocks(kSecond, kSecond)));
  CHECK(b.parts() == std::vector<int>{6, 3, 1, 2, 1, 1, 1, 1, 2, 3, 1, 1, 4, 1, 2});

  // A2=0+ (or +0), B2=-0
  Composition c1 = composition_from_coefficients(
      construct_coefficients(params, fig2_blocks(kSecond, kFirst)));
  Composition c2 = composition_from_coefficients(
      construct_coefficients(params, fig2_blocks(kFirst, kFirst)));
  CHECK(c1.parts() == std::vector<int>{5, 4, 1, 2, 1, 1, 4, 3, 1, 1, 2, 1, 1, 1, 2});
  CHECK(c2 == c1);
}

TEST_CASE("constructed vectors satisfy the sign-vector shape on small grids") {
  // construct_coefficients checks tri-valuedness and alternation internally;
  // with 0 in S the strict vector type must accept the result as well
  for (auto [p, q, r] : {std::tuple{3, 5, 2}, {5, 3, 2}, {3, 5, 3}, {5, 3, 3}, {3, 7, 2}}) {
    for (std::uint32_t s_mask : subsets_all(p)) {
      ConstructionParams params{p, q, r, s_mask};
      for (std::uint64_t i = 0; i < block_choice_count(q, r); ++i) {
        BlockChoice blocks = block_choice_from_index(q, r, i);
        std::vector<std::int8_t> coeffs = construct_coefficients(params, blocks);
        if (s_mask & 1) CHECK(SignVector(coeffs).n() == p * q * r);
      }
    }
  }
}

TEST_CASE("injectivity of (S, blocks) -> F on small grids") {
  for (auto [p, q, r] : {std::tuple{3, 5, 2}, {5, 3, 2}, {3, 5, 3}, {5, 3, 3}, {3, 7, 2}}) {
    std::set<std::vector<std::int8_t>> seen;
    std::int64_t produced = 0;
    for (std::uint32_t s_mask : subsets_all(p)) {
      ConstructionParams params{p, q, r, s_mask};
      for (std::uint64_t i = 0; i < block_choice_count(q, r); ++i) {
        seen.insert(construct_coefficients(params, block_choice_from_index(q, r, i)));
        ++produced;
      }
    }
    CHECK(produced ==
          static_cast<std::int64_t>(((1 << p) - 2) * block_choice_count(q, r)));
    CHECK(static_cast<std::int64_t>(seen.size()) == produced);
  }
}

TEST_CASE("no constructed vector is qr-periodic, and periodic ones have the folded shape") {
  for (auto [p, q, r] : {std::tuple{3, 5, 2}, {5, 3, 2}, {3, 5, 3}, {5, 3, 3}}) {
    for (std::uint32_t s_mask : subsets_all(p)) {
      ConstructionParams params{p, q, r, s_mask};
      for (std::uint64_t i = 0; i < block_choice_count(q, r); ++i) {
        BlockChoice blocks = block_choice_from_index(q, r, i);
        auto coeffs = construct_coefficients(params, blocks);
        auto ds = periods(coeffs);
        // never d-periodic with n/d = p
        CHECK(std::find(ds.begin(), ds.end(), q * r) == ds.end());
        if (!ds.empty()) {
          // periodicity forces A_i = C0 = -B_i (same support masks)
          for (std::uint32_t m : blocks.a_masks) CHECK(m == blocks.c_mask);
          for (std::uint32_t m : blocks.b_masks) CHECK(m == blocks.c_mask);
        }
      }
    }
  }
}

TEST_CASE("periodic construction counts") {
  CHECK(count_periodic_constructed(5, 3, 2, SubsetPolicy::zero_only) == 1);  // 2^{r-2}
  CHECK(count_periodic_constructed(3, 5, 2, SubsetPolicy::zero_only) == 1);
  CHECK(count_periodic_constructed(3, 5, 3, SubsetPolicy::zero_only) == 2);
  CHECK(count_periodic_constructed(5, 3, 2, SubsetPolicy::all_nontrivial) == 30);
  CHECK(count_periodic_constructed(3, 5, 2, SubsetPolicy::all_nontrivial) == 6);
  CHECK(count_periodic_constructed(3, 5, 3, SubsetPolicy::all_nontrivial) == 12);
  CHECK(count_periodic_constructed(5, 3, 3, SubsetPolicy::all_nontrivial) == 60);
}

TEST_CASE("construct_sporadic reproduces the small known counts") {
  auto thirty = construct_sporadic(30);
  CHECK(thirty.sporadic.size() == 3);
  CHECK(thirty.raw_count == 216);
  CHECK(thirty.periodic_raw_count == 36);
  REQUIRE(thirty.factorizations.size() == 2);
  std::set<std::vector<int>> got;
  for (const auto& c : thirty.sporadic) got.insert(c.parts());
  CHECK(got == std::set<std::vector<int>>{
                   {7, 6, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 4, 1, 1},
                   {6, 3, 1, 2, 1, 1, 1, 1, 2, 3, 1, 1, 4, 1, 2},
                   {5, 4, 1, 2, 1, 1, 4, 3, 1, 1, 2, 1, 1, 1, 2}});

  CHECK(construct_sporadic(42).sporadic.size() == 9);
  CHECK(construct_sporadic(45).sporadic.size() == 144);

  // restricting S to subsets containing 0 already reaches the full set here
  SporadicConstructionOptions zero_in;
  zero_in.subsets = SubsetPolicy::zero_containing;
  CHECK(construct_sporadic(30, zero_in).sporadic.size() == 3);
  CHECK(construct_sporadic(42, zero_in).sporadic.size() == 9);

  // single ordered (p, q) choice constructs a subset
  SporadicConstructionOptions only35;
  only35.pq = std::make_pair(3, 5);
  auto partial = construct_sporadic(30, only35);
  CHECK(partial.factorizations ==
        std::vector<std::tuple<int, int, int>>{{3, 5, 2}});
  CHECK(partial.raw_count == 96);  // (2^3-2) * 2^{5*1-1}
  for (const auto& c : partial.sporadic) CHECK(got.count(c.parts()) == 1);

  // largest-part filter keeps only that stratum
  SporadicConstructionOptions lp;
  lp.largest_part = 7;
  auto sevens = construct_sporadic(30, lp);
  CHECK(sevens.sporadic.size() == 1);
  CHECK(sevens.sporadic[0].largest_part() == 7);
}

TEST_CASE("construct_sporadic outputs are sporadic Reinhardt polygons") {
  for (int n : {30, 42, 45}) {
    auto survey = construct_sporadic(n);
    auto enumerated = enumerate_reinhardt(n);
    std::set<std::vector<int>> enumerated_sporadic;
    for (const auto& [c, cls] : enumerated.polygons)
      if (!cls.is_periodic()) enumerated_sporadic.insert(c.parts());
    // at these n the construction reaches every sporadic polygon
    std::set<std::vector<int>> constructed;
    for (const auto& c : survey.sporadic) {
      CHECK_FALSE(classify(c).is_periodic());  // also verifies is_reinhardt
      constructed.insert(c.parts());
    }
    CHECK(constructed == enumerated_sporadic);
  }
}

TEST_CASE("construct_sporadic rejects non-pqr n") {
  for (int n : {9, 16, 21, 25, 27, 35})
    CHECK_THROWS_AS(construct_sporadic(n), std::invalid_argument);
  SporadicConstructionOptions bad_pq;
  bad_pq.pq = std::make_pair(3, 11);
  CHECK_THROWS_AS(construct_sporadic(30, bad_pq), std::invalid_argument);
}

TEST_CASE("decompose recovers the worked n=15 identity") {
  // f1 = z(1-z), f2 = Phi_3(-z) gives the same F as f1 = 1-z^3+z^4, f2 = 0
  IntPolynomial gen_p = compose_neg_power(cyclotomic(3), 5);  // Phi_3(-z^5)
  IntPolynomial gen_q = compose_neg_power(cyclotomic(5), 3);  // Phi_5(-z^3)
  IntPolynomial lhs = IntPolynomial({0, 1, -1}) * gen_p + IntPolynomial({1, -1, 1}) * gen_q;
  IntPolynomial rhs = IntPolynomial({1, 0, 0, -1, 1}) * gen_p;
  CHECK(lhs == rhs);

  SignVector F = composition_to_sign_vector(Composition({3, 1, 1, 3, 1, 1, 3, 1, 1}));
  CHECK(to_polynomial(F) == rhs);

  Decomposition d = decompose(F, 3, 5);
  CHECK(d.f1 * gen_p + d.f2 * gen_q == to_polynomial(F));
  for (const auto& coeff : d.f1.coeffs()) CHECK(abs(coeff) <= 1);
  for (const auto& coeff : d.f2.coeffs()) CHECK(abs(coeff) <= 1);
  CHECK(d.f1.degree() < 5);
  CHECK(d.f2.degree() < 3);
  CHECK(d.trivial);
}

TEST_CASE("decompose handles generator multiples and the regular polygon") {
  // F = Phi_p(-z^q): the f1 = 1, f2 = 0 configuration
  for (auto [p, q] : {std::pair{3, 5}, {5, 3}, {3, 7}}) {
    IntPolynomial gen_p = compose_neg_power(cyclotomic(p), q);
    std::vector<std::int8_t> entries(p * q, 0);
    for (int i = 0; i <= gen_p.degree(); ++i)
      entries[i] = static_cast<std::int8_t>(gen_p.coeff(i).get_si());
    SignVector F{entries};
    Decomposition d = decompose(F, p, q);
    CHECK(d.trivial);
    CHECK(d.f1 * gen_p + d.f2 * compose_neg_power(cyclotomic(q), p) == to_polynomial(F));
  }

  // regular pq-gon: fully alternating vector
  SignVector reg = composition_to_sign_vector(Composition(std::vector<int>(15, 1)));
  Decomposition d = decompose(reg, 3, 5);
  CHECK(d.trivial);
  CHECK(d.f1 * compose_neg_power(cyclotomic(3), 5) +
            d.f2 * compose_neg_power(cyclotomic(5), 3) ==
        to_polynomial(reg));
}

TEST_CASE("decompose reconstructs every Reinhardt polynomial at n = pq") {
  for (auto [p, q] : {std::pair{3, 5}, {3, 7}, {3, 11}, {5, 7}}) {
    const int n = p * q;
    IntPolynomial gen_p = compose_neg_power(cyclotomic(p), q);
    IntPolynomial gen_q = compose_neg_power(cyclotomic(q), p);
    for (const auto& [c, cls] : enumerate_reinhardt(n).polygons) {
      SignVector F = composition_to_sign_vector(c);
      Decomposition d = decompose(F, p, q);
      CHECK(d.f1 * gen_p + d.f2 * gen_q == to_polynomial(F));
      for (const auto& coeff : d.f1.coeffs()) CHECK(abs(coeff) <= 1);
      for (const auto& coeff : d.f2.coeffs()) CHECK(abs(coeff) <= 1);
      CHECK(d.f1.degree() < q);
      CHECK(d.f2.degree() < p);
    }
  }
}

TEST_CASE("trivial-decomposition dichotomy") {
  SignVector F311 = composition_to_sign_vector(Composition({3, 1, 1, 3, 1, 1, 3, 1, 1}));
  auto sides = has_trivial_decomposition(F311, 3, 5);
  CHECK(sides.p_side);  // Phi_3(-z^5) divides F
  CHECK_FALSE(sides.q_side);
  auto swapped = has_trivial_decomposition(F311, 5, 3);
  CHECK_FALSE(swapped.p_side);
  CHECK(swapped.q_side);

  SignVector reg = composition_to_sign_vector(Composition(std::vector<int>(15, 1)));
  auto both = has_trivial_decomposition(reg, 3, 5);
  CHECK(both.p_side);
  CHECK(both.q_side);

  for (auto [p, q] : {std::pair{3, 5}, {3, 7}, {3, 11}, {5, 7}}) {
    for (const auto& [c, cls] : enumerate_reinhardt(p * q).polygons) {
      auto check = has_trivial_decomposition(composition_to_sign_vector(c), p, q);
      CHECK((check.p_side || check.q_side));
    }
  }
}

TEST_CASE("decompose input validation") {
  SignVector F = composition_to_sign_vector(Composition({3, 1, 1, 3, 1, 1, 3, 1, 1}));
  CHECK_THROWS_AS(decompose(F, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(decompose(F, 3, 7), std::invalid_argument);  // wrong length
  SignVector bad = composition_to_sign_vector(Composition({11, 2, 2}));  // n=15
  if (!is_reinhardt(bad)) CHECK_THROWS_AS(decompose(bad, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(has_trivial_decomposition(F, 5, 7), std::invalid_argument);
}
