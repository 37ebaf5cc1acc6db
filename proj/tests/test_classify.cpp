#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "reinhardt/classify.hpp"
#include "reinhardt/enumerate.hpp"
#include "reinhardt/number_theory.hpp"

using namespace reinhardt;

namespace {

// composition-level periodicity: parts equal some block repeated m times
// with m odd and >= 3
bool composition_is_periodic(const std::vector<int>& parts) {
  const int r = static_cast<int>(parts.size());
  for (int m = 3; m <= r; m += 2) {
    if (r % m != 0) continue;
    const int s = r / m;
    bool ok = true;
    for (int i = s; i < r && ok; ++i) ok = parts[i] == parts[i % s];
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("periods examples") {
  auto of = [](std::vector<int> parts) {
    return periods(composition_to_sign_vector(Composition(std::move(parts))));
  };
  auto p777 = of({7, 7, 7});
  CHECK(std::find(p777.begin(), p777.end(), 7) != p777.end());

  CHECK(of(std::vector<int>(9, 1)) == std::vector<int>{1, 3});

  CHECK(of({7, 6, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 4, 1, 1}).empty());

  // [(3,1,1)^3]: d = 5 with three repetitions
  CHECK(of({3, 1, 1, 3, 1, 1, 3, 1, 1}) == std::vector<int>{5});
}

TEST_CASE("periods listing matches the defining relation") {
  // every listed d divides n with odd quotient and satisfies u_k = -u_{k+d};
  // no unlisted qualifying d does
  for (int n : {9, 15, 21, 30}) {
    for (const auto& [c, cls] : enumerate_reinhardt(n).polygons) {
      SignVector v = composition_to_sign_vector(c);
      auto ds = periods(v);
      size_t cursor = 0;
      for (int d = 1; d < n; ++d) {
        if (n % d != 0 || (n / d) % 2 == 0) continue;
        bool holds = true;
        for (int k = 0; k + d < n && holds; ++k)
          holds = v.entries()[k] == -v.entries()[k + d];
        bool listed = cursor < ds.size() && ds[cursor] == d;
        CHECK(holds == listed);
        if (listed) ++cursor;
      }
      CHECK(cursor == ds.size());
    }
  }
}

TEST_CASE("classify examples and rejection") {
  Classification period5 = classify(Composition({3, 1, 1, 3, 1, 1, 3, 1, 1}));
  CHECK(period5.is_periodic());
  CHECK(std::find(period5.periods.begin(), period5.periods.end(), 5) !=
        period5.periods.end());

  CHECK(classify(Composition(std::vector<int>(21, 1))).is_periodic());

  Classification fig2b = classify(Composition({6, 3, 1, 2, 1, 1, 1, 1, 2, 3, 1, 1, 4, 1, 2}));
  CHECK_FALSE(fig2b.is_periodic());
  CHECK(fig2b.periods.empty());

  CHECK_THROWS_AS(classify(Composition({4, 4, 1})), std::invalid_argument);
}

TEST_CASE("polynomial-level and composition-level periodicity coincide") {
  for (int n = 3; n <= 45; ++n) {
    if (is_power_of_two(n)) continue;
    for (const auto& [c, cls] : enumerate_reinhardt(n).polygons)
      CHECK(cls.is_periodic() == composition_is_periodic(c.parts()));
  }
}

TEST_CASE("mobius and totient") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(42) == -1);  // 2*3*7
  CHECK(totient(1) == 1);
  CHECK(totient(42) == 12);
  for (int p : {3, 5, 7, 11, 13, 31}) CHECK(totient(p) == p - 1);

  // brute-force oracles
  for (int n = 1; n <= 300; ++n) {
    int units = 0;
    for (int k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) ++units;
    CHECK(totient(n) == units);
  }
  // Sum over d|n of mu(d) is [n == 1]
  for (int n = 1; n <= 300; ++n) {
    int sum = 0;
    for (std::int64_t d : divisors(n)) sum += mobius(d);
    CHECK(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("odd dihedral composition count") {
  CHECK(odd_dihedral_composition_count(1) == 1);
  CHECK(odd_dihedral_composition_count(2) == 1);
  CHECK(odd_dihedral_composition_count(3) == 2);
  CHECK(odd_dihedral_composition_count(7) == 9);
  CHECK(odd_dihedral_composition_count(9) == 23);
  CHECK(odd_dihedral_composition_count(15) == 612);
  for (int m = 3; m <= 60; ++m)
    CHECK(odd_dihedral_composition_count(m).get_den() == 1);  // integral from m >= 3

  // oracle: count dihedral classes of odd compositions directly
  for (int m = 3; m <= 14; ++m) {
    std::set<std::vector<int>> classes;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
      if (remaining == 0) {
        if (parts.size() % 2 == 1) classes.insert(canonical_parts(parts));
        return;
      }
      for (int k = 1; k <= remaining; ++k) {
        parts.push_back(k);
        self(self, remaining - k);
        parts.pop_back();
      }
    };
    rec(rec, m);
    CHECK(odd_dihedral_composition_count(m) == static_cast<long>(classes.size()));
  }
}

TEST_CASE("periodic count formula") {
  CHECK(periodic_count_formula(21) == 10);
  CHECK(periodic_count_formula(30) == 38);
  CHECK(periodic_count_formula(15) == 5);
  CHECK_THROWS_AS(periodic_count_formula(16), std::invalid_argument);
  CHECK_THROWS_AS(periodic_count_formula(2), std::invalid_argument);
}

TEST_CASE("two prime count formula") {
  CHECK(two_prime_count_formula(3, 7) == 10);
  CHECK(two_prime_count_formula(3, 5) == 5);
  for (auto [p, q] : {std::pair{3, 5}, {3, 7}, {3, 11}, {5, 7}})
    CHECK(two_prime_count_formula(p, q) == periodic_count_formula(p * q));

  CHECK_THROWS_AS(two_prime_count_formula(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(two_prime_count_formula(3, 9), std::invalid_argument);
  CHECK_THROWS_AS(two_prime_count_formula(2, 5), std::invalid_argument);
}

TEST_CASE("formula equals enumerated periodic count") {
  for (int n = 3; n <= 40; ++n) {
    if (is_power_of_two(n)) continue;
    CHECK(periodic_count_formula(n) == enumerate_reinhardt(n).counts.periodic);
  }
}
