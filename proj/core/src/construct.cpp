#include "reinhardt/construct.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>

#include "reinhardt/internal_check.hpp"
#include "reinhardt/number_theory.hpp"
#include "reinhardt/parallel.hpp"

namespace reinhardt {

namespace {

bool is_odd_prime(int v) { return v >= 3 && v % 2 == 1 && is_prime(v); }

// Odd-popcount masks over `width` bits, indexed by their width-1 free bits:
// the low bit is forced by parity. width >= 1.
std::uint32_t odd_mask_from_index([[maybe_unused]] int width, std::uint32_t index) {
  std::uint32_t mask = index << 1;
  if (std::popcount(mask) % 2 == 0) mask |= 1;
  return mask;
}

std::uint64_t odd_mask_count(int width) { return std::uint64_t{1} << (width - 1); }

// Writes one +-alternating block into F at `offset`, scaled by `sign`.
void add_block(std::vector<std::int8_t>& f, int offset, std::uint32_t mask, int width,
               int first_sign, int sign) {
  int s = first_sign * sign;
  for (int j = 0; j < width; ++j) {
    if ((mask >> j) & 1) {
      f[offset + j] = static_cast<std::int8_t>(f[offset + j] + s);
      s = -s;
    }
  }
}

struct Grid {
  ConstructionParams params;  // s_mask varies over the sweep
  std::vector<std::uint32_t> subsets;
};

std::vector<std::uint32_t> subsets_for_policy(int p, SubsetPolicy policy) {
  std::vector<std::uint32_t> out;
  const std::uint32_t full = (std::uint32_t{1} << p) - 1;
  switch (policy) {
    case SubsetPolicy::zero_only:
      out.push_back(1);
      break;
    case SubsetPolicy::zero_containing:
      for (std::uint32_t m = 1; m < full; m += 2) out.push_back(m);
      break;
    case SubsetPolicy::all_nontrivial:
      for (std::uint32_t m = 1; m < full; ++m) out.push_back(m);
      break;
  }
  return out;
}

}  // namespace

void validate_params(const ConstructionParams& params) {
  if (!is_odd_prime(params.p) || !is_odd_prime(params.q) || params.p == params.q)
    throw std::invalid_argument("construction: p and q must be distinct odd primes");
  if (params.r < 2) throw std::invalid_argument("construction: r must be >= 2");
  const std::uint32_t full = (std::uint32_t{1} << params.p) - 1;
  if (params.s_mask == 0 || params.s_mask >= full)
    throw std::invalid_argument("construction: S must be a nonempty proper subset of {0..p-1}");
}

std::uint64_t block_choice_count(int q, int r) {
  if (!is_odd_prime(q) || r < 2)
    throw std::invalid_argument("block_choice_count: q odd prime and r >= 2 required");
  return std::uint64_t{1} << (q * (r - 1) - 1);
}

namespace {

void block_choice_into(int q, int r, std::uint64_t index, BlockChoice& choice) {
  const int t = (q - 1) / 2;
  const std::uint64_t ab_radix = odd_mask_count(r);
  choice.a_masks.resize(t);
  choice.b_masks.resize(t);
  for (int i = 0; i < t; ++i) {
    choice.a_masks[i] = odd_mask_from_index(r, static_cast<std::uint32_t>(index % ab_radix));
    index /= ab_radix;
    choice.b_masks[i] = odd_mask_from_index(r, static_cast<std::uint32_t>(index % ab_radix));
    index /= ab_radix;
  }
  choice.c_mask = odd_mask_from_index(r - 1, static_cast<std::uint32_t>(index));
}

}  // namespace

BlockChoice block_choice_from_index(int q, int r, std::uint64_t index) {
  if (index >= block_choice_count(q, r))
    throw std::invalid_argument("block_choice_from_index: index out of range");
  BlockChoice choice;
  block_choice_into(q, r, index, choice);
  return choice;
}

IntPolynomial build_f1(const ConstructionParams& params) {
  validate_params(params);
  std::vector<mpz_class> coeffs(static_cast<size_t>(params.r) * (params.p - 1) + 2);
  for (int s = 0; s < params.p; ++s) {
    if (!((params.s_mask >> s) & 1)) continue;
    int sign = (s % 2 == 0) ? 1 : -1;
    coeffs[static_cast<size_t>(params.r) * s] += sign;
    coeffs[static_cast<size_t>(params.r) * s + 1] -= sign;
  }
  return IntPolynomial(std::move(coeffs));
}

namespace {

void construct_into(const ConstructionParams& params, const BlockChoice& blocks,
                    std::vector<std::int8_t>& f) {
  const int p = params.p, q = params.q, r = params.r, n = params.n();
  const int t = (q - 1) / 2;
  f.assign(n, 0);
  // g1 = f1 * Phi_q(-z^{pr}): q rows of length pr, alternating row sign,
  // every row holding the f1 pattern (+1,-1 at positions rs, rs+1 per s in S).
  for (int k = 0; k < q; ++k) {
    int row_sign = (k % 2 == 0) ? 1 : -1;
    int offset = k * p * r;
    for (int s = 0; s < p; ++s) {
      if (!((params.s_mask >> s) & 1)) continue;
      int sign = (s % 2 == 0) ? row_sign : -row_sign;
      f[offset + r * s] = static_cast<std::int8_t>(f[offset + r * s] + sign);
      f[offset + r * s + 1] = static_cast<std::int8_t>(f[offset + r * s + 1] - sign);
    }
  }
  // g2 = f2 * Phi_p(-z^{qr}): p rows of length qr, row k = (-1)^k f2, where
  // f2 = 0 A_1 B_1 ... A_t B_t C.
  for (int k = 0; k < p; ++k) {
    int row_sign = (k % 2 == 0) ? 1 : -1;
    int offset = k * q * r;
    int cursor = offset + 1;
    for (int i = 0; i < t; ++i) {
      add_block(f, cursor, blocks.a_masks[i], r, +1, row_sign);
      cursor += r;
      add_block(f, cursor, blocks.b_masks[i], r, -1, row_sign);
      cursor += r;
    }
    add_block(f, cursor, blocks.c_mask, r - 1, +1, row_sign);
  }

  // The overlay argument guarantees this shape; anything else is a bug.
  int prev = 0;
  int nonzero = 0;
  for (int i = 0; i < n; ++i) {
    detail::check(f[i] >= -1 && f[i] <= 1, "constructed coefficients lie in {-1,0,1}");
    if (f[i] == 0) continue;
    detail::check(prev == 0 || f[i] == -prev, "constructed nonzero signs alternate");
    prev = f[i];
    ++nonzero;
  }
  detail::check(nonzero % 2 == 1, "constructed vector has an odd number of nonzero entries");
}

}  // namespace

std::vector<std::int8_t> construct_coefficients(const ConstructionParams& params,
                                                const BlockChoice& blocks) {
  validate_params(params);
  if (static_cast<int>(blocks.a_masks.size()) != (params.q - 1) / 2 ||
      static_cast<int>(blocks.b_masks.size()) != (params.q - 1) / 2)
    throw std::invalid_argument("construct: block choice does not match (q-1)/2 pairs");
  std::vector<std::int8_t> f;
  construct_into(params, blocks, f);
  return f;
}

Composition composition_from_coefficients(std::span<const std::int8_t> coeffs) {
  const int n = static_cast<int>(coeffs.size());
  std::vector<int> parts;
  int first = -1, prev = -1;
  for (int i = 0; i < n; ++i) {
    if (coeffs[i] == 0) continue;
    if (first < 0)
      first = i;
    else
      parts.push_back(i - prev);
    prev = i;
  }
  if (first < 0) throw std::invalid_argument("composition_from_coefficients: zero vector");
  parts.push_back(n - prev + first);  // cyclic gap through position n ~ 0
  return Composition(canonical_parts(parts));
}

SignVector construct_sign_vector(const ConstructionParams& params, const BlockChoice& blocks) {
  if (!(params.s_mask & 1))
    throw std::invalid_argument("construct_sign_vector: requires 0 in S");
  return SignVector(construct_coefficients(params, blocks));
}

namespace {

std::vector<std::tuple<int, int, int>> pqr_factorizations(int n) {
  std::vector<std::tuple<int, int, int>> out;
  auto odd_primes = odd_prime_factors(n);
  for (std::int64_t p : odd_primes)
    for (std::int64_t q : odd_primes) {
      if (p == q) continue;
      if (n % (p * q) != 0) continue;
      int r = static_cast<int>(n / (p * q));
      if (r >= 2) out.emplace_back(static_cast<int>(p), static_cast<int>(q), r);
    }
  return out;
}

// Runs fn(shard, params, raw_coefficients) over every (S, block) in the
// grid, sharded by block index. Scratch buffers are reused per worker; fn
// must be safe per shard slot and must not retain the span.
template <class Fn>
void sweep_grid(const ConstructionParams& base, std::span<const std::uint32_t> subsets,
                int threads, std::int64_t shard_count, Fn&& fn) {
  const std::uint64_t blocks_total = block_choice_count(base.q, base.r);
  const std::uint64_t chunk = (blocks_total + shard_count - 1) / shard_count;
  run_sharded(shard_count, threads, [&](std::int64_t shard) {
    const std::uint64_t begin = shard * chunk;
    const std::uint64_t end = std::min(blocks_total, begin + chunk);
    ConstructionParams params = base;
    BlockChoice choice;
    std::vector<std::int8_t> coeffs;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      block_choice_into(base.q, base.r, idx, choice);
      for (std::uint32_t s_mask : subsets) {
        params.s_mask = s_mask;
        construct_into(params, choice, coeffs);
        fn(shard, params, std::span<const std::int8_t>(coeffs));
      }
    }
  });
}

}  // namespace

namespace {

// Canonical parts deduplicated across the whole sweep. Keys are uint16-packed
// part sequences, striped by hash so shards rarely contend on one lock.
class DistinctCompositions {
 public:
  void insert(std::span<const int> parts) {
    key_buffer_.clear();
    for (int v : parts) {
      key_buffer_.push_back(static_cast<char>(v & 0xff));
      key_buffer_.push_back(static_cast<char>((v >> 8) & 0xff));
    }
    const std::string_view key(key_buffer_);
    const size_t h = std::hash<std::string_view>{}(key);
    Stripe& stripe = stripes_[h % kStripes];
    std::lock_guard<std::mutex> lock(stripe.mutex);
    if (stripe.keys.find(key) == stripe.keys.end()) stripe.keys.emplace(key);
  }

  std::vector<Composition> sorted_decreasing() const {
    std::vector<std::vector<int>> all;
    for (const Stripe& stripe : stripes_)
      for (const std::string& key : stripe.keys) {
        std::vector<int> parts;
        parts.reserve(key.size() / 2);
        for (size_t i = 0; i < key.size(); i += 2)
          parts.push_back(static_cast<unsigned char>(key[i]) |
                          (static_cast<unsigned char>(key[i + 1]) << 8));
        all.push_back(std::move(parts));
      }
    std::sort(all.begin(), all.end(), std::greater<>());
    std::vector<Composition> out;
    out.reserve(all.size());
    for (auto& parts : all) out.emplace_back(std::move(parts));
    return out;
  }

  std::int64_t size() const {
    std::int64_t total = 0;
    for (const Stripe& stripe : stripes_) total += static_cast<std::int64_t>(stripe.keys.size());
    return total;
  }

 private:
  static constexpr size_t kStripes = 64;
  struct TransparentHash {
    using is_transparent = void;
    size_t operator()(std::string_view sv) const {
      return std::hash<std::string_view>{}(sv);
    }
    size_t operator()(const std::string& s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  struct Stripe {
    std::mutex mutex;
    std::unordered_set<std::string, TransparentHash, std::equal_to<>> keys;
  };
  std::array<Stripe, kStripes> stripes_;
  static thread_local std::string key_buffer_;
};

thread_local std::string DistinctCompositions::key_buffer_;

}  // namespace

ConstructionSurvey construct_sporadic(int n, const SporadicConstructionOptions& opts) {
  ConstructionSurvey survey;
  survey.n = n;
  survey.factorizations = pqr_factorizations(n);
  if (opts.pq) {
    auto [p, q] = *opts.pq;
    std::erase_if(survey.factorizations,
                  [&](const auto& f) { return std::get<0>(f) != p || std::get<1>(f) != q; });
    if (survey.factorizations.empty())
      throw std::invalid_argument("construct: (p,q)=(" + std::to_string(p) + "," +
                                  std::to_string(q) + ") does not factor n=" +
                                  std::to_string(n) + " as pqr with r >= 2");
  }
  if (survey.factorizations.empty())
    throw std::invalid_argument(
        "construct: n=" + std::to_string(n) +
        " is not of the form p*q*r with p, q distinct odd primes and r >= 2");

  const int threads = resolve_threads(opts.threads);
  const std::vector<int> period_divisors = maximal_period_divisors(n);
  DistinctCompositions distinct;

  struct Scratch {
    std::vector<int> gaps;
    std::vector<int> canon;
  };

  for (auto [p, q, r] : survey.factorizations) {
    ConstructionParams base{p, q, r, 1};
    auto subsets = subsets_for_policy(p, opts.subsets);
    const std::int64_t shard_count =
        std::min<std::int64_t>(block_choice_count(q, r), std::int64_t{8} * threads);
    std::vector<std::int64_t> raw(shard_count, 0), periodic(shard_count, 0);
    std::vector<Scratch> scratch(shard_count);

    sweep_grid(base, subsets, threads, shard_count,
               [&](std::int64_t shard, const ConstructionParams&,
                   std::span<const std::int8_t> coeffs) {
                 raw[shard] += 1;
                 if (has_any_period(coeffs, period_divisors)) {
                   periodic[shard] += 1;
                   return;
                 }
                 Scratch& s = scratch[shard];
                 s.gaps.clear();
                 int first = -1, prev = -1, largest = 0;
                 for (int i = 0; i < n; ++i) {
                   if (coeffs[i] == 0) continue;
                   if (first < 0)
                     first = i;
                   else
                     s.gaps.push_back(i - prev);
                   prev = i;
                 }
                 s.gaps.push_back(n - prev + first);
                 if (opts.largest_part) {
                   for (int g : s.gaps) largest = std::max(largest, g);
                   if (largest != *opts.largest_part) return;
                 }
                 canonical_parts_into(s.gaps, s.canon);
                 distinct.insert(s.canon);
               });

    for (std::int64_t shard = 0; shard < shard_count; ++shard) {
      survey.raw_count += raw[shard];
      survey.periodic_raw_count += periodic[shard];
    }
  }

  survey.sporadic = distinct.sorted_decreasing();
  return survey;
}

std::int64_t count_periodic_constructed(int p, int q, int r, SubsetPolicy subsets,
                                        int threads) {
  ConstructionParams base{p, q, r, 1};
  validate_params(base);
  auto subset_masks = subsets_for_policy(p, subsets);
  const std::vector<int> period_divisors = maximal_period_divisors(base.n());
  threads = resolve_threads(threads);
  const std::int64_t shard_count =
      std::min<std::int64_t>(block_choice_count(q, r), std::int64_t{8} * threads);
  std::vector<std::int64_t> periodic(shard_count, 0);
  sweep_grid(base, subset_masks, threads, shard_count,
             [&](std::int64_t shard, const ConstructionParams&,
                 std::span<const std::int8_t> coeffs) {
               if (has_any_period(coeffs, period_divisors)) periodic[shard] += 1;
             });
  std::int64_t total = 0;
  for (std::int64_t v : periodic) total += v;
  return total;
}

void for_each_construction(
    int p, int q, int r, SubsetPolicy subsets, int threads,
    const std::function<void(std::int64_t, std::span<const std::int8_t>)>& sink) {
  ConstructionParams base{p, q, r, 1};
  validate_params(base);
  auto subset_masks = subsets_for_policy(p, subsets);
  threads = resolve_threads(threads);
  const std::int64_t shard_count =
      std::min<std::int64_t>(block_choice_count(q, r), std::int64_t{8} * threads);
  sweep_grid(base, subset_masks, threads, shard_count,
             [&](std::int64_t shard, const ConstructionParams&,
                 std::span<const std::int8_t> coeffs) { sink(shard, coeffs); });
}

// ---- decomposition over the two generators ----

namespace {

// Bezout pair for the all-ones polynomials: a*ones(p) + b*ones(q) == 1.
// The division identity ones(s) = (sum_{k=1..u} z^{s-kt}) ones(t) + ones(v)
// for s = ut + v keeps every step in Z[z], mirroring gcd on the exponents.
std::pair<IntPolynomial, IntPolynomial> all_ones_bezout(int p, int q) {
  struct Row {
    int len;
    IntPolynomial a, b;
  };
  Row r0{p, IntPolynomial({1}), IntPolynomial{}};
  Row r1{q, IntPolynomial{}, IntPolynomial({1})};
  while (r1.len > 0) {
    const int u = r0.len / r1.len;
    const int v = r0.len % r1.len;
    IntPolynomial quotient;
    if (u > 0) {
      std::vector<mpz_class> qc(static_cast<size_t>(r0.len - r1.len) + 1);
      for (int k = 1; k <= u; ++k) qc[r0.len - k * r1.len] = 1;
      quotient = IntPolynomial(std::move(qc));
    }
    Row next{v, r0.a - quotient * r1.a, r0.b - quotient * r1.b};
    r0 = std::move(r1);
    r1 = std::move(next);
  }
  detail::check(r0.len == 1, "gcd of all-ones polynomials for coprime exponents is 1");
  detail::check(r0.a * all_ones(p) + r0.b * all_ones(q) == IntPolynomial({1}),
                "Bezout identity verified");
  return {r0.a, r0.b};
}

IntPolynomial negate_variable(const IntPolynomial& f) {
  std::vector<mpz_class> v(f.coeffs());
  for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPolynomial(std::move(v));
}

bool tri_valued(const IntPolynomial& f) {
  for (const mpz_class& c : f.coeffs())
    if (c < -1 || c > 1) return false;
  return true;
}

void validate_pq_vector(const SignVector& F, int p, int q, const char* who) {
  if (!is_odd_prime(p) || !is_odd_prime(q) || p == q)
    throw std::invalid_argument(std::string(who) + ": p and q must be distinct odd primes");
  if (F.n() != p * q)
    throw std::invalid_argument(std::string(who) + ": vector length must equal p*q");
  if (!is_reinhardt(F))
    throw std::invalid_argument(std::string(who) + ": input is not a Reinhardt polynomial");
}

}  // namespace

TrivialDecompositionCheck has_trivial_decomposition(const SignVector& F, int p, int q) {
  validate_pq_vector(F, p, q, "has_trivial_decomposition");
  IntPolynomial poly = to_polynomial(F);
  return {divides(compose_neg_power(cyclotomic(p), q), poly),
          divides(compose_neg_power(cyclotomic(q), p), poly)};
}

Decomposition decompose(const SignVector& F, int p, int q) {
  validate_pq_vector(F, p, q, "decompose");
  const int n = p * q;
  const IntPolynomial poly = to_polynomial(F);
  const IntPolynomial gen_p = compose_neg_power(cyclotomic(p), q);  // Phi_p(-z^q)
  const IntPolynomial gen_q = compose_neg_power(cyclotomic(q), p);  // Phi_q(-z^p)
  const IntPolynomial& phi2p = cyclotomic(2 * p);
  const IntPolynomial& phi2q = cyclotomic(2 * q);

  // F = h * Phi_{2pq}; cofactors from a*Phi_p + b*Phi_q = 1 taken at -z.
  DivRem top = poly_divrem(poly, cyclotomic(2 * n));
  detail::check(top.remainder.is_zero(), "Reinhardt polynomial divisible by Phi_{2n}");
  const IntPolynomial h = top.quotient;
  auto [a, b] = all_ones_bezout(p, q);
  const IntPolynomial a_neg = negate_variable(a);
  const IntPolynomial b_neg = negate_variable(b);
  detail::check(a_neg * phi2p + b_neg * phi2q == IntPolynomial({1}),
                "negated Bezout identity holds");

  // Reduce h*a(-z) mod Phi_{2q}; fold the quotient into the other side.
  DivRem split = poly_divrem(h * a_neg, phi2q);
  IntPolynomial f1 = split.remainder;
  IntPolynomial f2 = h * b_neg + split.quotient * phi2p;
  detail::check(f1 * gen_p + f2 * gen_q == poly, "decomposition reconstructs F");
  detail::check(f1.degree() < q && f2.degree() < p, "decomposition degree bounds");

  // Normalize s_0 = 1, t_0 = 0 with the (f1 + m Phi_{2q}, f2 - m Phi_{2p}) shift.
  mpz_class shift = 1 - f1.coeff(0);
  if (shift != 0) {
    IntPolynomial scalar{std::vector<mpz_class>{shift}};
    f1 = f1 + scalar * phi2q;
    f2 = f2 - scalar * phi2p;
  }
  IntPolynomial s = f1 * gen_p;
  detail::check(s.coeff(0) == 1 && f2.coeff(0) == 0, "s0 = 1 and t0 = 0 after shift");
  detail::check(tri_valued(s), "s-sequence is tri-valued once s0 = 1");

  bool s_has_zero = false;
  for (int i = 1; i < n; ++i)
    if (s.coeff(i) == 0) {
      s_has_zero = true;
      break;
    }
  if (!s_has_zero) {
    IntPolynomial t = f2 * gen_q;
    bool cancellation = false;
    for (int i = 0; i < n; ++i)
      if (s.coeff(i) + t.coeff(i) == 0) {
        cancellation = true;
        break;
      }
    if (!cancellation) {
      // Every coefficient of F is nonzero: F is the fully alternating vector
      // and the trivial pair (Phi_{2q}, 0) represents it.
      f1 = phi2q;
      f2 = IntPolynomial{};
      detail::check(f1 * gen_p == poly, "fully alternating vector matches Phi_{2q} * gen_p");
    } else {
      // The shifted pair is forced: f1 collapses to zero.
      detail::check(f1 == phi2q, "cancellation case forces f1 = Phi_{2q}");
      f1 = IntPolynomial{};
      f2 = f2 + phi2p;
      detail::check(f2 * gen_q == poly, "collapsed decomposition reconstructs F");
    }
  }

  detail::check(tri_valued(f1) && tri_valued(f2), "decomposition is tri-valued");
  detail::check(f1 * gen_p + f2 * gen_q == poly, "final decomposition reconstructs F");

  Decomposition result;
  result.trivial = f1.is_zero() || f1 == phi2q || f2.is_zero() || f2 == phi2p;
  result.f1 = std::move(f1);
  result.f2 = std::move(f2);
  return result;
}

}  // namespace reinhardt
