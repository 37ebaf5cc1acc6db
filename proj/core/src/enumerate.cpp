#include "reinhardt/enumerate.hpp"

#include <algorithm>
#include <atomic>

#include "reinhardt/internal_check.hpp"
#include "reinhardt/number_theory.hpp"
#include "reinhardt/parallel.hpp"

namespace reinhardt {

namespace detail {

namespace {

std::vector<std::int64_t> to_int64(const IntPolynomial& p, int width) {
  std::vector<std::int64_t> out(width, 0);
  detail::check(p.degree() < width, "reduced polynomial fits its width");
  for (int i = 0; i <= p.degree(); ++i) {
    detail::check(p.coeff(i).fits_slong_p(), "reduced coefficient fits int64");
    out[i] = p.coeff(i).get_si();
  }
  return out;
}

}  // namespace

ReductionTable ReductionTable::build(int n) {
  ReductionTable table;
  table.n = n;
  const IntPolynomial& phi = cyclotomic(2 * n);
  table.degree = phi.degree();
  detail::check(table.degree < n, "phi(2n) < n for n not a power of two");

  // z^i mod Phi_{2n} for i in [degree, n), exact then range-checked.
  IntPolynomial current = poly_divrem(IntPolynomial::monomial(table.degree), phi).remainder;
  IntPolynomial z = IntPolynomial::monomial(1);
  for (int i = table.degree; i < n; ++i) {
    table.reduced.push_back(to_int64(current, table.degree));
    if (i + 1 < n) current = poly_divrem(z * current, phi).remainder;
  }

  // (1-z)^{-1} mod Phi_{2n} is (Phi_{2n}(z) - 1)/(z - 1): Phi_{2n}(1) = 1
  // because 2n has at least two distinct prime factors.
  IntPolynomial z_minus_1({-1, 1});
  DivRem dr = poly_divrem(phi - IntPolynomial({1}), z_minus_1);
  detail::check(dr.remainder.is_zero(), "Phi_{2n} - 1 divisible by z - 1");
  IntPolynomial sanity = poly_divrem(IntPolynomial({1, -1}) * dr.quotient, phi).remainder;
  detail::check(sanity == IntPolynomial({1}), "(1-z) inverse verified");
  table.inv_one_minus_z = to_int64(dr.quotient, table.degree);

  // All spill arithmetic below stays within int64: bound the worst case.
  std::int64_t bound = 0;
  for (std::int64_t c : table.inv_one_minus_z) bound += std::abs(c);
  for (const auto& row : table.reduced)
    for (std::int64_t c : row) bound += std::abs(c);
  detail::check(bound < (std::int64_t{1} << 60), "spill sums cannot overflow");
  return table;
}

bool ReductionTable::divisible(std::span<const std::int8_t> coeffs) const {
  detail::check(static_cast<int>(coeffs.size()) == n, "coefficient length equals n");
  std::vector<std::int64_t> acc(degree, 0);
  for (int i = 0; i < degree; ++i) acc[i] = coeffs[i];
  for (int i = degree; i < n; ++i) {
    if (coeffs[i] == 0) continue;
    const auto& row = reduced[i - degree];
    if (coeffs[i] > 0)
      for (int t = 0; t < degree; ++t) acc[t] += row[t];
    else
      for (int t = 0; t < degree; ++t) acc[t] -= row[t];
  }
  return std::all_of(acc.begin(), acc.end(), [](std::int64_t v) { return v == 0; });
}

}  // namespace detail

namespace {

struct Survivor {
  std::vector<int> parts;  // canonical
};

// One shard of the prefix-split DFS over the free coefficient positions.
class ShardSearch {
 public:
  ShardSearch(const detail::ReductionTable& table, std::atomic<std::uint64_t>& nodes,
              std::uint64_t budget, std::atomic<bool>& exhausted)
      : table_(table),
        nodes_(nodes),
        budget_(budget),
        exhausted_(exhausted),
        n_(table.n),
        degree_(table.degree),
        spill_(table.degree, 0),
        bits_(table.n, 0) {}

  // free positions are [degree, n-1); position n-1 is pinned to 1.
  void run(std::uint64_t prefix, int prefix_len, std::vector<std::vector<int>>& out) {
    out_ = &out;
    add(n_ - 1);
    bits_[n_ - 1] = 1;
    for (int b = 0; b < prefix_len; ++b) {
      int pos = degree_ + b;
      if ((prefix >> b) & 1) {
        add(pos);
        bits_[pos] = 1;
      }
    }
    descend(degree_ + prefix_len);
  }

 private:
  void add(int i) {
    const auto& row = table_.reduced[i - degree_];
    for (int t = 0; t < degree_; ++t) spill_[t] += row[t];
  }
  void sub(int i) {
    const auto& row = table_.reduced[i - degree_];
    for (int t = 0; t < degree_; ++t) spill_[t] -= row[t];
  }

  void count_node() {
    std::uint64_t seen = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (seen > budget_) exhausted_.store(true, std::memory_order_relaxed);
  }

  void descend(int pos) {
    count_node();
    if (exhausted_.load(std::memory_order_relaxed)) return;
    if (pos == n_ - 1) {
      harvest();
      return;
    }
    bits_[pos] = 0;
    descend(pos + 1);
    bits_[pos] = 1;
    add(pos);
    descend(pos + 1);
    sub(pos);
    bits_[pos] = 0;
  }

  // Leaf: low coefficients are forced; accept iff all land in {0,1} with
  // c_0 = 1, then convert prefix sums back to parts.
  void harvest() {
    const auto& inv = table_.inv_one_minus_z;
    for (int t = 0; t < degree_; ++t) {
      std::int64_t c = inv[t] - spill_[t];
      if (c != 0 && c != 1) return;
      bits_[t] = static_cast<std::int8_t>(c);
    }
    if (bits_[0] != 1) return;

    parts_.clear();
    int prev_level = 0;
    int last_change = -1;
    for (int i = 0; i < n_; ++i) {
      if (bits_[i] != prev_level) {
        if (last_change >= 0) parts_.push_back(i - last_change);
        last_change = i;
        prev_level = bits_[i];
      }
    }
    parts_.push_back(n_ - last_change);
    out_->push_back(canonical_parts(parts_));
  }

  const detail::ReductionTable& table_;
  std::atomic<std::uint64_t>& nodes_;
  const std::uint64_t budget_;
  std::atomic<bool>& exhausted_;
  const int n_;
  const int degree_;
  std::vector<std::int64_t> spill_;
  std::vector<std::int8_t> bits_;  // c_i; low entries filled at leaves
  std::vector<int> parts_;
  std::vector<std::vector<int>>* out_ = nullptr;
};

}  // namespace

EnumerationResult enumerate_reinhardt(int n, const EnumerationOptions& opts) {
  if (n < 3 || is_power_of_two(n))
    throw std::invalid_argument(
        "enumerate: no Reinhardt polygons exist; n must be >= 3 and not a power of two");

  const detail::ReductionTable table = detail::ReductionTable::build(n);
  const int free_bits = (n - 1) - table.degree;  // positions [degree, n-1)

  const int threads = resolve_threads(opts.threads);
  int prefix_len = 0;
  while (prefix_len < free_bits && (1 << prefix_len) < 8 * threads && prefix_len < 10)
    ++prefix_len;

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  const std::int64_t shard_count = std::int64_t{1} << prefix_len;
  std::vector<std::vector<std::vector<int>>> shard_out(shard_count);

  run_sharded(shard_count, threads, [&](std::int64_t shard) {
    ShardSearch search(table, nodes, opts.node_budget, exhausted);
    search.run(static_cast<std::uint64_t>(shard), prefix_len, shard_out[shard]);
  });

  if (exhausted.load())
    throw budget_exhausted_error("enumeration for n=" + std::to_string(n) +
                                 " exceeded the node budget of " +
                                 std::to_string(opts.node_budget) +
                                 " (incomplete; raise --budget to continue)");

  // Merge in shard order, then sort and deduplicate canonical forms.
  std::vector<std::vector<int>> all;
  for (auto& shard : shard_out)
    for (auto& parts : shard) all.push_back(std::move(parts));
  std::sort(all.begin(), all.end(), std::greater<>());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  EnumerationResult result;
  result.n = n;
  result.polygons.reserve(all.size());
  for (auto& parts : all) {
    Composition c(std::move(parts));
    SignVector v = composition_to_sign_vector(c);
    Classification cls;
    cls.periods = periods(v);
    cls.kind = cls.periods.empty() ? Periodicity::sporadic : Periodicity::periodic;
    auto& stratum = result.by_largest_part[c.largest_part()];
    stratum.total += 1;
    result.counts.total += 1;
    if (cls.is_periodic()) {
      result.counts.periodic += 1;
    } else {
      result.counts.sporadic += 1;
      stratum.sporadic += 1;
    }
    result.polygons.emplace_back(std::move(c), std::move(cls));
  }
  return result;
}

CountSummary count_summary(const EnumerationResult& result) { return result.counts; }

EnumerationResult enumerate_with_cache(int n, const std::filesystem::path& dir,
                                       const EnumerationOptions& opts) {
  if (auto cached = load_cache(n, dir)) return std::move(*cached);
  EnumerationResult result = enumerate_reinhardt(n, opts);
  try {
    store_cache(result, dir);
  } catch (const cache_error&) {
    // an unwritable cache never blocks a completed enumeration
  }
  return result;
}

}  // namespace reinhardt
