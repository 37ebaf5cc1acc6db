#include "reinhardt/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace reinhardt {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition: needs at least one part");
  if (parts_.size() % 2 == 0)
    throw std::invalid_argument("composition: number of parts must be odd");
  for (int k : parts_)
    if (k < 1) throw std::invalid_argument("composition: parts must be positive");
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Composition::largest_part() const {
  return *std::max_element(parts_.begin(), parts_.end());
}

SignVector::SignVector(std::vector<std::int8_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("sign vector: empty");
  if (entries_[0] != 1) throw std::invalid_argument("sign vector: entry 0 must be +1");
  int nonzero = 0;
  std::int8_t expected = 1;
  for (std::int8_t e : entries_) {
    if (e == 0) continue;
    if (e != 1 && e != -1)
      throw std::invalid_argument("sign vector: entries must lie in {-1,0,1}");
    if (e != expected)
      throw std::invalid_argument("sign vector: nonzero entries must alternate from +1");
    expected = -expected;
    ++nonzero;
  }
  if (nonzero % 2 == 0)
    throw std::invalid_argument("sign vector: number of nonzero entries must be odd");
}

SignVector composition_to_sign_vector(const Composition& c) {
  std::vector<std::int8_t> entries(c.n(), 0);
  int pos = 0;
  std::int8_t sign = 1;
  for (int k : c.parts()) {
    entries[pos] = sign;
    sign = -sign;
    pos += k;
  }
  return SignVector(std::move(entries));
}

Composition sign_vector_to_composition(const SignVector& v) {
  std::vector<int> parts;
  int prev = -1;
  for (int i = 0; i < v.n(); ++i) {
    if (v.entries()[i] == 0) continue;
    if (prev >= 0) parts.push_back(i - prev);
    prev = i;
  }
  parts.push_back(v.n() - prev);  // gap back to n
  return Composition(std::move(parts));
}

IntPolynomial to_polynomial(const SignVector& v) {
  std::vector<mpz_class> coeffs(v.n());
  for (int i = 0; i < v.n(); ++i) coeffs[i] = static_cast<int>(v.entries()[i]);
  return IntPolynomial(std::move(coeffs));
}

void canonical_parts_into(std::span<const int> parts, std::vector<int>& out) {
  const int r = static_cast<int>(parts.size());
  // Greatest rotation of the sequence or its reversal, compared in place.
  out.assign(parts.begin(), parts.end());
  // a candidate writes into out only from the position where it first wins;
  // the shared prefix is already identical
  auto consider = [&](auto index_of) {
    for (int s = 0; s < r; ++s) {
      bool better = false;
      for (int i = 0; i < r; ++i) {
        int v = parts[index_of(s, i)];
        if (!better) {
          if (v < out[i]) break;
          if (v > out[i]) better = true;
        }
        if (better) out[i] = v;
      }
    }
  };
  consider([&](int s, int i) { return (s + i) % r; });
  consider([&](int s, int i) { return (s - i % r + r) % r; });
}

std::vector<int> canonical_parts(std::span<const int> parts) {
  std::vector<int> best;
  canonical_parts_into(parts, best);
  return best;
}

Composition canonicalize(const Composition& c) {
  return Composition(canonical_parts(c.parts()));
}

bool is_reinhardt(const SignVector& v) {
  return divides(cyclotomic(2 * v.n()), to_polynomial(v));
}

bool is_reinhardt(const Composition& c) {
  return is_reinhardt(composition_to_sign_vector(c));
}

std::string format_composition(const Composition& c) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c.parts().size(); ++i) {
    if (i) os << ',';
    os << c.parts()[i];
  }
  os << ']';
  return os.str();
}

Composition parse_composition(std::string_view text) {
  auto fail = [&]() -> std::invalid_argument {
    return std::invalid_argument("malformed composition: expected [k1,k2,...], got '" +
                                 std::string(text) + "'");
  };
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) throw fail();
  std::string_view body = text.substr(begin, end - begin + 1);
  if (body.size() < 3 || body.front() != '[' || body.back() != ']') throw fail();
  body = body.substr(1, body.size() - 2);

  std::vector<int> parts;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string_view token = body.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
    size_t tb = token.find_first_not_of(" \t");
    size_t te = token.find_last_not_of(" \t");
    if (tb == std::string_view::npos) throw fail();
    token = token.substr(tb, te - tb + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) throw fail();
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));  // re-validates parts
}

}  // namespace reinhardt
