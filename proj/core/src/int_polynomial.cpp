#include "reinhardt/int_polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "reinhardt/internal_check.hpp"
#include "reinhardt/number_theory.hpp"

namespace reinhardt {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(int degree, const mpz_class& c) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  if (c == 0) return IntPolynomial{};
  std::vector<mpz_class> v(degree + 1);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[i];
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<mpz_class> v(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    if (i < a.coeffs_.size()) v[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) v[i] += b.coeffs_[i];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    if (i < a.coeffs_.size()) v[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) v[i] -= b.coeffs_[i];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial{};
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

DivRem poly_divrem(const IntPolynomial& num, const IntPolynomial& den) {
  if (!den.is_monic()) throw std::invalid_argument("poly_divrem: divisor must be monic");
  const int dd = den.degree();
  if (num.degree() < dd) return {IntPolynomial{}, num};

  std::vector<mpz_class> rem(num.coeffs());
  std::vector<mpz_class> quot(num.degree() - dd + 1);
  for (int k = num.degree() - dd; k >= 0; --k) {
    mpz_class& c = rem[k + dd];
    if (c == 0) continue;
    quot[k] = c;
    // rem -= c * z^k * den; leading term cancels by construction
    for (int j = 0; j < dd; ++j) rem[k + j] -= quot[k] * den.coeffs()[j];
    c = 0;
  }
  rem.resize(dd);
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool divides(const IntPolynomial& den, const IntPolynomial& num) {
  return poly_divrem(num, den).remainder.is_zero();
}

IntPolynomial all_ones(int count) {
  if (count < 0) throw std::invalid_argument("all_ones: count must be >= 0");
  std::vector<mpz_class> v(count, mpz_class(1));
  return IntPolynomial(std::move(v));
}

IntPolynomial compose_neg_power(const IntPolynomial& f, int k) {
  if (k < 1) throw std::invalid_argument("compose_neg_power: exponent must be >= 1");
  if (f.is_zero()) return f;
  std::vector<mpz_class> v(static_cast<size_t>(f.degree()) * k + 1);
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeffs()[i] == 0) continue;
    v[static_cast<size_t>(i) * k] = (i % 2 == 0) ? f.coeffs()[i] : -f.coeffs()[i];
  }
  return IntPolynomial(std::move(v));
}

const IntPolynomial& cyclotomic(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic: m must be >= 1");
  static std::mutex mutex;
  static std::map<int, IntPolynomial> memo;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;

  // prod over d | m of (z^{m/d} - 1)^{mu(d)}: multiply the mu = +1 factors,
  // then exact-divide by the mu = -1 factors (each is monic).
  IntPolynomial result({-1, 1});  // placeholder, replaced below
  {
    IntPolynomial numerator({1});
    std::vector<int> denominator_exps;
    for (std::int64_t d : divisors(m)) {
      int mu = mobius(d);
      if (mu == 0) continue;
      int e = static_cast<int>(m / d);
      IntPolynomial factor = IntPolynomial::monomial(e) - IntPolynomial({1});
      if (mu == 1) {
        numerator = numerator * factor;
      } else {
        denominator_exps.push_back(e);
      }
    }
    result = numerator;
    for (int e : denominator_exps) {
      IntPolynomial factor = IntPolynomial::monomial(e) - IntPolynomial({1});
      DivRem dr = poly_divrem(result, factor);
      detail::check(dr.remainder.is_zero(), "cyclotomic product division is exact");
      result = std::move(dr.quotient);
    }
    detail::check(result.is_monic(), "cyclotomic polynomial is monic");
    detail::check(result.degree() == totient(m), "cyclotomic degree equals totient");
  }
  return memo.emplace(m, std::move(result)).first->second;
}

}  // namespace reinhardt
