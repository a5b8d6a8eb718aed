#include "walklab/numerics.hpp"

#include <cmath>
#include <mutex>
#include <numeric>

namespace walklab {

Ratio::Ratio(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw UsageError("Ratio: zero denominator");
  q_.canonicalize();
}

Ratio Ratio::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (text.find('.') != std::string::npos)
        throw UsageError("Ratio: decimal input rejected, use a/b: " + text);
      return Ratio(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    return Ratio(num, den);
  } catch (const std::invalid_argument&) {
    throw UsageError("Ratio: cannot parse '" + text + "'");
  }
}

Ratio Ratio::operator/(const Ratio& o) const {
  if (o.q_ == 0) throw UsageError("Ratio: division by zero");
  return Ratio(mpq_class(q_ / o.q_));
}

Ratio Ratio::pow(unsigned long e) const {
  BigInt num = q_.get_num(), den = q_.get_den();
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), num.get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), den.get_mpz_t(), e);
  return Ratio(n, d);
}

Ratio Ratio::inverse() const {
  if (q_ == 0) throw UsageError("Ratio: inverse of zero");
  return Ratio(BigInt(q_.get_den()), BigInt(q_.get_num()));
}

std::string Ratio::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Ratio::to_decimal(int precision) const {
  if (precision < 1) throw UsageError("precision must be >= 1");
  const bool negative = q_ < 0;
  BigInt num = ::abs(q_.get_num());
  BigInt den = q_.get_den();
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(precision));
  BigInt scaled = num * scale;
  BigInt quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(),
              den.get_mpz_t());
  // round half to even
  BigInt twice = rem * 2;
  int cmp = ::cmp(twice, den);
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(quot.get_mpz_t()))) quot += 1;

  std::string digits = quot.get_str();
  if (static_cast<int>(digits.size()) <= precision)
    digits.insert(0, std::string(precision + 1 - digits.size(), '0'));
  digits.insert(digits.size() - precision, ".");
  if (negative && quot != 0) digits.insert(0, "-");
  return digits;
}

Prob::Prob(Ratio value) : value_(std::move(value)) {
  if (value_ < Ratio(0) || value_ > Ratio(1))
    throw DomainRange("probability outside [0,1]: " + value_.to_string());
}

BigCount binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return BigCount(0);
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

BigCount multinomial(unsigned long n, const std::vector<unsigned long>& parts) {
  unsigned long sum = std::accumulate(parts.begin(), parts.end(), 0ul);
  if (sum != n) throw PartsMismatch("multinomial: parts do not sum to n");
  BigCount r(1);
  unsigned long used = 0;
  for (unsigned long part : parts) {
    used += part;
    BigCount c;
    mpz_bin_uiui(c.get_mpz_t(), used, part);
    r *= c;
  }
  return r;
}

double central_binomial_asymptotic(unsigned long n) {
  if (n < 1) throw DomainRange("central_binomial_asymptotic: n >= 1 required");
  double log_value = n * std::log(4.0) - 0.5 * std::log(M_PI * n);
  return std::exp(log_value);
}

double log_factorial(unsigned long n) {
  static std::vector<double> cache{0.0};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n)
    cache.push_back(cache.back() + std::log(static_cast<double>(cache.size())));
  return cache[n];
}

}  // namespace walklab
