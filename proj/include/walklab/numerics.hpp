#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "walklab/errors.hpp"

namespace walklab {

// Arbitrary-precision non-negative counter. Arithmetic grows precision as
// needed, so path counts and binomials never overflow.
using BigCount = mpz_class;
using BigInt = mpz_class;

// Exact rational in lowest terms with positive denominator. All probability
// laws are computed with this carrier; floating output happens once, at the
// rendering edge.
class Ratio {
 public:
  Ratio() : q_(0) {}
  Ratio(long v) : q_(v) {}  // NOLINT: implicit by design, mirrors integer literals
  Ratio(const BigInt& v) : q_(v) {}
  Ratio(const BigInt& num, const BigInt& den);
  Ratio(long num, long den) : Ratio(BigInt(num), BigInt(den)) {}

  // Parses "a/b" or a plain integer "a". Decimal forms are rejected.
  static Ratio parse(const std::string& text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }

  Ratio operator+(const Ratio& o) const { return Ratio(q_ + o.q_); }
  Ratio operator-(const Ratio& o) const { return Ratio(q_ - o.q_); }
  Ratio operator*(const Ratio& o) const { return Ratio(q_ * o.q_); }
  Ratio operator/(const Ratio& o) const;
  Ratio operator-() const { return Ratio(mpq_class(-q_)); }

  Ratio& operator+=(const Ratio& o) { q_ += o.q_; return *this; }
  Ratio& operator-=(const Ratio& o) { q_ -= o.q_; return *this; }
  Ratio& operator*=(const Ratio& o) { q_ *= o.q_; return *this; }

  bool operator==(const Ratio& o) const { return q_ == o.q_; }
  bool operator!=(const Ratio& o) const { return q_ != o.q_; }
  bool operator<(const Ratio& o) const { return q_ < o.q_; }
  bool operator<=(const Ratio& o) const { return q_ <= o.q_; }
  bool operator>(const Ratio& o) const { return q_ > o.q_; }
  bool operator>=(const Ratio& o) const { return q_ >= o.q_; }

  Ratio abs() const { return Ratio(mpq_class(::abs(q_))); }
  Ratio pow(unsigned long e) const;
  Ratio inverse() const;

  // Always renders as "num/den", e.g. "184756/1048576" or "15/1".
  std::string to_string() const;

  // Fixed-point decimal at `precision` places, rounded half-even.
  std::string to_decimal(int precision) const;

  double to_double() const { return q_.get_d(); }

 private:
  explicit Ratio(mpq_class q) : q_(std::move(q)) { /* already canonical */ }
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Ratio& r) {
  return os << r.to_string();
}

// A probability: a Ratio constrained to [0, 1].
class Prob {
 public:
  Prob() : value_(0) {}
  explicit Prob(Ratio value);
  static Prob parse(const std::string& text) { return Prob(Ratio::parse(text)); }

  const Ratio& value() const { return value_; }
  Ratio complement() const { return Ratio(1) - value_; }
  double to_double() const { return value_.to_double(); }

  bool operator==(const Prob& o) const { return value_ == o.value_; }

 private:
  Ratio value_;
};

// C(n, k); 0 when k < 0 or k > n. Total function.
BigCount binomial(unsigned long n, long k);

// n! / prod(parts[i]!); requires sum(parts) = n.
BigCount multinomial(unsigned long n, const std::vector<unsigned long>& parts);

// Stirling form 4^n / sqrt(pi*n), evaluated in log-space.
double central_binomial_asymptotic(unsigned long n);

// ln(n!) with an internally grown cache; shared by the float-mode kernels.
double log_factorial(unsigned long n);

}  // namespace walklab
