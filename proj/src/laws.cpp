#include "walklab/laws.hpp"

#include <cmath>
#include <sstream>

namespace walklab {

namespace {

void require_fair(const WalkParams& w, const char* law) {
  if (!w.is_fair())
    throw BiasedUnsupported(std::string(law) +
                            ": derived for the fair walk only (p = 1/2); got p = " +
                            w.p.value().to_string());
}

// u_0, u_2, ..., u_{2n} via the multiplicative recurrence
// u_{2k} = u_{2k-2} * (2k-1)/(2k) * 4pq, O(n) for a whole table.
std::vector<Ratio> u_sequence(unsigned long n, const WalkParams& w) {
  std::vector<Ratio> u;
  u.reserve(n + 1);
  u.push_back(Ratio(1));
  const Ratio four_pq = Ratio(4) * w.p.value() * w.q();
  for (unsigned long k = 1; k <= n; ++k)
    u.push_back(u.back() * Ratio(2 * k - 1, 2 * k) * four_pq);
  return u;
}

}  // namespace

Ratio u2n(unsigned long n, const WalkParams& w) {
  Ratio pq_pow = (w.p.value() * w.q()).pow(n);
  return Ratio(BigInt(binomial(2 * n, static_cast<long>(n)))) * pq_pow;
}

Ratio first_return_prob(unsigned long n, const WalkParams& w) {
  if (n < 1) throw UsageError("first_return_prob: n >= 1 required");
  // (2/n) C(2n-2, n-1) p^n q^n
  Ratio pq_pow = (w.p.value() * w.q()).pow(n);
  Ratio count(BigInt(binomial(2 * n - 2, static_cast<long>(n - 1))) * 2,
              BigInt(n));
  return count * pq_pow;
}

Ratio no_return_prob(unsigned long n, const WalkParams& w) {
  if (n < 1) throw UsageError("no_return_prob: n >= 1 required");
  require_fair(w, "no_return_prob");
  return u2n(n, w);
}

Ratio nonnegative_prob(unsigned long n, const WalkParams& w) {
  if (n < 1) throw UsageError("nonnegative_prob: n >= 1 required");
  require_fair(w, "nonnegative_prob");
  return u2n(n, w);
}

Ratio first_passage_minus1_prob(unsigned long n, const WalkParams& w) {
  if (n < 1) throw UsageError("first_passage_minus1_prob: n >= 1 required");
  require_fair(w, "first_passage_minus1_prob");
  BigInt den(n);
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * n - 1);
  return Ratio(BigInt(binomial(2 * n - 2, static_cast<long>(n - 1))),
               den * two_pow);
}

LawTable lead_time_pmf(unsigned long n, const WalkParams& w) {
  if (n < 1) throw UsageError("lead_time_pmf: n >= 1 required");
  require_fair(w, "lead_time_pmf");
  const std::vector<Ratio> u = u_sequence(n, w);
  LawTable t;
  std::ostringstream label;
  label << "lead-time pmf p_{2k," << 2 * n << "}";
  t.label = label.str();
  for (unsigned long k = 0; k <= n; ++k)
    t.rows.push_back({static_cast<long>(2 * k), u[k] * u[n - k]});
  return t;
}

Ratio lead_time_cdf(unsigned long n, long alpha, const WalkParams& w) {
  if (alpha < 0 || static_cast<unsigned long>(alpha) > n)
    throw IndexRange("lead_time_cdf: alpha outside [0, n]");
  LawTable pmf = lead_time_pmf(n, w);
  Ratio sum(0);
  for (long k = 0; k <= alpha; ++k) sum += pmf.rows[static_cast<size_t>(k)].exact;
  return sum;
}

double arcsine_cdf(double alpha_over_n) {
  if (alpha_over_n < 0.0 || alpha_over_n > 1.0)
    throw DomainRange("arcsine_cdf: argument outside [0,1]");
  return 2.0 / M_PI * std::asin(std::sqrt(alpha_over_n));
}

std::string Duration::to_string() const {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  if (days >= 1.0)
    os << days << " d";
  else
    os << hours() << " h";
  return os.str();
}

Duration lead_fraction_quantile(double prob, double horizon_days) {
  if (prob <= 0.0 || prob >= 1.0)
    throw DomainRange("lead_fraction_quantile: prob must be in (0,1)");
  if (horizon_days <= 0.0)
    throw DomainRange("lead_fraction_quantile: horizon must be positive");
  double s = std::sin(M_PI * prob / 4.0);
  return Duration{s * s * horizon_days};
}

Ratio return_count_pmf(unsigned long r, unsigned long n, const WalkParams& w) {
  if (n < 1) throw UsageError("return_count_pmf: n >= 1 required");
  require_fair(w, "return_count_pmf");
  if (r > n) throw IndexRange("return_count_pmf: r > n");
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * n - r);
  return Ratio(BigInt(binomial(2 * n - r, static_cast<long>(n))), two_pow);
}

}  // namespace walklab
