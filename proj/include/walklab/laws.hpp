#pragma once

#include <string>

#include "walklab/numerics.hpp"
#include "walklab/table.hpp"

namespace walklab {

// Step distribution of the walk. q is always derived as 1 - p so the
// invariant p + q = 1 holds exactly.
struct WalkParams {
  Prob p;

  static WalkParams fair() { return WalkParams{Prob(Ratio(1, 2))}; }
  Ratio q() const { return p.complement(); }
  bool is_fair() const { return p.value() == Ratio(1, 2); }
};

// u_{2n} = C(2n,n) p^n q^n, the probability of being at the origin at 2n.
Ratio u2n(unsigned long n, const WalkParams& w);

// Probability the first return to the origin occurs at time 2n;
// equals u_{2n} / (2n - 1).
Ratio first_return_prob(unsigned long n, const WalkParams& w);

// P(S_1 != 0, ..., S_2n != 0) for the fair walk; equals u_{2n}.
Ratio no_return_prob(unsigned long n, const WalkParams& w);

// P(S_1 >= 0, ..., S_2n >= 0) for the fair walk; equals u_{2n}.
Ratio nonnegative_prob(unsigned long n, const WalkParams& w);

// Probability of first passage through -1 at time 2n-1 (fair walk):
// C(2n-2, n-1) / (n * 2^(2n-1)).
Ratio first_passage_minus1_prob(unsigned long n, const WalkParams& w);

// Lead-time pmf for the fair walk: rows k = 0..n with
// p_{2k,2n} = u_{2k} * u_{2n-2k}. Rows sum to exactly 1.
LawTable lead_time_pmf(unsigned long n, const WalkParams& w);

// Partial sum of the lead-time pmf over rows 0..alpha.
Ratio lead_time_cdf(unsigned long n, long alpha, const WalkParams& w);

// Arcsine approximation (2/pi) * arcsin(sqrt(alpha/n)).
double arcsine_cdf(double alpha_over_n);

// Quantile of the less-fortunate player's lead fraction:
// x = sin^2(pi * prob / 4), scaled to the horizon.
struct Duration {
  double days;
  double hours() const { return days * 24.0; }
  // decimal days when >= 1 day, else hours with one decimal
  std::string to_string() const;
};
Duration lead_fraction_quantile(double prob, double horizon_days);

// Probability of exactly r returns to zero within 2n steps (fair walk):
// 2^-(2n-r) * C(2n-r, n).
Ratio return_count_pmf(unsigned long r, unsigned long n, const WalkParams& w);

}  // namespace walklab
