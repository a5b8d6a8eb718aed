#pragma once

#include <optional>
#include <string>

#include "walklab/laws.hpp"
#include "walklab/numerics.hpp"

namespace walklab {

// Exact-mode cap for the O(n^2) inner sum of u3d.
inline constexpr unsigned long kU3dExactCap = 2000;

struct Bracket {
  double lo;
  double hi;
  bool contains(double v) const { return lo <= v && v <= hi; }
  double width() const { return hi - lo; }
};

enum class Classification { kTransient, kPersistent };

// Classification plus the series evidence behind it. u_sum is exactly one
// of: an exact rational, divergent, or a certified bracket.
struct RecurrenceReport {
  int dimension;
  std::optional<Prob> p;  // 1D only
  Classification classification;

  std::optional<Ratio> u_sum_exact;
  bool u_sum_divergent = false;
  std::optional<Bracket> u_sum_bracket;

  std::optional<Ratio> p_return_exact;
  std::optional<Bracket> p_return_bracket;

  // 2D divergence evidence: partial sum and the fitted slope of partial
  // sums against ln N (expected ~ 1/pi)
  std::optional<double> partial_sum;
  std::optional<double> log_slope;

  std::string to_json(int precision) const;
};

// Sum of the return-probability series: 1/|p - q| exactly, divergent at
// p = 1/2 (the report carries the divergent marker).
struct SeriesSum {
  bool divergent;
  Ratio value;  // meaningful only when !divergent
};
SeriesSum series_sum_u(const WalkParams& w);

// P_0 = 1 - |p - q|, the probability of ever returning to the origin.
Ratio prob_return_origin(const WalkParams& w);

// Transient/persistent classification; dimensions 2 and 3 are
// symmetric-only and take no walk parameters.
RecurrenceReport classify(int dimension, const WalkParams& w = WalkParams::fair());

// 2D loop probability: C(2n,n)^2 / 4^(2n) exactly.
Ratio u2d(unsigned long n);

// 3D loop probability, exact double multinomial sum over j + k <= n.
// Throws TooLarge past kU3dExactCap; u3d_float covers larger n.
Ratio u3d(unsigned long n);
double u3d_float(unsigned long n);

// Asymptotic upper-bound term c * n^(-3/2), c = 3*sqrt(3)/(2*pi*sqrt(pi)).
double u3d_bound(unsigned long n);
double u3d_bound_constant();

// Certified partial-sum/tail bracket for the d = 2 or d = 3 series.
// d = 3: [S_N, S_N + 2c/sqrt(N)] for u and the induced bracket for P_0.
// d = 2: divergence evidence (partial sum, slope vs ln N) and the
// hardcoded persistent classification.
RecurrenceReport recurrence_bracket(int dimension, unsigned long terms);

// Partial sums of u3d_float, serial reference and parallel kernel.
double u3d_partial_sum_serial(unsigned long terms);
double u3d_partial_sum(unsigned long terms);

}  // namespace walklab
