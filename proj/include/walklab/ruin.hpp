#pragma once

#include "walklab/laws.hpp"
#include "walklab/numerics.hpp"

namespace walklab {

// Two absorbing barriers: +A (win) and -B (ruin), up-step probability p,
// optional start offset k in [-B, A].
struct RuinSpec {
  long A;
  long B;
  Prob p;
  long start = 0;

  void validate() const;
};

struct RuinResult {
  Ratio prob_win;           // absorb at +A
  Ratio prob_ruin;          // absorb at -B
  Ratio expected_duration;  // steps

  std::string to_json(int precision) const;
};

// Fair walk: prob_win = (B+k)/(A+B), E[tau] = (A-k)(B+k).
RuinResult ruin_unbiased(const RuinSpec& spec);

// Biased walk from the origin, exact rationals. Dispatches to
// ruin_unbiased on exact p = 1/2; rejects p in {0,1} and start != 0.
RuinResult ruin_biased(const RuinSpec& spec);

// Symmetric barriers A = B as a function of rho = q/p:
// prob_win = 1/(1+rho^A), E[tau] = A (1+rho)/(1-rho) (1-rho^A)/(1+rho^A).
RuinResult ruin_symmetric(long A, const Ratio& rho);

// Deterministic drift: p = 1 absorbs at A in A steps, p = 0 at -B in B steps.
RuinResult ruin_degenerate(const RuinSpec& spec);

// Floating evaluation for large A+B where rho^(A+B) is impractically big.
// Opt-in and approximate; works in log-space.
struct RuinResultFloat {
  double prob_win;
  double prob_ruin;
  double expected_duration;
};
RuinResultFloat ruin_biased_float(const RuinSpec& spec);

// P(reach N before 0 | S_0 = 1) = (1 - q/p) / (1 - (q/p)^N), biased walk.
Ratio escape_probability(const Prob& p, long N);
// Fair-walk special case: the limit is 1/N.
Ratio escape_probability_fair(long N);
// N -> infinity: 1 - q/p if p > q, else 0.
Ratio escape_probability_limit(const Prob& p);

// P(reach 0 before the far barrier | S_0 = start), start in {+1, -1}:
// min(1, q/p) from +1, min(1, p/q) from -1.
Ratio hit_zero_probability(const Prob& p, int start);

}  // namespace walklab
