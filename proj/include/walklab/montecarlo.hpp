#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "walklab/laws.hpp"
#include "walklab/paths.hpp"
#include "walklab/ruin.hpp"

namespace walklab {

// Per-trial step cap for absorption runs. Capped trials are counted and
// surfaced, never imputed.
inline constexpr std::uint64_t kStepCap = 10'000'000;

struct SimConfig {
  std::uint64_t seed;
  std::uint64_t trials;
  std::uint32_t streams = 1;  // layout hint; results never depend on it
};

struct Estimate {
  double mean;
  double stderr_;
  std::uint64_t trials;
  double ci_lo() const { return mean - 1.96 * stderr_; }
  double ci_hi() const { return mean + 1.96 * stderr_; }
  // z-score of the estimate against an exact reference value
  double z_score(double exact) const {
    return stderr_ > 0 ? (mean - exact) / stderr_ : 0.0;
  }

  std::string to_json() const;
  std::string to_csv_row() const;  // mean,stderr,lo,hi,trials
  static const char* csv_header() { return "mean,stderr,lo,hi,trials"; }
};

// Mean and standard error of a sample, fixed-order pairwise reduction.
Estimate estimate_from_samples(const std::vector<double>& samples);

// Step k (1-based) of trial t: +1 with probability p, decided by comparing
// a philox draw against floor(p * 2^64) computed exactly from the rational.
int step_of(const SimConfig& cfg, const WalkParams& w, std::uint64_t trial,
            std::uint64_t step);

// One full trial path of fixed length.
Path simulate_path(const SimConfig& cfg, const WalkParams& w,
                   std::uint64_t trial, int steps);

// All `trials` paths, trial-parallel; output order is by trial index.
std::vector<Path> simulate_walk(const SimConfig& cfg, const WalkParams& w,
                                int steps);

struct RuinEstimate {
  Estimate prob_win;
  Estimate duration;
  std::uint64_t capped_trials;  // trials that hit the step cap
};

// Stopped walks to absorption; win fraction and mean duration.
RuinEstimate estimate_ruin(const SimConfig& cfg, const RuinSpec& spec);
RuinEstimate estimate_ruin_serial(const SimConfig& cfg, const RuinSpec& spec);

// Empirical lead-time pmf over k = 0..n (side-occupancy rule: a time unit
// counts as positive if either endpoint of that side is positive).
std::vector<Estimate> estimate_lead_time(const SimConfig& cfg, unsigned long n);

// Empirical probability of exactly r returns to zero within 2n steps.
Estimate estimate_return_counts(const SimConfig& cfg, unsigned long n,
                                unsigned long r);

// Empirical probability of a first return to the origin at time 2n.
Estimate estimate_first_return(const SimConfig& cfg, unsigned long n,
                               const WalkParams& w);

}  // namespace walklab
