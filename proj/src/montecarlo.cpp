#include "walklab/montecarlo.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "walklab/philox.hpp"
#include "walklab/reduce.hpp"

namespace walklab {

namespace {

// A draw d in [0, 2^64) means "up" iff d < floor(p * 2^64), computed
// exactly from the rational p. 128 bits wide so p = 1 (threshold 2^64)
// needs no special case.
unsigned __int128 up_threshold(const WalkParams& w) {
  BigInt thr = (w.p.value().num() << 64) / w.p.value().den();
  BigInt lo = thr & BigInt(0xFFFFFFFFFFFFFFFFUL);
  BigInt hi = thr >> 64;
  unsigned __int128 out = static_cast<unsigned __int128>(hi.get_ui());
  out <<= 64;
  out |= static_cast<unsigned __int128>(lo.get_ui());
  return out;
}

inline int draw_step(std::uint64_t seed, std::uint64_t trial, std::uint64_t step,
                     unsigned __int128 thr) {
  const std::uint64_t d = philox::draw64(seed, trial, step);
  return static_cast<unsigned __int128>(d) < thr ? 1 : -1;
}

// indicator estimate from an integer hit count (order-independent)
Estimate indicator_estimate(std::uint64_t hits, std::uint64_t trials) {
  const double total = static_cast<double>(trials);
  const double mean = static_cast<double>(hits) / total;
  const double var = mean * (1.0 - mean) * total / (total - 1.0);
  return Estimate{mean, std::sqrt(var / total), trials};
}

}  // namespace

std::string Estimate::to_json() const {
  nlohmann::json j;
  j["mean"] = mean;
  j["stderr"] = stderr_;
  j["ci95"] = {ci_lo(), ci_hi()};
  j["trials"] = trials;
  return j.dump();
}

std::string Estimate::to_csv_row() const {
  std::ostringstream os;
  os << mean << "," << stderr_ << "," << ci_lo() << "," << ci_hi() << ","
     << trials;
  return os.str();
}

Estimate estimate_from_samples(const std::vector<double>& samples) {
  const std::uint64_t n = samples.size();
  if (n < 2) throw UsageError("estimate_from_samples: need at least 2 samples");
  const double sum = pairwise_sum(samples);
  const double mean = sum / static_cast<double>(n);
  std::vector<double> sq(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    const double d = samples[i] - mean;
    sq[i] = d * d;
  }
  const double var = pairwise_sum(sq) / static_cast<double>(n - 1);
  return Estimate{mean, std::sqrt(var / static_cast<double>(n)), n};
}

int step_of(const SimConfig& cfg, const WalkParams& w, std::uint64_t trial,
            std::uint64_t step) {
  return draw_step(cfg.seed, trial, step, up_threshold(w));
}

Path simulate_path(const SimConfig& cfg, const WalkParams& w,
                   std::uint64_t trial, int steps) {
  const auto thr = up_threshold(w);
  std::vector<int8_t> s(static_cast<size_t>(steps));
  for (int k = 0; k < steps; ++k)
    s[static_cast<size_t>(k)] = static_cast<int8_t>(
        draw_step(cfg.seed, trial, static_cast<std::uint64_t>(k + 1), thr));
  return Path::from_steps(std::move(s));
}

std::vector<Path> simulate_walk(const SimConfig& cfg, const WalkParams& w,
                                int steps) {
  if (steps < 1) throw UsageError("simulate_walk: steps >= 1 required");
  const auto thr = up_threshold(w);
  std::vector<Path> out(cfg.trials);
  const std::int64_t trials = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < trials; ++t) {
    std::vector<int8_t> s(static_cast<size_t>(steps));
    for (int k = 0; k < steps; ++k)
      s[static_cast<size_t>(k)] = static_cast<int8_t>(
          draw_step(cfg.seed, static_cast<std::uint64_t>(t),
                    static_cast<std::uint64_t>(k + 1), thr));
    out[static_cast<size_t>(t)] = Path::from_steps(std::move(s));
  }
  return out;
}

namespace {

struct RuinTrial {
  double won;
  double duration;
  bool capped;
};

RuinTrial run_ruin_trial(std::uint64_t seed, const RuinSpec& spec,
                         unsigned __int128 thr, std::uint64_t trial) {
  long position = spec.start;
  for (std::uint64_t step = 1; step <= kStepCap; ++step) {
    position += draw_step(seed, trial, step, thr);
    if (position == spec.A) return {1.0, static_cast<double>(step), false};
    if (position == -spec.B) return {0.0, static_cast<double>(step), false};
  }
  return {0.0, static_cast<double>(kStepCap), true};
}

template <bool Parallel>
RuinEstimate estimate_ruin_impl(const SimConfig& cfg, const RuinSpec& spec) {
  spec.validate();
  if (cfg.trials < 2) throw UsageError("estimate_ruin: trials >= 2 required");
  const auto thr = up_threshold(WalkParams{spec.p});
  std::vector<double> wins(cfg.trials), durations(cfg.trials);
  std::vector<std::uint8_t> capped(cfg.trials, 0);
  const std::int64_t trials = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for schedule(static) if (Parallel)
  for (std::int64_t t = 0; t < trials; ++t) {
    RuinTrial r = run_ruin_trial(cfg.seed, spec, thr, static_cast<std::uint64_t>(t));
    wins[static_cast<size_t>(t)] = r.won;
    durations[static_cast<size_t>(t)] = r.duration;
    capped[static_cast<size_t>(t)] = r.capped ? 1 : 0;
  }
  std::uint64_t n_capped = 0;
  for (std::uint8_t c : capped) n_capped += c;
  return RuinEstimate{estimate_from_samples(wins),
                      estimate_from_samples(durations), n_capped};
}

}  // namespace

RuinEstimate estimate_ruin(const SimConfig& cfg, const RuinSpec& spec) {
  return estimate_ruin_impl<true>(cfg, spec);
}

RuinEstimate estimate_ruin_serial(const SimConfig& cfg, const RuinSpec& spec) {
  return estimate_ruin_impl<false>(cfg, spec);
}

std::vector<Estimate> estimate_lead_time(const SimConfig& cfg, unsigned long n) {
  if (cfg.trials < 2) throw UsageError("estimate_lead_time: trials >= 2 required");
  const auto thr = up_threshold(WalkParams::fair());
  const int steps = static_cast<int>(2 * n);
  std::vector<std::uint32_t> lead(cfg.trials);
  const std::int64_t trials = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < trials; ++t) {
    long s_prev = 0, s = 0;
    int positive_sides = 0;
    for (int k = 1; k <= steps; ++k) {
      s += draw_step(cfg.seed, static_cast<std::uint64_t>(t),
                     static_cast<std::uint64_t>(k), thr);
      if (s_prev > 0 || s > 0) ++positive_sides;
      s_prev = s;
    }
    lead[static_cast<size_t>(t)] = static_cast<std::uint32_t>(positive_sides / 2);
  }
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint32_t k : lead) counts[k]++;
  std::vector<Estimate> rows;
  rows.reserve(n + 1);
  for (unsigned long k = 0; k <= n; ++k)
    rows.push_back(indicator_estimate(counts[k], cfg.trials));
  return rows;
}

Estimate estimate_return_counts(const SimConfig& cfg, unsigned long n,
                                unsigned long r) {
  if (cfg.trials < 2) throw UsageError("estimate_return_counts: trials >= 2 required");
  const auto thr = up_threshold(WalkParams::fair());
  const int steps = static_cast<int>(2 * n);
  std::uint64_t hits = 0;
  const std::int64_t trials = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for schedule(static) reduction(+ : hits)
  for (std::int64_t t = 0; t < trials; ++t) {
    long s = 0;
    unsigned long returns = 0;
    for (int k = 1; k <= steps; ++k) {
      s += draw_step(cfg.seed, static_cast<std::uint64_t>(t),
                     static_cast<std::uint64_t>(k), thr);
      if (s == 0) ++returns;
    }
    if (returns == r) ++hits;
  }
  return indicator_estimate(hits, cfg.trials);
}

Estimate estimate_first_return(const SimConfig& cfg, unsigned long n,
                               const WalkParams& w) {
  if (n < 1) throw UsageError("estimate_first_return: n >= 1 required");
  if (cfg.trials < 2) throw UsageError("estimate_first_return: trials >= 2 required");
  const auto thr = up_threshold(w);
  const int steps = static_cast<int>(2 * n);
  std::uint64_t hits = 0;
  const std::int64_t trials = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for schedule(static) reduction(+ : hits)
  for (std::int64_t t = 0; t < trials; ++t) {
    long s = 0;
    bool touched_early = false;
    for (int k = 1; k <= steps; ++k) {
      s += draw_step(cfg.seed, static_cast<std::uint64_t>(t),
                     static_cast<std::uint64_t>(k), thr);
      if (s == 0 && k < steps) {
        touched_early = true;
        break;
      }
    }
    if (!touched_early && s == 0) ++hits;
  }
  return indicator_estimate(hits, cfg.trials);
}

}  // namespace walklab
