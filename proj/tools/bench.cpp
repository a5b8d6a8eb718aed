// Compares the OpenMP kernels against their serial reference
// implementations: path enumeration, ruin simulation, 3D return-series
// partial sums. Checks agreement and reports timings.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "walklab/montecarlo.hpp"
#include "walklab/paths.hpp"
#include "walklab/recurrence.hpp"

namespace {

double time_it(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void report(const std::string& name, double serial_s, double parallel_s, bool match) {
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
              name.c_str(), serial_s, parallel_s,
              parallel_s > 0 ? serial_s / parallel_s : 0.0,
              match ? "results match" : "RESULT MISMATCH");
}

}  // namespace

int main() {
  using namespace walklab;

  {
    auto positive_end = [](const Path& p) { return p.sums.back() > 0; };
    BigCount serial_count, parallel_count;
    double ts = time_it([&] { serial_count = count_paths_if_serial(24, positive_end); });
    double tp = time_it([&] { parallel_count = count_paths_if(24, positive_end); });
    report("enumerate n=24", ts, tp, serial_count == parallel_count);
  }

  {
    SimConfig cfg{12345, 200000, 1};
    RuinSpec spec{5, 3, Prob(Ratio(1, 2)), 0};
    RuinEstimate serial_est, parallel_est;
    double ts = time_it([&] { serial_est = estimate_ruin_serial(cfg, spec); });
    double tp = time_it([&] { parallel_est = estimate_ruin(cfg, spec); });
    bool match = serial_est.prob_win.mean == parallel_est.prob_win.mean &&
                 serial_est.duration.mean == parallel_est.duration.mean;
    report("ruin MC 200k trials", ts, tp, match);
  }

  {
    double serial_sum = 0, parallel_sum = 0;
    double ts = time_it([&] { serial_sum = u3d_partial_sum_serial(1500); });
    double tp = time_it([&] { parallel_sum = u3d_partial_sum(1500); });
    report("3D series 1500 terms", ts, tp, serial_sum == parallel_sum);
  }

  return 0;
}
