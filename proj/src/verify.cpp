#include "walklab/verify.hpp"

#include <cmath>
#include <sstream>

#include "walklab/laws.hpp"
#include "walklab/oracles.hpp"
#include "walklab/paths.hpp"
#include "walklab/recurrence.hpp"
#include "walklab/ruin.hpp"

namespace walklab {

namespace {

class Battery {
 public:
  Battery(std::string only, bool inject_fault)
      : only_(std::move(only)), inject_fault_(inject_fault) {}

  template <typename L, typename R>
  void check(const std::string& group, const std::string& name, const L& got,
             const R& want) {
    if (!only_.empty() && group != only_) return;
    std::ostringstream detail;
    bool pass = (got == want);
    if (inject_fault_ && group == "ballot" && !faulted_) {
      pass = !pass;
      faulted_ = true;
      detail << "injected fault (test hook); ";
    }
    if (!pass) detail << "got " << got << ", want " << want;
    results_.push_back({group, name, pass, detail.str()});
  }

  void check_bool(const std::string& group, const std::string& name, bool pass,
                  const std::string& detail = "") {
    if (!only_.empty() && group != only_) return;
    results_.push_back({group, name, pass, pass ? "" : detail});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string only_;
  bool inject_fault_;
  bool faulted_ = false;
  std::vector<CheckResult> results_;
};

void verify_ballot(Battery& b) {
  // path counts and ballot counts against exhaustive enumeration
  for (long x = 1; x <= 10; ++x) {
    for (long y = -x; y <= x; ++y) {
      b.check("ballot", "N_{" + std::to_string(x) + "," + std::to_string(y) + "}",
              count_paths_to(x, y),
              BigCount(oracles::count_endpoint(static_cast<int>(x), y)));
      if (y > 0 && (x + y) % 2 == 0)
        b.check("ballot",
                "ballot(" + std::to_string(x) + "," + std::to_string(y) + ")",
                count_always_positive(x, y),
                BigCount(oracles::count_always_positive_enum(static_cast<int>(x), y)));
    }
  }
  // reversal duality: paths with S_i < S_n for i < n <-> always-positive paths
  for (long x = 2; x <= 10; ++x) {
    for (long y = 1; y <= x; ++y) {
      if ((x + y) % 2 != 0) continue;
      std::uint64_t below_max = 0;
      for (const Path& p : enumerate_paths(static_cast<int>(x), nullptr)) {
        if (p.endpoint() != y) continue;
        bool ok = true;
        for (int i = 0; i < p.length(); ++i)
          if (p.sums[static_cast<size_t>(i)] >= y) { ok = false; break; }
        if (ok) ++below_max;
      }
      b.check("ballot", "reversal(" + std::to_string(x) + "," + std::to_string(y) + ")",
              BigCount(below_max), count_always_positive(x, y));
    }
  }
}

void verify_reflection(Battery& b) {
  for (long ay = 1; ay <= 3; ++ay) {
    for (long by = 1; by <= 3; ++by) {
      for (long m = 1; m <= 8; ++m) {
        if ((m + by - ay) % 2 != 0) continue;
        auto [touching, mirrored] =
            count_touching_reflection({0, ay}, {m, by});
        b.check("reflection",
                "pair(" + std::to_string(ay) + "->" + std::to_string(by) + "," +
                    std::to_string(m) + ")",
                touching, mirrored);
        b.check("reflection",
                "enum(" + std::to_string(ay) + "->" + std::to_string(by) + "," +
                    std::to_string(m) + ")",
                touching,
                BigCount(oracles::count_touching_enum(static_cast<int>(m), ay, by)));
      }
    }
  }
}

void verify_loops(Battery& b) {
  for (long n = 1; n <= 10; ++n) {
    b.check("loops", "catalan(" + std::to_string(n) + ")",
            count_loops(n, LoopMode::kNonnegative), oracles::catalan_recurrence(
                static_cast<unsigned long>(n)));
    b.check("loops", "shift(" + std::to_string(n) + ")",
            count_loops(n, LoopMode::kNonnegative),
            count_loops(n + 1, LoopMode::kStrictlyPositive));
  }
  for (int n = 1; n <= 6; ++n) {
    b.check("loops", "enum-nonneg(" + std::to_string(n) + ")",
            count_loops(n, LoopMode::kNonnegative),
            BigCount(oracles::count_loops_enum(2 * n, false)));
    b.check("loops", "enum-pos(" + std::to_string(n) + ")",
            count_loops(n, LoopMode::kStrictlyPositive),
            BigCount(oracles::count_loops_enum(2 * n, true)));
  }
}

void verify_laws(Battery& b) {
  const WalkParams fair = WalkParams::fair();
  for (unsigned long n = 1; n <= 12; ++n) {
    b.check("laws", "three-way-no-return(" + std::to_string(n) + ")",
            no_return_prob(n, fair), u2n(n, fair));
    b.check("laws", "three-way-nonneg(" + std::to_string(n) + ")",
            nonnegative_prob(n, fair), u2n(n, fair));
  }
  for (unsigned long n = 1; n <= 7; ++n) {
    const int len = static_cast<int>(2 * n);
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * n);
    b.check("laws", "u2n-enum(" + std::to_string(n) + ")", u2n(n, fair),
            Ratio(BigInt(oracles::count_endpoint(len, 0)), two_pow));
    b.check("laws", "no-return-enum(" + std::to_string(n) + ")",
            no_return_prob(n, fair),
            Ratio(BigInt(oracles::count_nonzero_enum(len)), two_pow));
    b.check("laws", "nonneg-enum(" + std::to_string(n) + ")",
            nonnegative_prob(n, fair),
            Ratio(BigInt(oracles::count_nonnegative_enum(len)), two_pow));
    b.check("laws", "first-return-enum(" + std::to_string(n) + ")",
            first_return_prob(n, fair),
            Ratio(BigInt(oracles::count_first_return_enum(len)), two_pow));
    BigInt two_pow_odd;
    mpz_ui_pow_ui(two_pow_odd.get_mpz_t(), 2, 2 * n - 1);
    b.check("laws", "first-passage-enum(" + std::to_string(n) + ")",
            first_passage_minus1_prob(n, fair),
            Ratio(BigInt(oracles::count_first_passage_minus1_enum(
                      static_cast<int>(2 * n - 1))),
                  two_pow_odd));
    for (unsigned long r = 0; r <= n; ++r)
      b.check("laws", "return-count-enum(" + std::to_string(r) + "," +
                          std::to_string(n) + ")",
              return_count_pmf(r, n, fair),
              Ratio(BigInt(oracles::count_returns_enum(len, r)), two_pow));
  }
  // first-return identities at three step distributions
  for (const char* ps : {"1/2", "1/3", "2/5"}) {
    WalkParams w{Prob::parse(ps)};
    for (unsigned long n = 1; n <= 12; ++n) {
      Ratio four_pq = Ratio(4) * w.p.value() * w.q();
      b.check("laws", std::string("first-return-id(") + ps + "," + std::to_string(n) + ")",
              first_return_prob(n, w), four_pq * u2n(n - 1, w) - u2n(n, w));
      b.check("laws", std::string("first-return-ratio(") + ps + "," + std::to_string(n) + ")",
              first_return_prob(n, w), u2n(n, w) / Ratio(2 * n - 1));
    }
  }
  // fair recurrence identity u_{2n-2} = (2n/(2n-1)) u_{2n}
  for (unsigned long n = 1; n <= 20; ++n)
    b.check("laws", "a3-recurrence(" + std::to_string(n) + ")", u2n(n - 1, fair),
            Ratio(2 * n, 2 * n - 1) * u2n(n, fair));
}

void verify_lead(Battery& b) {
  const WalkParams fair = WalkParams::fair();
  for (unsigned long n = 1; n <= 12; ++n) {
    LawTable pmf = lead_time_pmf(n, fair);
    b.check("lead", "pmf-sum(" + std::to_string(n) + ")", pmf.sum(), Ratio(1));
    bool symmetric = true;
    for (size_t k = 0; k < pmf.rows.size(); ++k)
      if (pmf.rows[k].exact != pmf.rows[pmf.rows.size() - 1 - k].exact)
        symmetric = false;
    b.check_bool("lead", "pmf-symmetric(" + std::to_string(n) + ")", symmetric,
                 "pmf not symmetric");
    // product form of the lead-time pmf equals the recurrence route
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * n);
    for (unsigned long k = 0; k <= n; ++k) {
      Ratio alt(BigInt(binomial(n, static_cast<long>(k))) *
                    BigInt(binomial(n, static_cast<long>(k))) *
                    BigInt(binomial(2 * n, static_cast<long>(n))),
                two_pow * BigInt(binomial(2 * n, static_cast<long>(2 * k))));
      b.check("lead", "pmf-product(" + std::to_string(k) + "," + std::to_string(n) + ")",
              pmf.rows[k].exact, alt);
    }
  }
  // enumeration oracle with the side-occupancy rule
  for (int n = 1; n <= 6; ++n) {
    LawTable pmf = lead_time_pmf(static_cast<unsigned long>(n), fair);
    auto counts = oracles::lead_time_counts_enum(n);
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * n));
    for (size_t k = 0; k < counts.size(); ++k)
      b.check("lead", "occupancy(" + std::to_string(k) + "," + std::to_string(n) + ")",
              pmf.rows[k].exact, Ratio(BigInt(counts[k]), two_pow));
  }
  // arcsine convergence: sup distance shrinks from 2n=20 to 2n=100
  auto sup_distance = [&](unsigned long n) {
    double worst = 0.0;
    for (unsigned long a = 1; a < n; ++a) {
      double exact = lead_time_cdf(n, static_cast<long>(a), fair).to_double();
      double approx = arcsine_cdf(static_cast<double>(a) / static_cast<double>(n));
      worst = std::max(worst, std::abs(exact - approx));
    }
    return worst;
  };
  b.check_bool("lead", "arcsine-convergence", sup_distance(50) < sup_distance(10),
               "sup distance did not shrink");
}

void verify_ruin(Battery& b) {
  for (const char* ps : {"1/3", "1/2", "3/5"}) {
    Prob p = Prob::parse(ps);
    for (long A = 1; A <= 6; ++A) {
      for (long B = 1; B <= 6; ++B) {
        if (A + B > 8) continue;
        RuinSpec spec{A, B, p, 0};
        RuinResult closed =
            p.value() == Ratio(1, 2) ? ruin_unbiased(spec) : ruin_biased(spec);
        RuinResult solved = oracles::ruin_first_step_solver(spec);
        std::string tag = "(" + std::to_string(A) + "," + std::to_string(B) + "," + ps + ")";
        b.check("ruin", "win" + tag, closed.prob_win, solved.prob_win);
        b.check("ruin", "duration" + tag, closed.expected_duration,
                solved.expected_duration);
        b.check("ruin", "complement" + tag, closed.prob_win + closed.prob_ruin,
                Ratio(1));
        if (p.value() != Ratio(1, 2)) {
          RuinSpec swapped{B, A, Prob(p.complement()), 0};
          b.check("ruin", "swap" + tag, ruin_biased(spec).prob_win,
                  ruin_biased(swapped).prob_ruin);
          b.check("ruin", "swap-duration" + tag,
                  ruin_biased(spec).expected_duration,
                  ruin_biased(swapped).expected_duration);
        }
      }
    }
  }
}

void verify_recurrence(Battery& b) {
  for (const char* ps : {"1/3", "2/5", "3/4"}) {
    WalkParams w{Prob::parse(ps)};
    SeriesSum s = series_sum_u(w);
    b.check_bool("recurrence", std::string("usum-finite(") + ps + ")", !s.divergent,
                 "series unexpectedly divergent");
    b.check("recurrence", std::string("usum-identity(") + ps + ")", s.value,
            (Ratio(1) - prob_return_origin(w)).inverse());
  }
  for (unsigned long n = 0; n <= 50; ++n) {
    b.check("recurrence", "u2d-square(" + std::to_string(n) + ")", u2d(n),
            u2n(n, WalkParams::fair()) * u2n(n, WalkParams::fair()));
    BigCount vandermonde(0);
    for (unsigned long k = 0; k <= n; ++k) {
      BigCount c = binomial(n, static_cast<long>(k));
      vandermonde += c * c;
    }
    b.check("recurrence", "vandermonde(" + std::to_string(n) + ")", vandermonde,
            binomial(2 * n, static_cast<long>(n)));
  }
  b.check("recurrence", "u2d-enum(1)", u2d(1),
          Ratio(BigInt(oracles::count_loops_2d_enum(2)), BigInt(16)));
  b.check("recurrence", "u2d-enum(2)", u2d(2),
          Ratio(BigInt(oracles::count_loops_2d_enum(4)), BigInt(256)));
  b.check("recurrence", "u3d-enum(1)", u3d(1),
          Ratio(BigInt(oracles::count_loops_3d_enum(2)), BigInt(36)));
  b.check("recurrence", "u3d-enum(2)", u3d(2),
          Ratio(BigInt(oracles::count_loops_3d_enum(4)), BigInt(1296)));
  // bound holds on exact values over a spot grid
  for (unsigned long n : {10ul, 20ul, 50ul, 100ul, 200ul}) {
    b.check_bool("recurrence", "u3d-bound(" + std::to_string(n) + ")",
                 u3d(n).to_double() < u3d_bound(n), "bound violated");
  }
  // partial sums of u at p = 1/3 approach 3
  WalkParams third{Prob::parse("1/3")};
  Ratio partial(0);
  for (unsigned long n = 0; n <= 200; ++n) partial += u2n(n, third);
  b.check_bool("recurrence", "partial-sum-1/3",
               (Ratio(3) - partial) < Ratio(1, 1000) && partial < Ratio(3),
               "partial sum not within 1e-3 of 3");
}

}  // namespace

std::vector<CheckResult> run_verification(const std::string& only, bool inject_fault) {
  Battery b(only, inject_fault);
  verify_ballot(b);
  verify_reflection(b);
  verify_loops(b);
  verify_laws(b);
  verify_lead(b);
  verify_ruin(b);
  verify_recurrence(b);
  return b.take();
}

}  // namespace walklab
