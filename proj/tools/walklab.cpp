// walklab: exact random-walk laws, published-table reproduction, seeded
// Monte Carlo cross-checks, and the verification battery.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "walklab/laws.hpp"
#include "walklab/montecarlo.hpp"
#include "walklab/oracles.hpp"
#include "walklab/paths.hpp"
#include "walklab/recurrence.hpp"
#include "walklab/ruin.hpp"
#include "walklab/verify.hpp"

namespace {

using namespace walklab;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitSimQuality = 4;

constexpr std::uint64_t kDefaultSeed = 42;
constexpr std::uint64_t kDefaultTrials = 100000;

struct Output {
  std::string format = "csv";  // csv | json
  int precision = 6;
  std::string path;  // empty = stdout

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
      std::ofstream f(path);
      if (!f) throw UsageError("cannot open output file: " + path);
      f << text;
      if (!text.empty() && text.back() != '\n') f << "\n";
    }
  }
};

// one (name, exact) row set rendered as CSV or JSON
std::string render_scalars(const std::vector<std::pair<std::string, Ratio>>& rows,
                           const Output& out) {
  if (out.format == "json") {
    nlohmann::json j;
    for (const auto& [name, r] : rows) {
      j[name] = {{"exact", r.to_string()},
                 {"decimal", std::stod(r.to_decimal(out.precision))}};
    }
    return j.dump(2);
  }
  std::ostringstream os;
  os << "name,exact,decimal\n";
  for (const auto& [name, r] : rows)
    os << name << "," << r.to_string() << "," << r.to_decimal(out.precision) << "\n";
  return os.str();
}

std::string render_table(const LawTable& t, const Output& out) {
  return out.format == "json" ? t.to_json(out.precision) : t.to_csv(out.precision);
}

// defaults loadable from a key=value config file raised by WALKLAB_SEED
struct Defaults {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t trials = kDefaultTrials;
  int precision = 6;
};

Defaults load_defaults(int argc, char** argv) {
  Defaults d;
  std::string config_path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
  if (!config_path.empty()) {
    std::ifstream f(config_path);
    if (!f) throw UsageError("cannot read config file: " + config_path);
    std::string line;
    while (std::getline(f, line)) {
      if (line.empty() || line[0] == '#') continue;
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(0, eq), value = line.substr(eq + 1);
      if (key == "seed") d.seed = std::stoull(value);
      else if (key == "trials") d.trials = std::stoull(value);
      else if (key == "precision") d.precision = std::stoi(value);
    }
  }
  if (const char* env_seed = std::getenv("WALKLAB_SEED"))
    d.seed = std::stoull(env_seed);
  return d;
}

// ---------------------------------------------------------------- tables

LawTable published_table(int id, int precision) {
  const WalkParams fair = WalkParams::fair();
  if (id == 1) {
    LawTable t = lead_time_pmf(10, fair);
    t.label = "lead-time probabilities p_{2k,20}";
    return t;
  }
  if (id == 2) {
    LawTable t;
    t.label = "cumulative lead-time P(2k <= 2a) for 2n=20";
    for (long a = 0; a <= 10; ++a)
      t.rows.push_back({2 * a, lead_time_cdf(10, a, fair)});
    return t;
  }
  (void)precision;
  throw UsageError("published_table: only ids 1 and 2 are LawTables");
}

int cmd_table(int id, const Output& out) {
  if (id == 1 || id == 2) {
    out.emit(render_table(published_table(id, out.precision), out));
    return kExitOk;
  }
  if (id == 3) {
    const double horizon = 365.0;
    const std::vector<double> probs = {0.99, 0.95, 0.90, 0.80, 0.70, 0.60, 0.50,
                                       0.40, 0.30, 0.20, 0.10, 0.05, 0.02, 0.01};
    if (out.format == "json") {
      nlohmann::json j;
      j["label"] = "max lead fraction of a 365-day year";
      j["rows"] = nlohmann::json::array();
      for (double p : probs) {
        Duration dur = lead_fraction_quantile(p, horizon);
        j["rows"].push_back({{"p", p}, {"days", dur.days}, {"display", dur.to_string()}});
      }
      out.emit(j.dump(2));
    } else {
      std::ostringstream os;
      os << "p,days,display\n";
      os.setf(std::ios::fixed);
      for (double p : probs) {
        Duration dur = lead_fraction_quantile(p, horizon);
        os.precision(2);
        os << p << ",";
        os.precision(out.precision);
        os << dur.days << "," << dur.to_string() << "\n";
      }
      out.emit(os.str());
    }
    return kExitOk;
  }
  if (id == 4) {
    const std::vector<std::string> rhos = {"51/49", "55/45", "60/40"};
    std::ostringstream os;
    nlohmann::json rows = nlohmann::json::array();
    os << "rho,win_a3,ruin_a3,win_a10,ruin_a10\n";
    for (const std::string& rs : rhos) {
      Ratio rho = Ratio::parse(rs);
      RuinResult a3 = ruin_symmetric(3, rho);
      RuinResult a10 = ruin_symmetric(10, rho);
      os << rs << "," << a3.prob_win.to_decimal(out.precision) << ","
         << a3.prob_ruin.to_decimal(out.precision) << ","
         << a10.prob_win.to_decimal(out.precision) << ","
         << a10.prob_ruin.to_decimal(out.precision) << "\n";
      rows.push_back({{"rho", rs},
                      {"win_a3", std::stod(a3.prob_win.to_decimal(out.precision))},
                      {"ruin_a3", std::stod(a3.prob_ruin.to_decimal(out.precision))},
                      {"win_a10", std::stod(a10.prob_win.to_decimal(out.precision))},
                      {"ruin_a10", std::stod(a10.prob_ruin.to_decimal(out.precision))}});
    }
    if (out.format == "json") {
      nlohmann::json j{{"label", "ruin probabilities, symmetric barriers"}, {"rows", rows}};
      out.emit(j.dump(2));
    } else {
      out.emit(os.str());
    }
    return kExitOk;
  }
  std::cerr << "unknown table id " << id << " (expected 1-4)\n";
  return kExitUsage;
}

// ---------------------------------------------------------------- law

struct LawArgs {
  std::string name;
  unsigned long n = 0;
  std::string p = "1/2";
  long alpha = 0;
  double x = 0.0;
  double prob = 0.0;
  double horizon = 365.0;
  unsigned long r = 0;
  long a = 0, b = 0, start = 0;
  std::string rho;
  long N = 0;
  bool infinite = false;
  bool use_float = false;
};

int cmd_law(const LawArgs& args, const Output& out) {
  const WalkParams w{Prob::parse(args.p)};
  const std::string& name = args.name;

  if (name == "u2n") {
    out.emit(render_scalars({{"u2n", u2n(args.n, w)}}, out));
  } else if (name == "first-return") {
    out.emit(render_scalars({{"first_return", first_return_prob(args.n, w)}}, out));
  } else if (name == "no-return") {
    out.emit(render_scalars({{"no_return", no_return_prob(args.n, w)}}, out));
  } else if (name == "nonnegative") {
    out.emit(render_scalars({{"nonnegative", nonnegative_prob(args.n, w)}}, out));
  } else if (name == "first-passage") {
    out.emit(render_scalars(
        {{"first_passage_minus1", first_passage_minus1_prob(args.n, w)}}, out));
  } else if (name == "lead-pmf") {
    out.emit(render_table(lead_time_pmf(args.n, w), out));
  } else if (name == "lead-cdf") {
    out.emit(render_scalars({{"lead_cdf", lead_time_cdf(args.n, args.alpha, w)}}, out));
  } else if (name == "arcsine") {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(out.precision);
    os << arcsine_cdf(args.x);
    if (out.format == "json")
      out.emit(nlohmann::json{{"arcsine_cdf", std::stod(os.str())}}.dump(2));
    else
      out.emit("name,value\narcsine_cdf," + os.str() + "\n");
  } else if (name == "lead-quantile") {
    Duration dur = lead_fraction_quantile(args.prob, args.horizon);
    if (out.format == "json")
      out.emit(nlohmann::json{{"days", dur.days}, {"display", dur.to_string()}}.dump(2));
    else
      out.emit("days,display\n" + std::to_string(dur.days) + "," + dur.to_string() + "\n");
  } else if (name == "return-count") {
    out.emit(render_scalars({{"return_count", return_count_pmf(args.r, args.n, w)}}, out));
  } else if (name == "ruin-unbiased") {
    RuinResult r = ruin_unbiased({args.a, args.b, Prob::parse(args.p), args.start});
    out.emit(render_scalars({{"prob_win", r.prob_win},
                             {"prob_ruin", r.prob_ruin},
                             {"expected_duration", r.expected_duration}},
                            out));
  } else if (name == "ruin-biased") {
    RuinSpec spec{args.a, args.b, Prob::parse(args.p), args.start};
    if (args.use_float) {
      RuinResultFloat r = ruin_biased_float(spec);
      nlohmann::json j{{"prob_win", r.prob_win},
                       {"prob_ruin", r.prob_ruin},
                       {"expected_duration", r.expected_duration},
                       {"mode", "float (approximate, log-space)"}};
      if (out.format == "json") {
        out.emit(j.dump(2));
      } else {
        std::ostringstream os;
        os << "prob_win,prob_ruin,expected_duration\n"
           << r.prob_win << "," << r.prob_ruin << "," << r.expected_duration << "\n";
        out.emit(os.str());
      }
    } else {
      RuinResult r = ruin_biased(spec);
      out.emit(render_scalars({{"prob_win", r.prob_win},
                               {"prob_ruin", r.prob_ruin},
                               {"expected_duration", r.expected_duration}},
                              out));
    }
  } else if (name == "ruin-symmetric") {
    RuinResult r = ruin_symmetric(args.a, Ratio::parse(args.rho));
    out.emit(render_scalars({{"prob_win", r.prob_win},
                             {"prob_ruin", r.prob_ruin},
                             {"expected_duration", r.expected_duration}},
                            out));
  } else if (name == "ruin-degenerate") {
    RuinResult r = ruin_degenerate({args.a, args.b, Prob::parse(args.p), args.start});
    out.emit(render_scalars({{"prob_win", r.prob_win},
                             {"prob_ruin", r.prob_ruin},
                             {"expected_duration", r.expected_duration}},
                            out));
  } else if (name == "escape") {
    Prob p = Prob::parse(args.p);
    Ratio value = args.infinite
                      ? escape_probability_limit(p)
                      : (p.value() == Ratio(1, 2) ? escape_probability_fair(args.N)
                                                  : escape_probability(p, args.N));
    out.emit(render_scalars({{"escape", value}}, out));
  } else if (name == "hit-zero") {
    Prob p = Prob::parse(args.p);
    if (p.value() == Ratio(1, 2)) {
      out.emit(render_scalars({{"hit_zero", Ratio(1)}}, out));
    } else {
      out.emit(render_scalars(
          {{"hit_zero", hit_zero_probability(p, static_cast<int>(args.start))}}, out));
    }
  } else {
    std::cerr << "unknown law '" << name << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- figures

const std::vector<std::string>& default_rho_grid() {
  static const std::vector<std::string> grid = {"1/4", "1/2", "3/4", "9/10", "1",
                                                "11/10", "3/2", "2", "3", "4"};
  return grid;
}

RuinResult symmetric_or_unbiased(long A, const Ratio& rho) {
  if (rho == Ratio(1)) return ruin_unbiased({A, A, Prob(Ratio(1, 2)), 0});
  return ruin_symmetric(A, rho);
}

int cmd_figure(int id, unsigned long n, long A, const Output& out) {
  const WalkParams fair = WalkParams::fair();
  std::ostringstream os;
  nlohmann::json rows = nlohmann::json::array();
  std::string label;

  if (id == 3) {
    label = "lead-time pmf";
    os << "two_k,pmf\n";
    LawTable pmf = lead_time_pmf(n, fair);
    for (const auto& row : pmf.rows) {
      os << row.index << "," << row.exact.to_decimal(out.precision) << "\n";
      rows.push_back({{"two_k", row.index},
                      {"pmf", std::stod(row.exact.to_decimal(out.precision))}});
    }
  } else if (id == 4) {
    label = "lead-time cdf";
    os << "two_alpha,cdf\n";
    for (long a = 0; a <= static_cast<long>(n); ++a) {
      Ratio c = lead_time_cdf(n, a, fair);
      os << 2 * a << "," << c.to_decimal(out.precision) << "\n";
      rows.push_back({{"two_alpha", 2 * a},
                      {"cdf", std::stod(c.to_decimal(out.precision))}});
    }
  } else if (id == 5) {
    label = "exact lead-time cdf vs arcsine law";
    os << "alpha,exact,arcsine\n";
    os.setf(std::ios::fixed);
    for (long a = 0; a <= static_cast<long>(n); ++a) {
      Ratio exact = lead_time_cdf(n, a, fair);
      double approx = arcsine_cdf(static_cast<double>(a) / static_cast<double>(n));
      std::ostringstream av;
      av.setf(std::ios::fixed);
      av.precision(out.precision);
      av << approx;
      os << a << "," << exact.to_decimal(out.precision) << "," << av.str() << "\n";
      rows.push_back({{"alpha", a},
                      {"exact", std::stod(exact.to_decimal(out.precision))},
                      {"arcsine", approx}});
    }
  } else if (id == 7) {
    label = "symmetric ruin probabilities vs rho";
    os << "rho,win,lose\n";
    for (const std::string& rs : default_rho_grid()) {
      RuinResult r = symmetric_or_unbiased(A, Ratio::parse(rs));
      os << rs << "," << r.prob_win.to_decimal(out.precision) << ","
         << r.prob_ruin.to_decimal(out.precision) << "\n";
      rows.push_back({{"rho", rs},
                      {"win", std::stod(r.prob_win.to_decimal(out.precision))},
                      {"lose", std::stod(r.prob_ruin.to_decimal(out.precision))}});
    }
  } else if (id == 8) {
    label = "win probability vs barrier height";
    os << "a,rho,win\n";
    for (const std::string& rs : {"51/49", "55/45", "60/40"}) {
      Ratio rho = Ratio::parse(rs);
      for (long a = 1; a <= 20; ++a) {
        RuinResult r = ruin_symmetric(a, rho);
        os << a << "," << rs << "," << r.prob_win.to_decimal(out.precision) << "\n";
        rows.push_back({{"a", a},
                        {"rho", rs},
                        {"win", std::stod(r.prob_win.to_decimal(out.precision))}});
      }
    }
  } else if (id == 9) {
    label = "expected duration vs rho, symmetric barriers";
    os << "rho,duration\n";
    for (const std::string& rs : default_rho_grid()) {
      RuinResult r = symmetric_or_unbiased(A, Ratio::parse(rs));
      os << rs << "," << r.expected_duration.to_decimal(out.precision) << "\n";
      rows.push_back(
          {{"rho", rs},
           {"duration", std::stod(r.expected_duration.to_decimal(out.precision))}});
    }
  } else {
    std::cerr << "unknown figure id " << id << " (expected 3,4,5,7,8,9)\n";
    return kExitUsage;
  }

  if (out.format == "json")
    out.emit(nlohmann::json{{"label", label}, {"rows", rows}}.dump(2));
  else
    out.emit(os.str());
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

struct SimArgs {
  std::string target;
  long a = 5, b = 3, start = 0;
  std::string p = "1/2";
  unsigned long n = 10;
  unsigned long r = 0;
  std::uint64_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_simulate(const SimArgs& args, const Output& out) {
  SimConfig cfg{args.seed, args.trials, 1};
  std::ostringstream os;
  nlohmann::json rows = nlohmann::json::array();
  os << "target,metric," << Estimate::csv_header() << ",exact,z\n";
  std::uint64_t capped = 0;

  auto add_row = [&](const std::string& metric, const Estimate& e, const Ratio& exact) {
    const double ex = exact.to_double();
    os << args.target << "," << metric << "," << e.to_csv_row() << ","
       << exact.to_decimal(out.precision) << "," << e.z_score(ex) << "\n";
    rows.push_back({{"metric", metric},
                    {"mean", e.mean},
                    {"stderr", e.stderr_},
                    {"ci95", {e.ci_lo(), e.ci_hi()}},
                    {"trials", e.trials},
                    {"exact", exact.to_string()},
                    {"z", e.z_score(ex)}});
  };

  if (args.target == "ruin") {
    RuinSpec spec{args.a, args.b, Prob::parse(args.p), args.start};
    RuinResult exact = spec.p.value() == Ratio(1, 2)
                           ? ruin_unbiased(spec)
                           : (spec.p.value() == Ratio(0) || spec.p.value() == Ratio(1)
                                  ? ruin_degenerate(spec)
                                  : ruin_biased(spec));
    RuinEstimate est = estimate_ruin(cfg, spec);
    capped = est.capped_trials;
    add_row("prob_win", est.prob_win, exact.prob_win);
    add_row("duration", est.duration, exact.expected_duration);
  } else if (args.target == "lead") {
    auto est = estimate_lead_time(cfg, args.n);
    LawTable pmf = lead_time_pmf(args.n, WalkParams::fair());
    for (size_t k = 0; k < est.size(); ++k)
      add_row("p_{" + std::to_string(2 * k) + "," + std::to_string(2 * args.n) + "}",
              est[k], pmf.rows[k].exact);
  } else if (args.target == "returns") {
    Estimate e = estimate_return_counts(cfg, args.n, args.r);
    add_row("returns_" + std::to_string(args.r),
            e, return_count_pmf(args.r, args.n, WalkParams::fair()));
  } else if (args.target == "first-return") {
    WalkParams w{Prob::parse(args.p)};
    Estimate e = estimate_first_return(cfg, args.n, w);
    add_row("first_return", e, first_return_prob(args.n, w));
  } else {
    std::cerr << "unknown simulate target '" << args.target << "'\n";
    return kExitUsage;
  }

  if (out.format == "json") {
    out.emit(nlohmann::json{{"target", args.target},
                            {"seed", args.seed},
                            {"trials", args.trials},
                            {"capped_trials", capped},
                            {"rows", rows}}
                 .dump(2));
  } else {
    out.emit(os.str());
  }
  if (capped > 0 &&
      static_cast<double>(capped) > 0.001 * static_cast<double>(args.trials)) {
    std::cerr << "step cap (" << kStepCap << ") hit in " << capped
              << " trials (> 0.1%)\n";
    return kExitSimQuality;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- recurrence

int cmd_recurrence(int dim, const std::string& p, unsigned long terms,
                   const Output& out) {
  RecurrenceReport report =
      dim == 1 ? classify(1, WalkParams{Prob::parse(p)})
               : recurrence_bracket(dim, terms);
  out.emit(report.to_json(out.precision));
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& only, bool inject_fault, const Output& out) {
  auto results = run_verification(only, inject_fault);
  std::map<std::string, std::pair<int, int>> groups;  // group -> (pass, fail)
  std::vector<const CheckResult*> failures;
  for (const auto& r : results) {
    auto& g = groups[r.group];
    (r.pass ? g.first : g.second)++;
    if (!r.pass) failures.push_back(&r);
  }
  if (out.format == "json") {
    nlohmann::json j;
    for (const auto& [g, counts] : groups)
      j["groups"][g] = {{"passed", counts.first}, {"failed", counts.second}};
    j["failures"] = nlohmann::json::array();
    for (const auto* f : failures)
      j["failures"].push_back({{"group", f->group}, {"name", f->name}, {"detail", f->detail}});
    j["total"] = results.size();
    j["ok"] = failures.empty();
    out.emit(j.dump(2));
  } else {
    std::ostringstream os;
    os << "group,passed,failed\n";
    for (const auto& [g, counts] : groups)
      os << g << "," << counts.first << "," << counts.second << "\n";
    out.emit(os.str());
    for (const auto* f : failures)
      std::cerr << "FAIL " << f->group << "/" << f->name << ": " << f->detail << "\n";
  }
  return failures.empty() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  Defaults defaults;
  try {
    defaults = load_defaults(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"walklab: exact random-walk laws with enumeration and Monte Carlo cross-checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  out.precision = defaults.precision;
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file (precision/seed/trials)");
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--precision", out.precision, "decimal places for rendered values")
      ->check(CLI::Range(1, 50))
      ->capture_default_str();
  app.add_option("--out", out.path, "output file (default stdout)");

  // table
  auto* table = app.add_subcommand("table", "reproduce a published table (1-4)");
  int table_id = 0;
  table->add_option("--id", table_id, "table id")->required();

  // law
  auto* law = app.add_subcommand("law", "evaluate a single law exactly");
  LawArgs law_args;
  law->add_option("name", law_args.name, "law identifier")->required();
  law->add_option("--n", law_args.n, "half-length n (time horizon 2n)");
  law->add_option("--p", law_args.p, "up-step probability as a rational a/b");
  law->add_option("--alpha", law_args.alpha, "cdf cut point");
  law->add_option("--x", law_args.x, "arcsine argument alpha/n in [0,1]");
  law->add_option("--prob", law_args.prob, "quantile probability in (0,1)");
  law->add_option("--horizon", law_args.horizon, "horizon in days")->capture_default_str();
  law->add_option("--r", law_args.r, "return count");
  law->add_option("--a", law_args.a, "upper barrier A");
  law->add_option("--b", law_args.b, "lower barrier B");
  law->add_option("--start", law_args.start, "start offset k (or +/-1 for hit-zero)");
  law->add_option("--rho", law_args.rho, "odds ratio q/p as a rational");
  law->add_option("--N", law_args.N, "far barrier for escape");
  law->add_flag("--infinite", law_args.infinite, "take the N->infinity limit");
  law->add_flag("--float", law_args.use_float,
                "log-space float evaluation for large barriers (approximate)");

  // figure
  auto* figure = app.add_subcommand("figure", "emit plotted series as columns");
  int figure_id = 0;
  unsigned long figure_n = 10;
  long figure_a = 3;
  figure->add_option("--id", figure_id, "figure id (3,4,5,7,8,9)")->required();
  figure->add_option("--n", figure_n, "half-length n for figures 3-5")->capture_default_str();
  figure->add_option("--a", figure_a, "barrier A for figures 7,9")->capture_default_str();

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate vs exact law");
  SimArgs sim_args;
  sim_args.seed = defaults.seed;
  sim_args.trials = defaults.trials;
  simulate->add_option("target", sim_args.target, "ruin|lead|returns|first-return")
      ->required();
  simulate->add_option("--a", sim_args.a, "upper barrier A")->capture_default_str();
  simulate->add_option("--b", sim_args.b, "lower barrier B")->capture_default_str();
  simulate->add_option("--start", sim_args.start, "start offset k");
  simulate->add_option("--p", sim_args.p, "up-step probability a/b")->capture_default_str();
  simulate->add_option("--n", sim_args.n, "half-length n")->capture_default_str();
  simulate->add_option("--r", sim_args.r, "return count for target 'returns'");
  simulate->add_option("--trials", sim_args.trials, "trial count")->capture_default_str();
  simulate->add_option("--seed", sim_args.seed, "64-bit seed")->capture_default_str();

  // recurrence
  auto* recurrence = app.add_subcommand("recurrence", "classification and series report");
  int rec_dim = 1;
  std::string rec_p = "1/2";
  unsigned long rec_terms = 1000;
  recurrence->add_option("--dim", rec_dim, "dimension (1, 2, or 3)")->required();
  recurrence->add_option("--p", rec_p, "up-step probability (1D only)")->capture_default_str();
  recurrence->add_option("--terms", rec_terms, "partial-sum length for d in {2,3}")
      ->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "run the oracle and identity battery");
  std::string verify_only;
  bool verify_fault = false;
  verify->add_option("--only", verify_only,
                     "restrict to one group (ballot, reflection, loops, laws, lead, "
                     "ruin, recurrence)");
  verify->add_flag("--inject-fault", verify_fault, "harness self-test: force one failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table) return cmd_table(table_id, out);
    if (*law) return cmd_law(law_args, out);
    if (*figure) return cmd_figure(figure_id, figure_n, figure_a, out);
    if (*simulate) return cmd_simulate(sim_args, out);
    if (*recurrence) return cmd_recurrence(rec_dim, rec_p, rec_terms, out);
    if (*verify) return cmd_verify(verify_only, verify_fault, out);
  } catch (const BiasedUnsupported& e) {
    std::cerr << "domain restriction: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NotUnbiased& e) {
    std::cerr << "domain restriction: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NotBiased& e) {
    std::cerr << "domain restriction: " << e.what() << "\n";
    return kExitDomain;
  } catch (const DegenerateP& e) {
    std::cerr << "domain restriction: " << e.what() << "\n";
    return kExitDomain;
  } catch (const StartUnsupported& e) {
    std::cerr << "domain restriction: " << e.what() << "\n";
    return kExitDomain;
  } catch (const RhoOne& e) {
    std::cerr << "domain restriction: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
