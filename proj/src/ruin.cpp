#include "walklab/ruin.hpp"

#include <cmath>

#include "json.hpp"

namespace walklab {

namespace {

const Ratio kHalf(1, 2);

}  // namespace

void RuinSpec::validate() const {
  if (A <= 0 || B <= 0) throw UsageError("RuinSpec: A > 0 and B > 0 required");
  if (start < -B || start > A)
    throw UsageError("RuinSpec: start must lie in [-B, A]");
}

std::string RuinResult::to_json(int precision) const {
  nlohmann::json j;
  j["prob_win"] = prob_win.to_string();
  j["prob_ruin"] = prob_ruin.to_string();
  j["expected_duration"] = expected_duration.to_string();
  j["decimal"] = {
      {"prob_win", std::stod(prob_win.to_decimal(precision))},
      {"prob_ruin", std::stod(prob_ruin.to_decimal(precision))},
      {"expected_duration", std::stod(expected_duration.to_decimal(precision))}};
  return j.dump(2);
}

RuinResult ruin_unbiased(const RuinSpec& spec) {
  spec.validate();
  if (spec.p.value() != kHalf)
    throw NotUnbiased("ruin_unbiased: p = 1/2 required, got " +
                      spec.p.value().to_string());
  const Ratio total(spec.A + spec.B);
  Ratio win = Ratio(spec.B + spec.start) / total;
  Ratio lose = Ratio(spec.A - spec.start) / total;
  Ratio duration = Ratio(spec.A - spec.start) * Ratio(spec.B + spec.start);
  return {win, lose, duration};
}

RuinResult ruin_biased(const RuinSpec& spec) {
  spec.validate();
  if (spec.p.value() == kHalf) return ruin_unbiased(spec);
  if (spec.p.value() == Ratio(0) || spec.p.value() == Ratio(1))
    throw DegenerateP("ruin_biased: p in {0,1}; use ruin_degenerate");
  if (spec.start != 0)
    throw StartUnsupported("ruin_biased: start offsets are supported only for p = 1/2");

  const Ratio rho = spec.p.complement() / spec.p.value();
  const Ratio one(1);
  const unsigned long a = static_cast<unsigned long>(spec.A);
  const unsigned long b = static_cast<unsigned long>(spec.B);
  const Ratio win = (one - rho.pow(b)) / (one - rho.pow(a + b));
  const Ratio inv_rho = rho.inverse();
  const Ratio lose = (one - inv_rho.pow(a)) / (one - inv_rho.pow(a + b));

  // E[tau] = B/(q-p) - (A+B)/(q-p) * prob_win
  const Ratio q_minus_p = spec.p.complement() - spec.p.value();
  const Ratio duration =
      (Ratio(spec.B) - Ratio(spec.A + spec.B) * win) / q_minus_p;
  return {win, lose, duration};
}

RuinResult ruin_symmetric(long A, const Ratio& rho) {
  if (A <= 0) throw UsageError("ruin_symmetric: A > 0 required");
  if (rho <= Ratio(0)) throw UsageError("ruin_symmetric: rho > 0 required");
  if (rho == Ratio(1))
    throw RhoOne("ruin_symmetric: rho = 1 is the fair walk; use ruin_unbiased");
  const Ratio one(1);
  const unsigned long a = static_cast<unsigned long>(A);
  const Ratio rho_a = rho.pow(a);
  const Ratio win = one / (one + rho_a);
  const Ratio lose = one / (one + rho_a.inverse());
  const Ratio duration =
      Ratio(A) * ((one + rho) / (one - rho)) * ((one - rho_a) / (one + rho_a));
  return {win, lose, duration};
}

RuinResult ruin_degenerate(const RuinSpec& spec) {
  spec.validate();
  if (spec.p.value() == Ratio(1))
    return {Ratio(1), Ratio(0), Ratio(spec.A - spec.start)};
  if (spec.p.value() == Ratio(0))
    return {Ratio(0), Ratio(1), Ratio(spec.B + spec.start)};
  throw UsageError("ruin_degenerate: p must be 0 or 1");
}

RuinResultFloat ruin_biased_float(const RuinSpec& spec) {
  spec.validate();
  if (spec.start != 0)
    throw StartUnsupported("ruin_biased_float: start offsets unsupported");
  const double p = spec.p.value().to_double();
  const double q = 1.0 - p;
  if (p <= 0.0 || p >= 1.0 || p == 0.5)
    throw UsageError("ruin_biased_float: 0 < p < 1, p != 1/2 required");
  const double log_rho = std::log(q) - std::log(p);
  const double A = static_cast<double>(spec.A);
  const double B = static_cast<double>(spec.B);
  // (1 - rho^B) / (1 - rho^(A+B)), stable for either sign of log_rho
  auto one_minus_pow = [&](double exponent) {
    return -std::expm1(exponent * log_rho);
  };
  double win;
  if (log_rho > 0) {
    // both terms are large and negative; work with rho^x - 1 in log space
    double log_num = B * log_rho + std::log1p(-std::exp(-B * log_rho));
    double log_den = (A + B) * log_rho + std::log1p(-std::exp(-(A + B) * log_rho));
    win = std::exp(log_num - log_den);
  } else {
    win = one_minus_pow(B) / one_minus_pow(A + B);
  }
  double duration = (B - (A + B) * win) / (q - p);
  return {win, 1.0 - win, duration};
}

Ratio escape_probability(const Prob& p, long N) {
  if (N < 1) throw UsageError("escape_probability: N >= 1 required");
  if (p.value() <= Ratio(0) || p.value() >= Ratio(1))
    throw DegenerateP("escape_probability: 0 < p < 1 required");
  if (p.value() == kHalf)
    throw NotBiased("escape_probability: p = 1/2 has limit 1/N; use escape_probability_fair");
  if (N == 1) return Ratio(1);
  const Ratio rho = p.complement() / p.value();
  const Ratio one(1);
  return (one - rho) / (one - rho.pow(static_cast<unsigned long>(N)));
}

Ratio escape_probability_fair(long N) {
  if (N < 1) throw UsageError("escape_probability_fair: N >= 1 required");
  return Ratio(1, N);
}

Ratio escape_probability_limit(const Prob& p) {
  if (p.value() <= Ratio(0) || p.value() >= Ratio(1))
    throw DegenerateP("escape_probability_limit: 0 < p < 1 required");
  if (p.value() == kHalf)
    throw NotBiased("escape_probability_limit: undefined at p = 1/2 (limit 1/N -> 0)");
  if (p.value() > kHalf) return Ratio(1) - p.complement() / p.value();
  return Ratio(0);
}

Ratio hit_zero_probability(const Prob& p, int start) {
  if (p.value() <= Ratio(0) || p.value() >= Ratio(1))
    throw DegenerateP("hit_zero_probability: 0 < p < 1 required");
  if (start != 1 && start != -1)
    throw UsageError("hit_zero_probability: start must be +1 or -1");
  const Ratio ratio = start == 1 ? p.complement() / p.value()
                                 : p.value() / p.complement();
  return ratio < Ratio(1) ? ratio : Ratio(1);
}

}  // namespace walklab
