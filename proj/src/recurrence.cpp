#include "walklab/recurrence.hpp"

#include <cmath>
#include <vector>

#include "json.hpp"
#include "walklab/reduce.hpp"

namespace walklab {

namespace {

Ratio abs_drift(const WalkParams& w) {
  return (w.p.value() - w.q()).abs();
}

nlohmann::json bracket_json(const Bracket& b) {
  return {{"lo", b.lo}, {"hi", b.hi}};
}

}  // namespace

std::string RecurrenceReport::to_json(int precision) const {
  nlohmann::json j;
  j["dimension"] = dimension;
  if (p) j["p"] = p->value().to_string();
  j["classification"] =
      classification == Classification::kPersistent ? "persistent" : "transient";
  if (u_sum_divergent)
    j["u_sum"] = "divergent";
  else if (u_sum_exact)
    j["u_sum"] = u_sum_exact->to_string();
  else if (u_sum_bracket)
    j["u_sum"] = bracket_json(*u_sum_bracket);
  if (p_return_exact)
    j["p_return"] = p_return_exact->to_string();
  else if (p_return_bracket)
    j["p_return"] = bracket_json(*p_return_bracket);
  if (partial_sum) j["partial_sum"] = *partial_sum;
  if (log_slope) j["log_slope"] = *log_slope;
  if (u_sum_exact)
    j["decimal"] = {{"u_sum", std::stod(u_sum_exact->to_decimal(precision))}};
  return j.dump(2);
}

SeriesSum series_sum_u(const WalkParams& w) {
  Ratio drift = abs_drift(w);
  if (drift == Ratio(0)) return {true, Ratio(0)};
  return {false, drift.inverse()};
}

Ratio prob_return_origin(const WalkParams& w) {
  return Ratio(1) - abs_drift(w);
}

RecurrenceReport classify(int dimension, const WalkParams& w) {
  if (dimension == 1) {
    RecurrenceReport r;
    r.dimension = 1;
    r.p = w.p;
    SeriesSum s = series_sum_u(w);
    if (s.divergent) {
      r.classification = Classification::kPersistent;
      r.u_sum_divergent = true;
      r.p_return_exact = Ratio(1);
    } else {
      r.classification = Classification::kTransient;
      r.u_sum_exact = s.value;
      r.p_return_exact = prob_return_origin(w);
    }
    return r;
  }
  if (dimension == 2 || dimension == 3) return recurrence_bracket(dimension, 1000);
  throw UnsupportedDimension("classify: dimension must be 1, 2, or 3");
}

Ratio u2d(unsigned long n) {
  BigInt c = binomial(2 * n, static_cast<long>(n));
  BigInt four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, 2 * n);
  return Ratio(c * c, four_pow);
}

Ratio u3d(unsigned long n) {
  if (n > kU3dExactCap)
    throw TooLarge("u3d: exact mode capped at n = " + std::to_string(kU3dExactCap) +
                   "; use u3d_float");
  if (n == 0) return Ratio(1);
  // sum over j + k <= n of multinomial(2n; j,j,k,k,m,m) with m = n-j-k.
  // Each term factors as C(2n,n) * T(j,k)^2 with the trinomial
  // T(j,k) = n!/(j! k! m!), updated incrementally along each row.
  BigCount inner(0);
  for (unsigned long j = 0; j <= n; ++j) {
    BigCount t = binomial(n, static_cast<long>(j));  // T(j, 0)
    for (unsigned long k = 0; k + j <= n; ++k) {
      inner += t * t;
      // T(j, k+1) = T(j, k) * (n-j-k) / (k+1)
      if (k + j < n) {
        t *= n - j - k;
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), k + 1);
      }
    }
  }
  BigInt six_pow;
  mpz_ui_pow_ui(six_pow.get_mpz_t(), 6, 2 * n);
  return Ratio(BigInt(binomial(2 * n, static_cast<long>(n))) * inner, six_pow);
}

double u3d_float(unsigned long n) {
  if (n == 0) return 1.0;
  const double log3 = std::log(3.0);
  const double lf_n = log_factorial(n);
  double inner = 0.0;  // sum of squared trinomial probabilities
  for (unsigned long j = 0; j <= n; ++j) {
    for (unsigned long k = 0; k + j <= n; ++k) {
      double log_t = lf_n - log_factorial(j) - log_factorial(k) -
                     log_factorial(n - j - k) - n * log3;
      inner += std::exp(2.0 * log_t);
    }
  }
  double log_central =
      log_factorial(2 * n) - 2.0 * lf_n - 2.0 * n * std::log(2.0);
  return std::exp(log_central) * inner;
}

double u3d_bound_constant() { return 3.0 * std::sqrt(3.0) / (2.0 * M_PI * std::sqrt(M_PI)); }

double u3d_bound(unsigned long n) {
  if (n < 1) throw DomainRange("u3d_bound: n >= 1 required");
  return u3d_bound_constant() * std::pow(static_cast<double>(n), -1.5);
}

namespace {

std::vector<double> u3d_terms_serial(unsigned long terms) {
  std::vector<double> v(terms + 1);
  for (unsigned long n = 0; n <= terms; ++n) v[n] = u3d_float(n);
  return v;
}

std::vector<double> u3d_terms_parallel(unsigned long terms) {
  std::vector<double> v(terms + 1);
  const long last = static_cast<long>(terms);
#pragma omp parallel for schedule(dynamic)
  for (long n = 0; n <= last; ++n)
    v[static_cast<size_t>(n)] = u3d_float(static_cast<unsigned long>(n));
  return v;
}

}  // namespace

double u3d_partial_sum_serial(unsigned long terms) {
  auto v = u3d_terms_serial(terms);
  return pairwise_sum(v);
}

double u3d_partial_sum(unsigned long terms) {
  auto v = u3d_terms_parallel(terms);
  return pairwise_sum(v);
}

RecurrenceReport recurrence_bracket(int dimension, unsigned long terms) {
  if (terms < 10) throw UsageError("recurrence_bracket: terms >= 10 required");
  if (dimension == 3) {
    RecurrenceReport r;
    r.dimension = 3;
    r.classification = Classification::kTransient;
    const double partial = u3d_partial_sum(terms);
    // one-sided tail: 0 below, integral of the bound term above
    const double tail =
        2.0 * u3d_bound_constant() / std::sqrt(static_cast<double>(terms));
    r.u_sum_bracket = Bracket{partial, partial + tail};
    r.p_return_bracket = Bracket{(partial - 1.0) / partial,
                                 (partial + tail - 1.0) / (partial + tail)};
    r.partial_sum = partial;
    return r;
  }
  if (dimension == 2) {
    RecurrenceReport r;
    r.dimension = 2;
    // classification comes from the theorem; the fit below is evidence only
    r.classification = Classification::kPersistent;
    r.u_sum_divergent = true;
    r.p_return_exact = Ratio(1);
    std::vector<double> v(terms + 1);
    const double log4 = std::log(4.0);
    for (unsigned long n = 0; n <= terms; ++n) {
      double log_c = log_factorial(2 * n) - 2.0 * log_factorial(n) - n * log4;
      v[n] = std::exp(2.0 * log_c);
    }
    const double full = pairwise_sum(v);
    const double half =
        pairwise_sum(std::span<const double>(v).subspan(0, terms / 2 + 1));
    r.partial_sum = full;
    r.log_slope = (full - half) /
                  (std::log(static_cast<double>(terms)) -
                   std::log(static_cast<double>(terms / 2)));
    return r;
  }
  throw UnsupportedDimension("recurrence_bracket: dimension must be 2 or 3");
}

}  // namespace walklab
