#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "walklab/numerics.hpp"
#include "walklab/oracles.hpp"

using namespace walklab;

TEST_CASE("binomial matches the Pascal triangle exhaustively up to n=64") {
  for (unsigned long n = 0; n <= 64; ++n)
    for (long k = -1; k <= static_cast<long>(n) + 1; ++k)
      CHECK(binomial(n, k) == oracles::binomial_pascal(n, k));
}

TEST_CASE("binomial symmetry and boundary values") {
  for (unsigned long n = 0; n <= 40; ++n) {
    CHECK(binomial(n, 0) == 1);
    CHECK(binomial(n, static_cast<long>(n)) == 1);
    for (long k = 0; k <= static_cast<long>(n); ++k)
      CHECK(binomial(n, k) == binomial(n, static_cast<long>(n) - k));
  }
  CHECK(binomial(10, -3) == 0);
  CHECK(binomial(10, 11) == 0);
}

TEST_CASE("multinomial reduces to binomial products") {
  CHECK(multinomial(6, {2, 2, 2}) == 90);
  CHECK(multinomial(4, {4}) == 1);
  CHECK(multinomial(5, {2, 3}) == binomial(5, 2));
  // (n; j, k, n-j-k) = C(n,j) C(n-j,k)
  for (unsigned long n = 0; n <= 12; ++n)
    for (unsigned long j = 0; j <= n; ++j)
      for (unsigned long k = 0; j + k <= n; ++k)
        CHECK(multinomial(n, {j, k, n - j - k}) ==
              binomial(n, static_cast<long>(j)) *
                  binomial(n - j, static_cast<long>(k)));
  CHECK_THROWS_AS(multinomial(5, {2, 2}), PartsMismatch);
}

TEST_CASE("Ratio parsing accepts canonical rationals only") {
  CHECK(Ratio::parse("3/6") == Ratio(1, 2));
  CHECK(Ratio::parse("-4/8") == Ratio(-1, 2));
  CHECK(Ratio::parse("7") == Ratio(7));
  CHECK_THROWS_AS(Ratio::parse("0.5"), UsageError);
  CHECK_THROWS_AS(Ratio::parse("1e-3"), UsageError);
  CHECK_THROWS_AS(Ratio::parse("1/0"), UsageError);
  CHECK_THROWS_AS(Ratio::parse(""), UsageError);
  CHECK_THROWS_AS(Ratio::parse("a/b"), UsageError);
}

TEST_CASE("Ratio arithmetic is exact and canonical") {
  Ratio a(1, 3), b(1, 6);
  CHECK(a + b == Ratio(1, 2));
  CHECK(a - b == Ratio(1, 6));
  CHECK(a * b == Ratio(1, 18));
  CHECK(a / b == Ratio(2));
  CHECK((a + b).to_string() == "1/2");
  CHECK(Ratio(2, 4).to_string() == "1/2");
  CHECK(Ratio(1, 3).pow(20) == Ratio(BigInt(1), BigInt("3486784401")));
  CHECK(Ratio(2, 3).inverse() == Ratio(3, 2));
  CHECK(Ratio(-1, 2).abs() == Ratio(1, 2));
  // a sum of tiny terms that a double would mangle
  Ratio s(0);
  for (int i = 1; i <= 50; ++i) s = s + Ratio(1, i);
  Ratio t(0);
  for (int i = 50; i >= 1; --i) t = t + Ratio(1, i);
  CHECK(s == t);
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(Ratio(1, 8).to_decimal(2) == "0.12");   // 0.125 -> even 2
  CHECK(Ratio(3, 8).to_decimal(2) == "0.38");   // 0.375 -> even 8
  CHECK(Ratio(1, 4).to_decimal(1) == "0.2");    // 0.25 -> even 2
  CHECK(Ratio(3, 4).to_decimal(1) == "0.8");    // 0.75 -> even 8
  CHECK(Ratio(1, 3).to_decimal(6) == "0.333333");
  CHECK(Ratio(2, 3).to_decimal(6) == "0.666667");
  CHECK(Ratio(-1, 8).to_decimal(2) == "-0.12");
  CHECK(Ratio(1).to_decimal(3) == "1.000");
  CHECK(Ratio(0).to_decimal(2) == "0.00");
}

TEST_CASE("Prob enforces the unit interval") {
  CHECK_NOTHROW(Prob(Ratio(0)));
  CHECK_NOTHROW(Prob(Ratio(1)));
  CHECK_THROWS_AS(Prob(Ratio(-1, 2)), UsageError);
  CHECK_THROWS_AS(Prob(Ratio(3, 2)), UsageError);
  CHECK(Prob(Ratio(1, 3)).complement() == Ratio(2, 3));
}

TEST_CASE("central binomial asymptotic: relative error small and shrinking") {
  double prev_err = 1.0;
  for (unsigned long n : {10ul, 40ul, 160ul, 320ul}) {
    double exact = Ratio(binomial(2 * n, static_cast<long>(n)), BigInt(1)).to_double();
    double approx = central_binomial_asymptotic(n);
    double err = std::fabs(approx / exact - 1.0);
    CHECK(err < prev_err);
    prev_err = err;
  }
  CHECK(prev_err < 1e-3);
}

TEST_CASE("log_factorial agrees with exact factorials") {
  double lf = 0.0;
  for (unsigned long n = 1; n <= 100; ++n) {
    lf += std::log(static_cast<double>(n));
    CHECK(log_factorial(n) == doctest::Approx(lf).epsilon(1e-12));
  }
  CHECK(log_factorial(0) == 0.0);
}
