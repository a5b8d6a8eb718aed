#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "walklab/oracles.hpp"
#include "walklab/recurrence.hpp"

using namespace walklab;

TEST_CASE("1D series sum and return probability, exact") {
  for (const Ratio& pv : {Ratio(1, 3), Ratio(2, 5), Ratio(3, 4)}) {
    WalkParams w{Prob(pv)};
    Ratio gap = (pv - (Ratio(1) - pv)).abs();
    SeriesSum s = series_sum_u(w);
    REQUIRE(!s.divergent);
    CHECK(s.value == gap.inverse());
    CHECK(prob_return_origin(w) == Ratio(1) - gap);
    // u = 1 / (1 - P0)
    CHECK(s.value == (Ratio(1) - prob_return_origin(w)).inverse());
  }
  CHECK(series_sum_u(WalkParams::fair()).divergent);
  CHECK(prob_return_origin(WalkParams::fair()) == Ratio(1));
}

TEST_CASE("1D classification") {
  RecurrenceReport fair = classify(1, WalkParams::fair());
  CHECK(fair.classification == Classification::kPersistent);
  CHECK(fair.u_sum_divergent);
  CHECK(*fair.p_return_exact == Ratio(1));
  RecurrenceReport biased = classify(1, WalkParams{Prob(Ratio(1, 3))});
  CHECK(biased.classification == Classification::kTransient);
  CHECK(*biased.u_sum_exact == Ratio(3));
  CHECK(*biased.p_return_exact == Ratio(2, 3));
  CHECK_THROWS_AS(classify(4), UnsupportedDimension);
}

TEST_CASE("2D loop probability: closed form vs enumeration") {
  CHECK(u2d(0) == Ratio(1));
  for (int n = 1; n <= 4; ++n) {
    BigInt total(1);
    for (int i = 0; i < 2 * n; ++i) total *= 4;
    CHECK(u2d(static_cast<unsigned long>(n)) ==
          Ratio(BigInt(oracles::count_loops_2d_enum(2 * n)), total));
  }
  // u2d(n) = u1d(n)^2
  for (unsigned long n = 0; n <= 50; ++n)
    CHECK(u2d(n) == u2n(n, WalkParams::fair()).pow(2));
}

TEST_CASE("3D loop probability: exact sum vs enumeration") {
  CHECK(u3d(0) == Ratio(1));
  for (int n = 1; n <= 2; ++n) {
    BigInt total(1);
    for (int i = 0; i < 2 * n; ++i) total *= 6;
    CHECK(u3d(static_cast<unsigned long>(n)) ==
          Ratio(BigInt(oracles::count_loops_3d_enum(2 * n)), total));
  }
  CHECK_THROWS_AS(u3d(kU3dExactCap + 1), TooLarge);
}

TEST_CASE("3D float evaluation tracks the exact rational") {
  for (unsigned long n : {1ul, 5ul, 20ul, 60ul})
    CHECK(u3d_float(n) == doctest::Approx(u3d(n).to_double()).epsilon(1e-10));
}

TEST_CASE("3D upper bound dominates the probability") {
  CHECK(u3d_bound_constant() ==
        doctest::Approx(3.0 * std::sqrt(3.0) / (2.0 * M_PI * std::sqrt(M_PI)))
            .epsilon(1e-12));
  for (unsigned long n = 1; n <= 500; ++n)
    CHECK(u3d_float(n) <= u3d_bound(n));
  // spot checks with the exact rational on the left
  for (unsigned long n : {10ul, 20ul, 50ul, 100ul, 200ul})
    CHECK(u3d(n).to_double() <= u3d_bound(n));
}

TEST_CASE("3D partial sums: serial and parallel kernels are bit-identical") {
  for (unsigned long terms : {1ul, 7ul, 100ul, 500ul})
    CHECK(u3d_partial_sum_serial(terms) == u3d_partial_sum(terms));
}

TEST_CASE("d=3 bracket: nesting, width, and the reference return probability") {
  RecurrenceReport coarse = recurrence_bracket(3, 10);
  RecurrenceReport fine = recurrence_bracket(3, 1000);
  CHECK(coarse.classification == Classification::kTransient);
  REQUIRE(fine.p_return_bracket.has_value());
  REQUIRE(coarse.p_return_bracket.has_value());
  // finer brackets nest inside coarser ones
  CHECK(coarse.u_sum_bracket->lo <= fine.u_sum_bracket->lo);
  CHECK(fine.u_sum_bracket->hi <= coarse.u_sum_bracket->hi);
  CHECK(fine.p_return_bracket->contains(0.3405373));
  CHECK(fine.p_return_bracket->width() <= 0.04);
}

TEST_CASE("d=2 divergence evidence") {
  RecurrenceReport r = recurrence_bracket(2, 2000);
  CHECK(r.classification == Classification::kPersistent);
  REQUIRE(r.partial_sum.has_value());
  REQUIRE(r.log_slope.has_value());
  // partial sums grow like (1/pi) ln N
  CHECK(*r.log_slope == doctest::Approx(1.0 / M_PI).epsilon(0.02));
  CHECK(*r.partial_sum > recurrence_bracket(2, 200).partial_sum.value());
}

TEST_CASE("1D partial sums approach the exact series sum") {
  // p = 1/3: sum of u terms is exactly 3
  WalkParams w{Prob(Ratio(1, 3))};
  Ratio partial(0);
  for (unsigned long n = 0; n <= 200; ++n) partial += u2n(n, w);
  CHECK((Ratio(3) - partial).to_double() < 1e-3);
  CHECK(partial < Ratio(3));
}
