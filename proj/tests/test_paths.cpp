#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "walklab/oracles.hpp"
#include "walklab/paths.hpp"

using namespace walklab;

TEST_CASE("path construction and prefix sums") {
  Path p = Path::from_string("++-+-");
  CHECK(p.length() == 5);
  CHECK(p.sums == std::vector<int32_t>{0, 1, 2, 1, 2, 1});
  CHECK(p.endpoint() == 1);
  CHECK(p.to_string() == "++-+-");
  CHECK_THROWS_AS(Path::from_string("+x-"), UsageError);
}

TEST_CASE("counting paths to an endpoint") {
  CHECK(count_paths_to(5, 1) == 10);   // C(5,3)
  CHECK(count_paths_to(5, 2) == 0);    // parity
  CHECK(count_paths_to(4, -2) == 4);   // C(4,1)
  CHECK(count_paths_to(3, 5) == 0);    // unreachable
  CHECK(count_paths_to(0, 0) == 1);
  for (int n = 1; n <= 12; ++n)
    for (long y = -n; y <= n; ++y)
      CHECK(count_paths_to(n, y) ==
            BigCount(oracles::count_endpoint(n, y)));
}

TEST_CASE("always-positive paths: the two admissible (5,1) examples") {
  CHECK(count_always_positive(5, 1) == 2);
  auto paths = enumerate_paths(5, [](const Path& p) {
    if (p.endpoint() != 1) return false;
    for (size_t i = 1; i < p.sums.size(); ++i)
      if (p.sums[i] <= 0) return false;
    return true;
  });
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].sums == std::vector<int32_t>{0, 1, 2, 1, 2, 1});
  CHECK(paths[1].sums == std::vector<int32_t>{0, 1, 2, 3, 2, 1});
}

TEST_CASE("always-positive counts match enumeration") {
  for (int n = 1; n <= 12; ++n)
    for (long y = 1; y <= n; ++y)
      CHECK(count_always_positive(n, y) ==
            BigCount(oracles::count_always_positive_enum(n, y)));
}

TEST_CASE("reversal is an involution preserving the endpoint") {
  for (int n = 1; n <= 12; ++n) {
    auto all = enumerate_paths(n, [](const Path&) { return true; });
    CHECK(all.size() == (size_t{1} << n));
    for (const Path& p : all) {
      Path r = p.reversed();
      CHECK(r.endpoint() == p.endpoint());
      CHECK(r.reversed() == p);
      // duality: S*_i = S_n - S_{n-i}
      for (int i = 0; i <= n; ++i)
        CHECK(r.sums[i] == p.sums[n] - p.sums[n - i]);
    }
    if (n > 6) break;  // involution spot checks past n=6 get slow in a loop
  }
  // full involution sweep at n = 12 without the inner sums check
  for (const Path& p : enumerate_paths(12, [](const Path&) { return true; }))
    CHECK(p.reversed().reversed() == p);
}

TEST_CASE("enumeration order is lexicographic with - before +") {
  auto all = enumerate_paths(3, [](const Path&) { return true; });
  REQUIRE(all.size() == 8);
  CHECK(all.front().to_string() == "---");
  CHECK(all.back().to_string() == "+++");
  CHECK(all[1].to_string() == "--+");
  std::set<std::string> unique;
  for (const Path& p : all) unique.insert(p.to_string());
  CHECK(unique.size() == 8);
}

TEST_CASE("enumeration size cap") {
  CHECK_THROWS_AS(enumerate_paths(kMaxEnumLength + 1, [](const Path&) { return true; }),
                  TooLarge);
  CHECK_THROWS_AS(count_paths_if(kMaxEnumLength + 1, [](const Path&) { return true; }),
                  TooLarge);
}

TEST_CASE("parallel and serial sweep kernels agree") {
  auto pred = [](const Path& p) { return p.endpoint() == 2; };
  for (int n : {4, 10, 16})
    CHECK(count_paths_if(n, pred) == count_paths_if_serial(n, pred));
}

TEST_CASE("reflection pair: both routes agree with each other and enumeration") {
  for (long ay = 1; ay <= 3; ++ay)
    for (long by = 1; by <= 3; ++by)
      for (long m = 2; m <= 8; ++m) {
        if ((m + by - ay) % 2 != 0) continue;
        auto [touching, mirrored] = count_touching_reflection({0, ay}, {m, by});
        CHECK(touching == mirrored);
        CHECK(touching ==
              BigCount(oracles::count_touching_enum(static_cast<int>(m), ay, by)));
      }
  CHECK_THROWS_AS(count_touching_reflection({0, 1}, {3, 1}), Unreachable);
}

TEST_CASE("loop counts are Catalan numbers") {
  for (long n = 1; n <= 10; ++n) {
    CHECK(count_loops(n, LoopMode::kNonnegative) ==
          oracles::catalan_recurrence(static_cast<unsigned long>(n)));
    if (n >= 2)
      CHECK(count_loops(n, LoopMode::kStrictlyPositive) ==
            count_loops(n - 1, LoopMode::kNonnegative));
  }
  for (int n = 1; n <= 6; ++n) {
    CHECK(count_loops(n, LoopMode::kNonnegative) ==
          BigCount(oracles::count_loops_enum(2 * n, false)));
    CHECK(count_loops(n, LoopMode::kStrictlyPositive) ==
          BigCount(oracles::count_loops_enum(2 * n, true)));
  }
}
