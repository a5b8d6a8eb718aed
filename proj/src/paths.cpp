#include "walklab/paths.hpp"

#include <stdexcept>

namespace walklab {

namespace {

// Bit i of mask (counted from the most significant of n bits) encodes step
// i+1: set = +1, clear = -1. Increasing mask is lexicographic with -1 < +1.
Path path_from_mask(int n, std::uint64_t mask) {
  std::vector<int8_t> steps(n);
  for (int i = 0; i < n; ++i)
    steps[i] = (mask >> (n - 1 - i)) & 1 ? int8_t{1} : int8_t{-1};
  return Path::from_steps(std::move(steps));
}

void check_enum_length(int n) {
  if (n < 1) throw UsageError("enumeration: path length must be positive");
  if (n > kMaxEnumLength)
    throw TooLarge("enumeration: path length " + std::to_string(n) +
                   " exceeds the cap of " + std::to_string(kMaxEnumLength));
}

}  // namespace

Path Path::from_steps(std::vector<int8_t> steps) {
  Path p;
  p.sums.resize(steps.size() + 1);
  p.sums[0] = 0;
  for (size_t k = 0; k < steps.size(); ++k) {
    if (steps[k] != 1 && steps[k] != -1)
      throw UsageError("Path: steps must be +1 or -1");
    p.sums[k + 1] = p.sums[k] + steps[k];
  }
  p.steps = std::move(steps);
  return p;
}

Path Path::from_string(const std::string& text) {
  std::vector<int8_t> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == '+')
      steps.push_back(1);
    else if (c == '-')
      steps.push_back(-1);
    else
      throw UsageError(std::string("Path: unexpected character '") + c + "'");
  }
  return from_steps(std::move(steps));
}

Path Path::reversed() const {
  std::vector<int8_t> rev(steps.rbegin(), steps.rend());
  return from_steps(std::move(rev));
}

std::string Path::to_string() const {
  std::string s;
  s.reserve(steps.size());
  for (int8_t x : steps) s.push_back(x > 0 ? '+' : '-');
  return s;
}

std::vector<Path> enumerate_paths(int n, const PathPredicate& predicate) {
  check_enum_length(n);
  std::vector<Path> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Path p = path_from_mask(n, mask);
    if (!predicate || predicate(p)) out.push_back(std::move(p));
  }
  return out;
}

std::uint64_t count_paths_if_serial(int n, const PathPredicate& predicate) {
  check_enum_length(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (!predicate || predicate(path_from_mask(n, mask))) ++count;
  return count;
}

std::uint64_t count_paths_if(int n, const PathPredicate& predicate) {
  check_enum_length(n);
  const std::int64_t total = std::int64_t{1} << n;
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t mask = 0; mask < total; ++mask)
    if (!predicate ||
        predicate(path_from_mask(n, static_cast<std::uint64_t>(mask))))
      ++count;
  return count;
}

BigCount count_paths_to(long x, long y) {
  if (x < 0) return BigCount(0);
  if ((x + y) % 2 != 0 || y > x || y < -x) return BigCount(0);
  return binomial(static_cast<unsigned long>(x), (x + y) / 2);
}

BigCount count_always_positive(long x, long y) {
  if (x <= 0 || y <= 0) throw UsageError("count_always_positive: x, y > 0 required");
  BigCount total = count_paths_to(x, y);
  if (total == 0) return BigCount(0);
  // (y/x) * N_{x,y} is integral whenever N_{x,y} > 0
  BigCount r = total * y;
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(x));
  return r;
}

std::pair<BigCount, BigCount> count_touching_reflection(LatticePoint a,
                                                        LatticePoint b) {
  if (a.y <= 0 || b.y <= 0 || a.x >= b.x)
    throw UsageError("count_touching_reflection: a.y, b.y > 0 and a.x < b.x required");
  const long m = b.x - a.x;
  const long dy = b.y - a.y;
  if ((m + dy) % 2 != 0)
    throw Unreachable("count_touching_reflection: endpoint parity mismatch");

  // First component: direct barrier DP over heights, counting paths from
  // a to b whose minimum height is <= 0. Deliberately avoids the reflection
  // identity so the pair is a genuine two-route check.
  // state: height offset from the axis, tracked only while still positive.
  const long span = m + a.y + b.y;
  std::vector<BigCount> strictly_above(static_cast<size_t>(span) + 2, BigCount(0));
  // strictly_above[h] = number of partial paths currently at height h > 0
  // that never touched the axis.
  strictly_above[static_cast<size_t>(a.y)] = 1;
  for (long step = 0; step < m; ++step) {
    std::vector<BigCount> next(strictly_above.size(), BigCount(0));
    for (size_t h = 1; h + 1 < strictly_above.size(); ++h) {
      if (strictly_above[h] == 0) continue;
      next[h + 1] += strictly_above[h];
      if (h >= 2) next[h - 1] += strictly_above[h];
      // a move to h == 0 touches the axis and leaves the "never touched" set
    }
    strictly_above.swap(next);
  }
  BigCount never_touching = strictly_above[static_cast<size_t>(b.y)];
  BigCount touching = count_paths_to(m, dy) - never_touching;

  // Second component: all paths from the mirrored point a' = (a.x, -a.y).
  BigCount mirrored = count_paths_to(m, b.y + a.y);
  return {touching, mirrored};
}

BigCount count_loops(long n, LoopMode mode) {
  if (n < 1) throw UsageError("count_loops: n >= 1 required");
  auto catalan = [](long m) {
    BigCount c = binomial(static_cast<unsigned long>(2 * m), m);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(),
                    static_cast<unsigned long>(m + 1));
    return c;
  };
  return mode == LoopMode::kNonnegative ? catalan(n) : catalan(n - 1);
}

}  // namespace walklab
