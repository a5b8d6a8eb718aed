#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "walklab/numerics.hpp"

namespace walklab {

// Largest path length accepted by the exhaustive enumerators (2^26 paths).
inline constexpr int kMaxEnumLength = 26;

// A finite sequence of +/-1 steps with cached prefix sums S_0..S_n.
// Every predicate used by the counting theorems is a condition on the sums,
// so they are built eagerly.
struct Path {
  std::vector<int8_t> steps;
  std::vector<int32_t> sums;  // sums[0] = 0, sums[k] = sums[k-1] + steps[k-1]

  static Path from_steps(std::vector<int8_t> steps);
  // Parses strings of '+'/'-' characters, e.g. "++--+".
  static Path from_string(const std::string& text);

  int length() const { return static_cast<int>(steps.size()); }
  int32_t endpoint() const { return sums.back(); }

  // Steps in reversed order; the resulting sums satisfy S*_i = S_n - S_{n-i}.
  Path reversed() const;

  std::string to_string() const;

  bool operator==(const Path& o) const { return steps == o.steps; }
};

struct LatticePoint {
  long x;  // time, non-negative
  long y;  // height
};

using PathPredicate = std::function<bool(const Path&)>;

// All paths of length n satisfying the predicate, in lexicographic step
// order with -1 < +1. Throws TooLarge for n > kMaxEnumLength.
std::vector<Path> enumerate_paths(int n, const PathPredicate& predicate);

// Counting-only sweeps over the 2^n sample space. The parallel kernel
// partitions the index range across threads; the serial one is the
// reference implementation kept for testing and benchmarking.
std::uint64_t count_paths_if(int n, const PathPredicate& predicate);
std::uint64_t count_paths_if_serial(int n, const PathPredicate& predicate);

// N_{x,y}: C(x, (x+y)/2) when x+y is even and |y| <= x, else 0.
BigCount count_paths_to(long x, long y);

// Ballot theorem: (y/x) * N_{x,y} paths to (x,y) with S_i > 0 throughout.
BigCount count_always_positive(long x, long y);

// Reflection lemma pair: (paths a->b touching or crossing the axis,
// paths from the mirrored point a' to b). The components are equal.
std::pair<BigCount, BigCount> count_touching_reflection(LatticePoint a,
                                                        LatticePoint b);

enum class LoopMode { kNonnegative, kStrictlyPositive };

// Loops of length 2n: L_{2n} = C(2n,n)/(n+1) in nonnegative mode,
// L_{2n-2} in strictly-positive mode.
BigCount count_loops(long n, LoopMode mode);

}  // namespace walklab
