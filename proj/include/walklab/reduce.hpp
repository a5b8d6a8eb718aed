#pragma once

#include <cstddef>
#include <span>

namespace walklab {

// Fixed-order pairwise summation. Deterministic for a given input order,
// no matter how the values were produced (serial or thread-parallel fill).
inline double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const size_t half = values.size() / 2;
  return pairwise_sum(values.subspan(0, half)) +
         pairwise_sum(values.subspan(half));
}

}  // namespace walklab
