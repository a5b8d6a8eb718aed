#pragma once

#include <array>
#include <cstdint>

namespace walklab {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// Stateless: each 128-bit counter block maps to 128 output bits under a
// 64-bit key, so draws keyed by (seed, trial, step) are order-independent
// and reproducible across machines and thread counts.
namespace philox {

inline constexpr std::uint32_t kM0 = 0xD2511F53u;
inline constexpr std::uint32_t kM1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kW0 = 0x9E3779B9u;
inline constexpr std::uint32_t kW1 = 0xBB67AE85u;

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

inline Counter block(Counter c, Key k) {
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t{kM0} * c[0];
    const std::uint64_t p1 = std::uint64_t{kM1} * c[2];
    c = Counter{static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0],
                static_cast<std::uint32_t>(p1),
                static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1],
                static_cast<std::uint32_t>(p0)};
    k[0] += kW0;
    k[1] += kW1;
  }
  return c;
}

// One uniform 64-bit draw keyed by (seed, trial, step).
inline std::uint64_t draw64(std::uint64_t seed, std::uint64_t trial,
                            std::uint64_t step) {
  const Counter c{static_cast<std::uint32_t>(trial),
                  static_cast<std::uint32_t>(trial >> 32),
                  static_cast<std::uint32_t>(step),
                  static_cast<std::uint32_t>(step >> 32)};
  const Key k{static_cast<std::uint32_t>(seed),
              static_cast<std::uint32_t>(seed >> 32)};
  const Counter out = block(c, k);
  return (std::uint64_t{out[1]} << 32) | out[0];
}

}  // namespace philox
}  // namespace walklab
