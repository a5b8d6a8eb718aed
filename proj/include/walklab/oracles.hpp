#pragma once

#include <cstdint>
#include <vector>

#include "walklab/numerics.hpp"
#include "walklab/paths.hpp"
#include "walklab/ruin.hpp"

// Independent brute-force and recurrence routes used to cross-check the
// closed forms. Nothing here shares a derivation with the main code path:
// counts come from exhaustive sweeps of the 2^n sample space, binomials
// from the Pascal triangle, Catalan numbers from their convolution
// recurrence, and ruin quantities from a first-step linear system.
namespace walklab::oracles {

// Pascal-triangle binomial, additive only.
BigCount binomial_pascal(unsigned long n, long k);

// Catalan numbers via C_n = sum C_i C_{n-1-i}.
BigCount catalan_recurrence(unsigned long n);

// Exhaustive counts over all 2^n paths of length n.
std::uint64_t count_endpoint(int n, long y);
std::uint64_t count_always_positive_enum(int n, long y);
std::uint64_t count_nonzero_enum(int n);          // S_i != 0 for all i
std::uint64_t count_nonnegative_enum(int n);      // S_i >= 0 for all i
std::uint64_t count_first_return_enum(int n);     // S_i != 0 before, S_n = 0
std::uint64_t count_first_passage_minus1_enum(int n);  // S_i >= 0 before, S_n < 0
std::uint64_t count_loops_enum(int n, bool strictly_positive);
// paths from height a_y to height b_y in n steps that touch or cross the axis
std::uint64_t count_touching_enum(int n, long a_y, long b_y);
// lead-time counts over k = 0..n/2 using the side-occupancy rule
std::vector<std::uint64_t> lead_time_counts_enum(int half_n);
// exactly r returns to zero within n steps
std::uint64_t count_returns_enum(int n, unsigned long r);

// 2D/3D lattice loop counts by direct enumeration (4^len resp. 6^len walks).
std::uint64_t count_loops_2d_enum(int len);
std::uint64_t count_loops_3d_enum(int len);

// First-step analysis: exact rational Gaussian elimination on the
// absorption equations. An independent derivation of the ruin closed
// forms, not used by the main code path.
RuinResult ruin_first_step_solver(const RuinSpec& spec);

}  // namespace walklab::oracles
