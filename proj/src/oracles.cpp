#include "walklab/oracles.hpp"

#include <functional>

namespace walklab::oracles {

BigCount binomial_pascal(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return BigCount(0);
  std::vector<BigCount> row{BigCount(1)};
  for (unsigned long i = 1; i <= n; ++i) {
    std::vector<BigCount> next(i + 1, BigCount(1));
    for (unsigned long j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<size_t>(k)];
}

BigCount catalan_recurrence(unsigned long n) {
  std::vector<BigCount> c{BigCount(1)};
  for (unsigned long m = 1; m <= n; ++m) {
    BigCount sum(0);
    for (unsigned long i = 0; i < m; ++i) sum += c[i] * c[m - 1 - i];
    c.push_back(sum);
  }
  return c[n];
}

namespace {

// Sweeps all 2^n sign sequences, feeding prefix sums to the visitor.
std::uint64_t sweep(int n, const std::function<bool(const std::vector<long>&)>& accept) {
  std::vector<long> sums(static_cast<size_t>(n) + 1, 0);
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < n; ++i)
      sums[static_cast<size_t>(i) + 1] =
          sums[static_cast<size_t>(i)] + (((mask >> (n - 1 - i)) & 1) ? 1 : -1);
    if (accept(sums)) ++count;
  }
  return count;
}

}  // namespace

std::uint64_t count_endpoint(int n, long y) {
  return sweep(n, [&](const std::vector<long>& s) { return s.back() == y; });
}

std::uint64_t count_always_positive_enum(int n, long y) {
  return sweep(n, [&](const std::vector<long>& s) {
    if (s.back() != y) return false;
    for (size_t i = 1; i < s.size(); ++i)
      if (s[i] <= 0) return false;
    return true;
  });
}

std::uint64_t count_nonzero_enum(int n) {
  return sweep(n, [&](const std::vector<long>& s) {
    for (size_t i = 1; i < s.size(); ++i)
      if (s[i] == 0) return false;
    return true;
  });
}

std::uint64_t count_nonnegative_enum(int n) {
  return sweep(n, [&](const std::vector<long>& s) {
    for (size_t i = 1; i < s.size(); ++i)
      if (s[i] < 0) return false;
    return true;
  });
}

std::uint64_t count_first_return_enum(int n) {
  return sweep(n, [&](const std::vector<long>& s) {
    if (s.back() != 0) return false;
    for (size_t i = 1; i + 1 < s.size(); ++i)
      if (s[i] == 0) return false;
    return true;
  });
}

std::uint64_t count_first_passage_minus1_enum(int n) {
  return sweep(n, [&](const std::vector<long>& s) {
    if (s.back() >= 0) return false;
    for (size_t i = 1; i + 1 < s.size(); ++i)
      if (s[i] < 0) return false;
    return true;
  });
}

std::uint64_t count_loops_enum(int n, bool strictly_positive) {
  return sweep(n, [&](const std::vector<long>& s) {
    if (s.back() != 0) return false;
    for (size_t i = 1; i + 1 < s.size(); ++i) {
      if (strictly_positive ? s[i] <= 0 : s[i] < 0) return false;
    }
    return true;
  });
}

std::uint64_t count_touching_enum(int n, long a_y, long b_y) {
  return sweep(n, [&](const std::vector<long>& s) {
    if (a_y + s.back() != b_y) return false;
    for (size_t i = 0; i < s.size(); ++i)
      if (a_y + s[i] <= 0) return true;
    return false;
  });
}

std::vector<std::uint64_t> lead_time_counts_enum(int half_n) {
  const int n = 2 * half_n;
  std::vector<std::uint64_t> counts(static_cast<size_t>(half_n) + 1, 0);
  sweep(n, [&](const std::vector<long>& s) {
    int positive_sides = 0;
    for (size_t i = 1; i < s.size(); ++i)
      if (s[i - 1] > 0 || s[i] > 0) ++positive_sides;
    counts[static_cast<size_t>(positive_sides / 2)]++;
    return false;
  });
  return counts;
}

std::uint64_t count_returns_enum(int n, unsigned long r) {
  return sweep(n, [&](const std::vector<long>& s) {
    unsigned long returns = 0;
    for (size_t i = 1; i < s.size(); ++i)
      if (s[i] == 0) ++returns;
    return returns == r;
  });
}

namespace {

// Counts length-len closed walks on Z^d by depth-first sweep over d*2
// directions per step.
std::uint64_t count_lattice_loops(int len, int dims) {
  std::vector<long> pos(static_cast<size_t>(dims), 0);
  std::uint64_t count = 0;
  std::function<void(int)> walk = [&](int remaining) {
    if (remaining == 0) {
      for (long c : pos)
        if (c != 0) return;
      ++count;
      return;
    }
    for (int axis = 0; axis < dims; ++axis) {
      for (int dir : {1, -1}) {
        pos[static_cast<size_t>(axis)] += dir;
        walk(remaining - 1);
        pos[static_cast<size_t>(axis)] -= dir;
      }
    }
  };
  walk(len);
  return count;
}

}  // namespace

std::uint64_t count_loops_2d_enum(int len) { return count_lattice_loops(len, 2); }
std::uint64_t count_loops_3d_enum(int len) { return count_lattice_loops(len, 3); }

RuinResult ruin_first_step_solver(const RuinSpec& spec) {
  spec.validate();
  const long lo = -spec.B, hi = spec.A;
  const long interior = hi - lo - 1;
  const Ratio p = spec.p.value();
  const Ratio q = spec.p.complement();

  // Solves M x = rhs for a dense rational system by Gaussian elimination
  // with partial structure ignored (sizes here are tiny).
  auto solve = [](std::vector<std::vector<Ratio>> m, std::vector<Ratio> rhs) {
    const size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
      size_t pivot = col;
      while (pivot < n && m[pivot][col] == Ratio(0)) ++pivot;
      std::swap(m[pivot], m[col]);
      std::swap(rhs[pivot], rhs[col]);
      for (size_t row = 0; row < n; ++row) {
        if (row == col || m[row][col] == Ratio(0)) continue;
        Ratio f = m[row][col] / m[col][col];
        for (size_t c2 = col; c2 < n; ++c2) m[row][c2] -= f * m[col][c2];
        rhs[row] -= f * rhs[col];
      }
    }
    std::vector<Ratio> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
  };

  // win(i) = p win(i+1) + q win(i-1); win(A) = 1, win(-B) = 0
  // dur(i) = 1 + p dur(i+1) + q dur(i-1); dur at barriers = 0
  std::vector<std::vector<Ratio>> m(static_cast<size_t>(interior),
                                    std::vector<Ratio>(static_cast<size_t>(interior), Ratio(0)));
  std::vector<Ratio> rhs_win(static_cast<size_t>(interior), Ratio(0));
  std::vector<Ratio> rhs_dur(static_cast<size_t>(interior), Ratio(1));
  for (long i = 0; i < interior; ++i) {
    m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Ratio(1);
    if (i + 1 < interior) m[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = -p;
    else rhs_win[static_cast<size_t>(i)] += p;  // neighbor is the A barrier
    if (i - 1 >= 0) m[static_cast<size_t>(i)][static_cast<size_t>(i - 1)] = -q;
  }
  std::vector<Ratio> win = solve(m, rhs_win);
  std::vector<Ratio> dur = solve(m, rhs_dur);

  const size_t start_idx = static_cast<size_t>(spec.start - lo - 1);
  if (spec.start == hi) return {Ratio(1), Ratio(0), Ratio(0)};
  if (spec.start == lo) return {Ratio(0), Ratio(1), Ratio(0)};
  return {win[start_idx], Ratio(1) - win[start_idx], dur[start_idx]};
}

}  // namespace walklab::oracles
