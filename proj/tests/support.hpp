#pragma once

// Test-only generators and oracles. Nothing here calls into the code paths
// it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "tropbound/numerical_data.hpp"

namespace support {

using tropbound::Entry;
using tropbound::NumericalData;

/// Row with entries in [0, max] and at least one zero, not all zero.
inline std::vector<Entry> row_with_zero(std::mt19937_64 &rng, int cols,
                                        Entry max) {
  std::uniform_int_distribution<Entry> entry(0, max);
  std::uniform_int_distribution<int> col(0, cols - 1);
  while (true) {
    std::vector<Entry> row(cols);
    for (auto &e : row)
      e = entry(rng);
    row[col(rng)] = 0;
    for (Entry e : row)
      if (e != 0)
        return row;
  }
}

/// Balanced data with `tangent` nonzero rows (one zero each) and `free`
/// zero rows. The last tangent row is completed to equalise column sums.
inline NumericalData balanced(std::mt19937_64 &rng, int k, std::size_t tangent,
                              std::size_t free, Entry max) {
  while (true) {
    NumericalData d;
    d.k = k;
    std::vector<Entry> sums(k + 1, 0);
    for (std::size_t i = 0; i + 1 < tangent; ++i) {
      d.alpha.push_back(row_with_zero(rng, k + 1, max));
      for (int j = 0; j <= k; ++j)
        sums[j] += d.alpha.back()[j];
    }
    Entry target = 0;
    for (Entry s : sums)
      target = std::max(target, s);
    std::vector<Entry> last(k + 1);
    bool nonzero = false;
    for (int j = 0; j <= k; ++j) {
      last[j] = target - sums[j];
      nonzero = nonzero || last[j] != 0;
    }
    if (!nonzero)
      continue;
    d.alpha.push_back(last);
    for (std::size_t i = 0; i < free; ++i)
      d.alpha.emplace_back(k + 1, 0);
    return d;
  }
}

/// C(n, r) by Pascal's rule in 64-bit arithmetic (n <= 60).
inline std::int64_t pascal(int n, int r) {
  if (r < 0 || r > n)
    return 0;
  std::vector<std::vector<std::int64_t>> t(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j)
      t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[n][r];
}

inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

} // namespace support
