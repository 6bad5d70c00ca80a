#pragma once

// Brute-force references used only by the tests. They share no code path
// with the library: tableaux are filled row by row, and n_lambda comes from
// the traceless weight norms rather than from either library route.

#include "schern/numeric.hpp"
#include "schern/partition.hpp"
#include "schern/weights.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using schern::BigInt;
using schern::Partition;
using schern::Rational;

// Calls visit(content) for every SSYT, filling cells in row-major order.
inline void each_tableau(int n, const Partition& shape,
                         const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<std::vector<int>> grid;
  for (int part : shape.parts()) grid.emplace_back(static_cast<std::size_t>(part), 0);
  std::vector<int> content(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> fill = [&](int row, int col) {
    if (row == shape.length()) {
      visit(content);
      return;
    }
    if (col == shape[row]) {
      fill(row + 1, 0);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (col > 0 && v < grid[row][col - 1]) continue;
      if (row > 0 && v <= grid[row - 1][col]) continue;
      grid[row][col] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      fill(row, col + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
    grid[row][col] = 0;
  };
  fill(0, 0);
}

inline std::uint64_t count_tableaux(int n, const Partition& shape) {
  std::uint64_t count = 0;
  each_tableau(n, shape, [&](const std::vector<int>&) { ++count; });
  return count;
}

inline std::vector<std::vector<int>> sorted_contents(int n, const Partition& shape) {
  std::vector<std::vector<int>> all;
  each_tableau(n, shape, [&](const std::vector<int>& c) { all.push_back(c); });
  std::sort(all.begin(), all.end());
  return all;
}

// Index of the representation as sum_T |mu_T - (|lambda|/n) 1|^2 / (n - 1):
// the trace form over the weight multiset, normalized so gamma_n gives 1.
inline BigInt n_lambda(int n, const Partition& shape) {
  Rational shift(shape.size(), n);
  Rational total = 0;
  each_tableau(n, shape, [&](const std::vector<int>& c) {
    for (int m : c) {
      Rational t = Rational(m) - shift;
      total += t * t;
    }
  });
  Rational value = total / (n - 1);
  if (denominator(value) != 1) throw std::logic_error("oracle n_lambda not integral");
  return numerator(value);
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Is w the sum of two nonzero monoid elements? Exhaustive over sub-weights.
inline bool splits(const schern::Weight& w, schern::GroupSpec spec) {
  auto coeffs = w.coeffs();
  std::vector<int> sub(coeffs.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < sub.size() && sub[i] == coeffs[i]) sub[i++] = 0;
    if (i == sub.size()) return false;
    ++sub[i];
    schern::Weight b(sub);
    if (b == w) continue;
    if (b.weighted_sum() % spec.d == 0) return true;
  }
}

// Random partition with |lambda| <= max_size and length <= max_length.
inline Partition random_partition(std::mt19937_64& rng, int max_size, int max_length) {
  std::uniform_int_distribution<int> size_dist(0, max_size);
  while (true) {
    auto all = schern::partitions_of(size_dist(rng));
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    Partition p = all[pick(rng)];
    if (p.length() <= max_length) return p;
  }
}

}  // namespace oracle
