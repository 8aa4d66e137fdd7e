#pragma once

// Brute-force Greene statistics. Shares no code with rsk.hpp.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rskdyn/errors.hpp"
#include "rskdyn/partition.hpp"
#include "rskdyn/permutation.hpp"

namespace rskdyn::greene {

inline constexpr std::size_t kDefaultOracleBound = 10;

/// Patience sorting: length of the longest strictly increasing subsequence.
inline std::size_t longest_increasing(std::span<const int> w) {
  std::vector<int> piles;
  for (int x : w) {
    auto it = std::lower_bound(piles.begin(), piles.end(), x);
    if (it == piles.end())
      piles.push_back(x);
    else
      *it = x;
  }
  return piles.size();
}

inline std::size_t longest_decreasing(std::span<const int> w) {
  std::vector<int> negated(w.size());
  std::transform(w.begin(), w.end(), negated.begin(), [](int x) { return -x; });
  return longest_increasing(negated);
}

/// Decomposable into k increasing subsequences, i.e. no decreasing
/// subsequence of length k + 1.
inline bool is_k_increasing(std::span<const int> w, std::size_t k) {
  return longest_decreasing(w) <= k;
}

inline bool is_k_decreasing(std::span<const int> w, std::size_t k) {
  return longest_increasing(w) <= k;
}

/// I[k] and D[k] for k = 1..n, stored 1-indexed (index 0 is unused and 0).
struct SubsequenceStats {
  std::vector<std::size_t> increasing;
  std::vector<std::size_t> decreasing;
};

/// Exhaustive search over all 2^n position subsets.
inline SubsequenceStats subsequence_stats(std::span<const int> w,
                                          std::size_t bound = kDefaultOracleBound) {
  const std::size_t n = w.size();
  if (n > bound) throw BoundExceeded("greene oracle", n, bound);
  SubsequenceStats stats{std::vector<std::size_t>(n + 1, 0),
                         std::vector<std::size_t>(n + 1, 0)};
  std::vector<int> sub;
  sub.reserve(n);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    sub.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(w[i]);
    const std::size_t len = sub.size();
    // Smallest k for which this subset qualifies; it also qualifies for all
    // larger k.
    const std::size_t k_inc = longest_decreasing(sub);
    const std::size_t k_dec = longest_increasing(sub);
    for (std::size_t k = k_inc; k <= n; ++k)
      stats.increasing[k] = std::max(stats.increasing[k], len);
    for (std::size_t k = k_dec; k <= n; ++k)
      stats.decreasing[k] = std::max(stats.decreasing[k], len);
  }
  return stats;
}

inline std::size_t max_k_increasing(std::span<const int> w, std::size_t k,
                                    std::size_t bound = kDefaultOracleBound) {
  if (w.empty() || k == 0) return 0;
  const auto stats = subsequence_stats(w, bound);
  return stats.increasing[std::min(k, w.size())];
}

inline std::size_t max_k_decreasing(std::span<const int> w, std::size_t k,
                                    std::size_t bound = kDefaultOracleBound) {
  if (w.empty() || k == 0) return 0;
  const auto stats = subsequence_stats(w, bound);
  return stats.decreasing[std::min(k, w.size())];
}

/// Prefix sums of the shape equal I_j(p) and prefix sums of its conjugate
/// equal D_j(p), for every j. The shape is supplied by the caller (normally
/// the RSK shape of p).
inline bool shape_matches_stats(const Partition& shape, const SubsequenceStats& stats) {
  const auto conj = conjugate_partition(shape);
  const std::size_t n = shape.size();
  std::size_t sum = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j <= shape.length()) sum += static_cast<std::size_t>(shape[j - 1]);
    if (stats.increasing[j] != sum) return false;
  }
  sum = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j <= conj.length()) sum += static_cast<std::size_t>(conj[j - 1]);
    if (stats.decreasing[j] != sum) return false;
  }
  return true;
}

}  // namespace rskdyn::greene
