#pragma once

#include "rskdyn/greene.hpp"
#include "rskdyn/rsk.hpp"

namespace rskdyn {

/// Compares the RSK shape of p (and its conjugate) with the brute-force
/// k-increasing / k-decreasing maxima.
inline bool verify_shape_theorem(const Permutation& p,
                                 std::size_t bound = greene::kDefaultOracleBound) {
  const auto stats = greene::subsequence_stats(p.view(), bound);
  return greene::shape_matches_stats(rsk_forward(p).insertion.shape(), stats);
}

}  // namespace rskdyn
