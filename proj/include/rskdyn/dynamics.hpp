#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "rskdyn/errors.hpp"
#include "rskdyn/partition.hpp"
#include "rskdyn/permutation.hpp"
#include "rskdyn/rsk.hpp"
#include "rskdyn/tableau.hpp"

namespace rskdyn {

/// Which reading word of the recording tableau feeds the next iteration.
enum class MapKind {
  F,  // row reading word
  C,  // column reading word
  R,  // reversed row reading word
};

inline constexpr MapKind kAllMaps[] = {MapKind::F, MapKind::C, MapKind::R};

inline std::string_view to_string(MapKind map) {
  switch (map) {
    case MapKind::F: return "f";
    case MapKind::C: return "c";
    case MapKind::R: return "r";
  }
  return "?";
}

inline MapKind parse_map_kind(std::string_view text) {
  if (text == "f" || text == "F") return MapKind::F;
  if (text == "c" || text == "C") return MapKind::C;
  if (text == "r" || text == "R") return MapKind::R;
  throw ParseError("unknown map '" + std::string(text) + "' (expected f, c or r)");
}

inline Permutation reading_word(MapKind map, const Tableau& t) {
  switch (map) {
    case MapKind::F: return row_reading_word(t);
    case MapKind::C: return column_reading_word(t);
    case MapKind::R: return reversed_reading_word(t);
  }
  throw UnsupportedMap("unknown map kind");
}

/// One application of the map: the chosen reading word of the recording
/// tableau of p.
inline Permutation step(MapKind map, const Permutation& p) {
  return reading_word(map, rsk_forward(p).recording);
}

/// Recording tableau of the row reading word of any SYT of shape lambda.
/// Layered fill: the first lambda_k columns get their bottommost free cell
/// labelled, then the first lambda_{k-1} columns, and so on up to lambda_1.
inline Tableau t_lambda(const Partition& lambda) {
  Tableau::Rows rows(lambda.length());
  for (std::size_t r = 0; r < rows.size(); ++r)
    rows[r].resize(static_cast<std::size_t>(lambda[r]));
  std::vector<std::size_t> filled(static_cast<std::size_t>(lambda[0]), 0);
  int next = 1;
  for (std::size_t i = lambda.length(); i-- > 0;) {
    for (std::size_t c = 0; c < static_cast<std::size_t>(lambda[i]); ++c)
      rows[filled[c]++][c] = next++;
  }
  return Tableau(std::move(rows));
}

/// Same tableau by "gravity": hang the diagram from the ceiling, number the
/// cells row by row bottom to top, then let the columns drop back down.
inline Tableau t_lambda_by_gravity(const Partition& lambda) {
  const std::size_t height = lambda.length();
  const auto cols = conjugate_partition(lambda);
  const std::size_t width = cols.length();
  // grid[r][c] != 0 for cells of the hanging diagram; row 0 is the bottom.
  std::vector<std::vector<int>> grid(height, std::vector<int>(width, 0));
  int next = 1;
  for (std::size_t r = 0; r < height; ++r)
    for (std::size_t c = 0; c < width; ++c)
      if (r >= height - static_cast<std::size_t>(cols[c])) grid[r][c] = next++;
  Tableau::Rows rows(height);
  for (std::size_t c = 0; c < width; ++c) {
    std::size_t dest = 0;
    for (std::size_t r = 0; r < height; ++r)
      if (grid[r][c]) rows[dest++].push_back(grid[r][c]);
  }
  return Tableau(std::move(rows));
}

/// Columns filled bottom to top with consecutive integers, left to right.
inline Tableau q_lambda(const Partition& lambda) {
  const auto cols = conjugate_partition(lambda);
  Tableau::Rows rows(lambda.length());
  int next = 1;
  for (std::size_t c = 0; c < cols.length(); ++c)
    for (std::size_t r = 0; r < static_cast<std::size_t>(cols[c]); ++r)
      rows[r].push_back(next++);
  return Tableau(std::move(rows));
}

/// The unique fixed point of shape lambda for F (reading word of T_lambda)
/// or C (column word of Q_lambda). R has no per-shape fixed point in
/// general; see r_cycle_for_shape.
inline Permutation fixed_point_for_shape(MapKind map, const Partition& lambda) {
  switch (map) {
    case MapKind::F: return row_reading_word(t_lambda(lambda));
    case MapKind::C: return column_reading_word(q_lambda(lambda));
    case MapKind::R: break;
  }
  throw UnsupportedMap("fixed_point_for_shape supports maps f and c only");
}

/// Terminal cycle of r for shape lambda. The first element has RSK pair
/// (transpose(Q_lambda'), Q_lambda), the second (transpose(Q_lambda),
/// Q_lambda'). The two coincide exactly when lambda is self-conjugate.
inline std::vector<Permutation> r_cycle_for_shape(const Partition& lambda) {
  const auto conj = conjugate_partition(lambda);
  const auto q = q_lambda(lambda);
  const auto q_conj = q_lambda(conj);
  std::vector<Permutation> cycle;
  cycle.push_back(rsk_inverse({transpose_tableau(q_conj), q}));
  if (!(conj == lambda))
    cycle.push_back(rsk_inverse({transpose_tableau(q), q_conj}));
  return cycle;
}

inline constexpr std::size_t kDefaultOrbitSteps = 16;

struct OrbitReport {
  std::vector<Permutation> tail;
  std::vector<Permutation> cycle;
  // RSK shape of every visited permutation, tail first then cycle.
  std::vector<Partition> shapes;
};

/// Iterates the map from p until a permutation repeats and splits the
/// trajectory into tail and minimal cycle.
inline OrbitReport orbit(MapKind map, const Permutation& p,
                         std::size_t max_steps = kDefaultOrbitSteps) {
  std::vector<Permutation> seen{p};
  for (std::size_t i = 0; i < max_steps; ++i) {
    auto next = step(map, seen.back());
    const auto hit = std::find(seen.begin(), seen.end(), next);
    if (hit != seen.end()) {
      OrbitReport report;
      report.tail.assign(seen.begin(), hit);
      report.cycle.assign(hit, seen.end());
      for (const auto& q : seen) report.shapes.push_back(rsk_forward(q).insertion.shape());
      return report;
    }
    seen.push_back(std::move(next));
  }
  throw NoCycleWithinBound("orbit of " + to_string(p) + " under map " +
                           std::string(to_string(map)) + " did not close within " +
                           std::to_string(max_steps) + " steps");
}

inline constexpr std::size_t kDefaultGraphBound = 8;

/// Functional graph of a map on S_n. Nodes are indexed by lexicographic rank.
struct DynamicsGraph {
  std::size_t n = 0;
  MapKind map = MapKind::F;
  std::vector<Permutation> nodes;
  std::vector<std::uint64_t> successor;
  std::vector<Partition> shapes;

  std::size_t node_count() const { return nodes.size(); }
};

/// workers == 0 picks std::thread::hardware_concurrency(). Output does not
/// depend on the worker count.
inline DynamicsGraph build_graph(MapKind map, std::size_t n, std::size_t workers = 0,
                                 std::size_t bound = kDefaultGraphBound) {
  if (n == 0) throw InvalidValue("build_graph requires n >= 1");
  if (n > bound) throw BoundExceeded("build_graph", n, bound);
  const std::uint64_t count = factorial(n);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<std::size_t>(std::min<std::uint64_t>(workers, count));

  std::vector<std::optional<Permutation>> nodes(count);
  std::vector<std::optional<Partition>> shapes(count);
  std::vector<std::uint64_t> succ(count);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      auto p = unrank(n, rank);
      const auto pair = rsk_forward(p);
      succ[rank] = rank_of(reading_word(map, pair.recording));
      shapes[rank] = pair.insertion.shape();
      nodes[rank] = std::move(p);
    }
  };
  if (workers == 1) {
    work(0, count);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (std::uint64_t begin = 0; begin < count; begin += chunk)
      pool.emplace_back(work, begin, std::min(count, begin + chunk));
  }

  DynamicsGraph g;
  g.n = n;
  g.map = map;
  g.successor = std::move(succ);
  g.nodes.reserve(count);
  g.shapes.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    g.nodes.push_back(std::move(*nodes[i]));
    g.shapes.push_back(std::move(*shapes[i]));
  }
  return g;
}

struct Census {
  std::size_t fixed_points = 0;
  std::size_t two_cycles = 0;
  std::size_t longer_cycles = 0;  // cycles of length >= 3
  std::size_t max_tail = 0;

  bool operator==(const Census&) const = default;
};

/// Distance from each node to the cycle it eventually enters (0 for nodes
/// on a cycle).
inline std::vector<std::size_t> tail_lengths(const DynamicsGraph& g) {
  const auto count = g.node_count();
  constexpr std::size_t kUnknown = static_cast<std::size_t>(-1);
  std::vector<std::size_t> tail(count, kUnknown);
  std::vector<std::uint8_t> state(count, 0);  // 0 new, 1 on current walk, 2 done
  std::vector<std::uint64_t> path;
  for (std::uint64_t start = 0; start < count; ++start) {
    if (state[start]) continue;
    path.clear();
    std::uint64_t u = start;
    while (state[u] == 0) {
      state[u] = 1;
      path.push_back(u);
      u = g.successor[u];
    }
    std::size_t base;
    auto end = path.end();
    if (state[u] == 1) {
      // u closes a new cycle: everything from u onward in path is cyclic.
      auto it = std::find(path.begin(), path.end(), u);
      for (auto c = it; c != path.end(); ++c) tail[*c] = 0;
      end = it;
      base = 0;
    } else {
      base = tail[u];
    }
    for (auto it = end; it != path.begin();) {
      --it;
      tail[*it] = ++base;
    }
    for (auto v : path) state[v] = 2;
  }
  return tail;
}

inline Census census(const DynamicsGraph& g) {
  Census c;
  const auto count = g.node_count();
  const auto tails = tail_lengths(g);
  std::vector<bool> counted(count, false);
  for (std::size_t v = 0; v < count; ++v) {
    c.max_tail = std::max(c.max_tail, tails[v]);
    if (tails[v] != 0 || counted[v]) continue;
    std::size_t len = 0;
    std::uint64_t u = v;
    do {
      counted[u] = true;
      u = g.successor[u];
      ++len;
    } while (u != v);
    if (len == 1)
      ++c.fixed_points;
    else if (len == 2)
      ++c.two_cycles;
    else
      ++c.longer_cycles;
  }
  return c;
}

inline Census census(MapKind map, std::size_t n, std::size_t workers = 0) {
  return census(build_graph(map, n, workers));
}

/// Counts predicted by the theory: p(n) fixed points for f and c; for r,
/// p_do(n) fixed points and (p(n) - p_do(n)) / 2 two-cycles. max_tail holds
/// the upper bound 2.
inline Census expected_census(MapKind map, std::size_t n) {
  const std::size_t p = partitions_of(n).size();
  Census c;
  c.max_tail = 2;
  if (map == MapKind::R) {
    const std::size_t pdo = partitions_distinct_odd(n).size();
    c.fixed_points = pdo;
    c.two_cycles = (p - pdo) / 2;
  } else {
    c.fixed_points = p;
  }
  return c;
}

inline bool census_agrees(const Census& expected, const Census& actual) {
  return actual.fixed_points == expected.fixed_points &&
         actual.two_cycles == expected.two_cycles &&
         actual.longer_cycles == expected.longer_cycles &&
         actual.max_tail <= expected.max_tail;
}

}  // namespace rskdyn
