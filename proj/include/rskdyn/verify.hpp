#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rskdyn/dynamics.hpp"
#include "rskdyn/greene.hpp"
#include "rskdyn/greene_check.hpp"
#include "rskdyn/rsk.hpp"

namespace rskdyn {

inline constexpr std::size_t kExhaustiveVerifyBound = 6;
inline constexpr std::size_t kSampledVerifyBound = 8;
inline constexpr std::size_t kVerifySamples = 300;

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample; }
};

struct VerifyReport {
  std::size_t n = 0;
  bool exhaustive = true;
  std::vector<CheckResult> checks;
  std::vector<Permutation> f_fixed_points;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }
};

namespace detail {

// Records cases for one named property; keeps the first counterexample.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (!ok && !result_.counterexample) result_.counterexample = describe();
  }

  CheckResult done() && { return std::move(result_); }

 private:
  CheckResult result_;
};

}  // namespace detail

/// The permutations a verify run covers: all of S_n up to the exhaustive
/// bound, otherwise kVerifySamples distinct draws from mt19937_64(seed).
inline std::vector<Permutation> verify_domain(std::size_t n, std::uint64_t seed) {
  if (n <= kExhaustiveVerifyBound) return all_permutations(n);
  std::mt19937_64 rng(seed);
  std::vector<Permutation> out;
  std::set<Permutation> seen;
  out.reserve(kVerifySamples);
  while (out.size() < kVerifySamples) {
    auto p = random_permutation(n, rng);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

/// Runs every structural property at size n. Checks over tableaux and the
/// functional-graph census are always exhaustive; checks over permutations
/// are exhaustive for n <= 6 and sampled for n in {7, 8}.
inline VerifyReport run_verify(std::size_t n, std::uint64_t seed, std::size_t workers = 0) {
  if (n == 0 || n > kSampledVerifyBound)
    throw BoundExceeded("verify", n, kSampledVerifyBound);
  using detail::Check;

  VerifyReport report;
  report.n = n;
  report.exhaustive = n <= kExhaustiveVerifyBound;
  const auto perms = verify_domain(n, seed);
  const auto shapes = partitions_of(n);
  std::map<Partition, std::vector<Tableau>> syt;
  for (const auto& lambda : shapes) syt.emplace(lambda, enumerate_syt(lambda));

  auto& out = report.checks;
  auto pstr = [](const Permutation& p) { return "p = " + to_string(p); };

  {
    Check round_trip("rsk inverse recovers the permutation");
    Check injective("rsk is injective on the domain");
    std::set<std::string> images;
    for (const auto& p : perms) {
      const auto pair = rsk_forward(p);
      round_trip.expect(rsk_inverse(pair) == p, [&] { return pstr(p); });
      injective.expect(images.insert(to_string(pair)).second,
                       [&] { return pstr(p) + " collides on " + to_string(pair); });
    }
    out.push_back(std::move(round_trip).done());
    out.push_back(std::move(injective).done());
  }
  {
    Check count("sum of (f^lambda)^2 equals n!");
    std::uint64_t total = 0;
    for (const auto& [lambda, ts] : syt) total += ts.size() * ts.size();
    count.expect(total == factorial(n), [&] {
      return "sum = " + std::to_string(total) + ", n! = " + std::to_string(factorial(n));
    });
    out.push_back(std::move(count).done());
  }
  {
    Check inverse("rsk of the inverse swaps insertion and recording");
    Check involution("involution iff insertion equals recording");
    for (const auto& p : perms) {
      inverse.expect(check_inverse_theorem(p), [&] { return pstr(p); });
      const auto pair = rsk_forward(p);
      involution.expect(is_involution(p) == (pair.insertion == pair.recording),
                        [&] { return pstr(p); });
    }
    out.push_back(std::move(inverse).done());
    out.push_back(std::move(involution).done());
  }
  {
    Check shape("greene: shape prefix sums equal I_k, conjugate prefix sums equal D_k");
    Check duality("greene: reversal swaps I_k and D_k");
    for (const auto& p : perms) {
      const auto stats = greene::subsequence_stats(p.view());
      shape.expect(greene::shape_matches_stats(rsk_forward(p).insertion.shape(), stats),
                   [&] { return pstr(p); });
      const auto rev = greene::subsequence_stats(reversed(p).view());
      duality.expect(stats.increasing == rev.decreasing && stats.decreasing == rev.increasing,
                     [&] { return pstr(p); });
    }
    out.push_back(std::move(shape).done());
    out.push_back(std::move(duality).done());
  }
  {
    Check row_word("row reading word re-inserts to the same tableau");
    Check col_word("column reading word re-inserts to the same tableau");
    Check rev_word("reversed reading word inserts to the transposed tableau");
    Check t_rec("recording tableau of the row word is T_lambda");
    Check q_rec("recording tableau of the column word is Q_lambda");
    Check q_rev("recording tableau of the reversed word is Q of the conjugate shape");
    Check transpose("transpose is an involution onto the conjugate shape");
    for (const auto& [lambda, ts] : syt) {
      const auto t_l = t_lambda(lambda);
      const auto q_l = q_lambda(lambda);
      const auto q_conj = q_lambda(conjugate_partition(lambda));
      for (const auto& t : ts) {
        auto tstr = [&] { return "t = " + to_string(t); };
        const auto by_row = rsk_forward(row_reading_word(t));
        const auto by_col = rsk_forward(column_reading_word(t));
        const auto by_rev = rsk_forward(reversed_reading_word(t));
        const auto tt = transpose_tableau(t);
        row_word.expect(by_row.insertion == t, tstr);
        col_word.expect(by_col.insertion == t, tstr);
        rev_word.expect(by_rev.insertion == tt, tstr);
        t_rec.expect(by_row.recording == t_l, tstr);
        q_rec.expect(by_col.recording == q_l, tstr);
        q_rev.expect(by_rev.recording == q_conj, tstr);
        transpose.expect(transpose_tableau(tt) == t && tt.is_standard() &&
                             tt.shape() == conjugate_partition(lambda),
                         tstr);
      }
    }
    for (auto* c : {&row_word, &col_word, &rev_word, &t_rec, &q_rec, &q_rev, &transpose})
      out.push_back(std::move(*c).done());
  }
  {
    Check gravity("T_lambda layered fill equals the gravity construction");
    Check f_fixed("pi_lambda is an f-fixed involution with pair (T_lambda, T_lambda)");
    Check c_fixed("sigma_lambda is a c-fixed involution with pair (Q_lambda, Q_lambda)");
    Check r_cycle("r terminal cycle has length 1 iff the shape is self-conjugate");
    for (const auto& lambda : shapes) {
      auto lstr = [&] { return "lambda = " + to_string(lambda); };
      gravity.expect(t_lambda(lambda) == t_lambda_by_gravity(lambda), lstr);
      const auto pi = fixed_point_for_shape(MapKind::F, lambda);
      const auto t_l = t_lambda(lambda);
      f_fixed.expect(step(MapKind::F, pi) == pi && is_involution(pi) &&
                         rsk_forward(pi) == TableauPair{t_l, t_l},
                     lstr);
      const auto sigma = fixed_point_for_shape(MapKind::C, lambda);
      const auto q_l = q_lambda(lambda);
      c_fixed.expect(step(MapKind::C, sigma) == sigma && is_involution(sigma) &&
                         rsk_forward(sigma) == TableauPair{q_l, q_l},
                     lstr);
      const auto cyc = r_cycle_for_shape(lambda);
      bool ok = (cyc.size() == 1) == is_self_conjugate(lambda);
      for (std::size_t i = 0; i < cyc.size(); ++i)
        ok = ok && step(MapKind::R, cyc[i]) == cyc[(i + 1) % cyc.size()];
      r_cycle.expect(ok, lstr);
    }
    for (auto* c : {&gravity, &f_fixed, &c_fixed, &r_cycle}) out.push_back(std::move(*c).done());
  }
  {
    Check f_shape("f preserves the RSK shape");
    Check c_shape("c preserves the RSK shape");
    Check r_shape("r conjugates the RSK shape");
    Check f_orbit("f reaches a fixed point within two steps");
    Check c_orbit("c reaches a fixed point within two steps");
    Check r_orbit("r reaches a 1- or 2-cycle within two steps, a 1-cycle iff self-conjugate");
    Check f_target("f orbit ends at pi_lambda of the starting shape");
    Check c_target("c orbit ends at sigma_lambda of the starting shape");
    Check r_target("r orbit ends in the terminal cycle of the starting shape");
    for (const auto& p : perms) {
      const auto lambda = rsk_forward(p).insertion.shape();
      auto shape_of = [](const Permutation& q) { return rsk_forward(q).insertion.shape(); };
      f_shape.expect(shape_of(step(MapKind::F, p)) == lambda, [&] { return pstr(p); });
      c_shape.expect(shape_of(step(MapKind::C, p)) == lambda, [&] { return pstr(p); });
      r_shape.expect(shape_of(step(MapKind::R, p)) == conjugate_partition(lambda),
                     [&] { return pstr(p); });

      for (MapKind map : {MapKind::F, MapKind::C}) {
        const auto o = orbit(map, p);
        auto& conv = map == MapKind::F ? f_orbit : c_orbit;
        auto& target = map == MapKind::F ? f_target : c_target;
        conv.expect(o.tail.size() <= 2 && o.cycle.size() == 1, [&] {
          return pstr(p) + " tail " + std::to_string(o.tail.size()) + " cycle " +
                 std::to_string(o.cycle.size());
        });
        target.expect(o.cycle.front() == fixed_point_for_shape(map, lambda),
                      [&] { return pstr(p); });
      }
      const auto o = orbit(MapKind::R, p);
      const auto terminal = o.shapes[o.tail.size()];
      r_orbit.expect(o.tail.size() <= 2 && (o.cycle.size() == 1 || o.cycle.size() == 2) &&
                         (o.cycle.size() == 1) == is_self_conjugate(terminal),
                     [&] {
                       return pstr(p) + " tail " + std::to_string(o.tail.size()) + " cycle " +
                              std::to_string(o.cycle.size());
                     });
      auto expected = r_cycle_for_shape(lambda);
      auto got = o.cycle;
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      r_target.expect(got == expected, [&] { return pstr(p); });
    }
    for (auto* c : {&f_shape, &c_shape, &r_shape, &f_orbit, &c_orbit, &r_orbit, &f_target,
                    &c_target, &r_target})
      out.push_back(std::move(*c).done());
  }
  {
    for (MapKind map : kAllMaps) {
      const auto g = build_graph(map, n, workers);
      const auto got = census(g);
      const auto want = expected_census(map, n);
      Check c(std::string("census of ") + std::string(to_string(map)) +
              " matches the partition counts");
      c.expect(census_agrees(want, got), [&] {
        return "fixed " + std::to_string(got.fixed_points) + " (want " +
               std::to_string(want.fixed_points) + "), two-cycles " +
               std::to_string(got.two_cycles) + " (want " + std::to_string(want.two_cycles) +
               "), longer " + std::to_string(got.longer_cycles) + ", max tail " +
               std::to_string(got.max_tail);
      });
      out.push_back(std::move(c).done());
      if (map == MapKind::F) {
        Check loops("self-loops of f are exactly the pi_lambda");
        std::set<Permutation> expected;
        for (const auto& lambda : shapes) expected.insert(fixed_point_for_shape(MapKind::F, lambda));
        std::set<Permutation> found;
        for (std::size_t v = 0; v < g.node_count(); ++v)
          if (g.successor[v] == v) {
            found.insert(g.nodes[v]);
            report.f_fixed_points.push_back(g.nodes[v]);
          }
        loops.expect(found == expected && expected.size() == shapes.size(),
                     [&] { return std::to_string(found.size()) + " self-loops found"; });
        out.push_back(std::move(loops).done());
      }
    }
  }
  return report;
}

}  // namespace rskdyn
