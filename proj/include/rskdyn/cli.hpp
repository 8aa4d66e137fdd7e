#pragma once

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rskdyn/dynamics.hpp"
#include "rskdyn/export.hpp"
#include "rskdyn/rsk.hpp"
#include "rskdyn/verify.hpp"

namespace rskdyn::cli {

// 0 success, 1 a theorem was falsified, 2 bad usage or malformed input.
enum ExitCode : int { kOk = 0, kFalsified = 1, kUsage = 2 };

namespace detail {

inline void print_trace(std::ostream& out, const Permutation& p) {
  out << "step  insertion | recording\n";
  const auto steps = rsk_trace(p);
  for (std::size_t i = 0; i < steps.size(); ++i)
    out << std::setw(4) << (i + 1) << "  " << to_string(steps[i].first) << " | "
        << to_string(steps[i].second) << '\n';
}

inline void print_orbit(std::ostream& out, MapKind map, const Permutation& start,
                        const OrbitReport& report) {
  out << "map " << to_string(map) << ", start " << to_string(start) << '\n';
  std::size_t k = 0;
  auto block = [&](const char* label, const std::vector<Permutation>& perms) {
    out << label << " (" << perms.size() << "):\n";
    for (const auto& p : perms)
      out << "  " << to_string(p) << "  shape " << to_string(report.shapes[k++]) << '\n';
  };
  block("tail", report.tail);
  block("cycle", report.cycle);
}

}  // namespace detail

/// Entry point shared by the rskdyn executable and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"RSK correspondence and the dynamics of iterated reading words", "rskdyn"};
  app.require_subcommand(1);

  std::string perm_text;
  std::string map_text = "f";
  std::string partition_text;
  std::string format = "dot";
  std::size_t n = 0;
  std::size_t workers = 0;
  std::size_t max_steps = kDefaultOrbitSteps;
  std::uint64_t seed = 1;
  bool trace = false;
  bool json = false;

  auto* rsk_cmd = app.add_subcommand("rsk", "Print the insertion and recording tableaux");
  rsk_cmd->add_option("permutation", perm_text, "one-line notation, e.g. 2,4,7,3,5,1,6,8")
      ->required();
  rsk_cmd->add_flag("--trace", trace, "print every insertion step");

  auto* orbit_cmd = app.add_subcommand("orbit", "Iterate a map and split tail from cycle");
  orbit_cmd->add_option("--map", map_text, "f, c or r")->required();
  orbit_cmd->add_option("permutation", perm_text)->required();
  orbit_cmd->add_option("--max-steps", max_steps)->check(CLI::Range(4, 1 << 20));
  orbit_cmd->add_flag("--json", json);

  auto* graph_cmd = app.add_subcommand("graph", "Export the functional graph on S_n");
  graph_cmd->add_option("--map", map_text)->required();
  graph_cmd->add_option("--n", n)->required();
  graph_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  graph_cmd->add_option("--workers", workers);

  auto* census_cmd = app.add_subcommand("census", "Count fixed points and cycles on S_n");
  census_cmd->add_option("--map", map_text)->required();
  census_cmd->add_option("--n", n)->required();
  census_cmd->add_option("--workers", workers);

  auto* fixed_cmd = app.add_subcommand("fixed-point", "Fixed point of f or c for a shape");
  fixed_cmd->add_option("--map", map_text)->required();
  fixed_cmd->add_option("partition", partition_text, "e.g. 4,3,2")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check every structural property at size n");
  verify_cmd->add_option("--n", n)->required();
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--workers", workers);

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*rsk_cmd) {
      const auto p = parse_permutation(perm_text);
      if (trace) detail::print_trace(out, p);
      const auto pair = rsk_forward(p);
      out << "insertion: " << to_string(pair.insertion) << '\n';
      out << "recording: " << to_string(pair.recording) << '\n';
      return kOk;
    }
    if (*orbit_cmd) {
      const auto map = parse_map_kind(map_text);
      const auto p = parse_permutation(perm_text);
      const auto report = orbit(map, p, max_steps);
      if (json)
        out << to_json(report).dump() << '\n';
      else
        detail::print_orbit(out, map, p, report);
      return kOk;
    }
    if (*graph_cmd) {
      const auto map = parse_map_kind(map_text);
      const auto g = build_graph(map, n, workers);
      if (format == "json")
        out << to_json(g).dump(2) << '\n';
      else
        out << to_dot(g);
      return kOk;
    }
    if (*census_cmd) {
      const auto map = parse_map_kind(map_text);
      const auto got = census(map, n, workers);
      const auto want = expected_census(map, n);
      out << "map " << to_string(map) << ", n " << n << '\n';
      out << "fixed points: " << got.fixed_points << " (expected " << want.fixed_points << ")\n";
      out << "two-cycles: " << got.two_cycles << " (expected " << want.two_cycles << ")\n";
      out << "longer cycles: " << got.longer_cycles << " (expected 0)\n";
      out << "max tail: " << got.max_tail << " (bound " << want.max_tail << ")\n";
      const bool ok = census_agrees(want, got);
      out << (ok ? "consistent" : "MISMATCH") << '\n';
      return ok ? kOk : kFalsified;
    }
    if (*fixed_cmd) {
      const auto map = parse_map_kind(map_text);
      const auto lambda = parse_partition(partition_text);
      const auto p = fixed_point_for_shape(map, lambda);
      const auto t = map == MapKind::F ? t_lambda(lambda) : q_lambda(lambda);
      out << "tableau: " << to_string(t) << '\n';
      out << "permutation: " << to_string(p) << '\n';
      return kOk;
    }
    if (*verify_cmd) {
      const auto report = run_verify(n, seed, workers);
      out << "verify n " << n << (report.exhaustive ? " (exhaustive)" : " (sampled, seed ")
          << (report.exhaustive ? "" : std::to_string(seed) + ")") << '\n';
      for (const auto& c : report.checks) {
        if (c.passed())
          out << "PASS  " << c.name << " [" << c.cases << " cases]\n";
        else
          out << "FAIL  " << c.name << ": " << *c.counterexample << '\n';
      }
      out << "f fixed points:";
      for (const auto& p : report.f_fixed_points) out << ' ' << to_string(p) << ';';
      out << '\n';
      out << (report.passed() ? "all checks passed" : "verification FAILED") << '\n';
      return report.passed() ? kOk : kFalsified;
    }
  } catch (const NoCycleWithinBound& e) {
    err << "theorem falsified: " << e.what() << '\n';
    return kFalsified;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace rskdyn::cli
