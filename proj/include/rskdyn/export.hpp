#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "rskdyn/dynamics.hpp"

namespace rskdyn {

/// Graphviz rendering of a dynamics graph. One cluster per shape, in
/// partitions_of order; nodes and edges in lexicographic order of the
/// permutations, so output is byte-stable.
inline std::string to_dot(const DynamicsGraph& g) {
  std::ostringstream out;
  out << "digraph rsk_" << to_string(g.map) << '_' << g.n << " {\n";
  out << "  node [shape=box];\n";
  std::size_t cluster = 0;
  for (const auto& lambda : partitions_of(g.n)) {
    out << "  subgraph cluster_" << cluster++ << " {\n";
    out << "    label=\"" << to_string(lambda) << "\";\n";
    for (std::size_t v = 0; v < g.node_count(); ++v)
      if (g.shapes[v] == lambda) out << "    \"" << to_string(g.nodes[v]) << "\";\n";
    out << "  }\n";
  }
  for (std::size_t v = 0; v < g.node_count(); ++v)
    out << "  \"" << to_string(g.nodes[v]) << "\" -> \""
        << to_string(g.nodes[g.successor[v]]) << "\";\n";
  out << "}\n";
  return out.str();
}

inline nlohmann::ordered_json to_json(const DynamicsGraph& g) {
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < g.node_count(); ++v)
    nodes.push_back({{"perm", to_string(g.nodes[v])},
                     {"shape", to_string(g.shapes[v])},
                     {"next", to_string(g.nodes[g.successor[v]])}});
  return {{"n", g.n}, {"map", std::string(to_string(g.map))}, {"nodes", std::move(nodes)}};
}

inline nlohmann::ordered_json to_json(const OrbitReport& report) {
  auto perms = [](const std::vector<Permutation>& ps) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& p : ps) arr.push_back(to_string(p));
    return arr;
  };
  nlohmann::ordered_json shapes = nlohmann::ordered_json::array();
  for (const auto& s : report.shapes) shapes.push_back(to_string(s));
  return {{"tail", perms(report.tail)},
          {"cycle", perms(report.cycle)},
          {"shapes", std::move(shapes)}};
}

}  // namespace rskdyn
