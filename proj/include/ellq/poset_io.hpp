#pragma once

#include <nlohmann/json.hpp>
#include <sstream>

#include "ellq/strata.hpp"

namespace ellq {

using ordered_json = nlohmann::ordered_json;

/// Deterministic DOT digraph: nodes in (length, lexicographic) order,
/// edges sorted by (source, target) node index.
inline std::string to_dot(const DegenerationPoset& p) {
    std::ostringstream os;
    os << "digraph strata {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=box];\n";
    for (size_t i = 0; i < p.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << p.nodes[i].str() << "\"];\n";
    for (const auto& [a, b] : p.edges)
        os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

inline ordered_json seq_to_json(const SlopeSeq& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : s.entries()) arr.push_back(e.str());
    return arr;
}

/// {root, nodes, edges} with node indices into the sorted node list.
inline ordered_json to_json(const DegenerationPoset& p) {
    ordered_json j;
    j["root"] = p.root;
    ordered_json nodes = ordered_json::array();
    for (const auto& n : p.nodes) nodes.push_back(seq_to_json(n));
    j["nodes"] = nodes;
    ordered_json edges = ordered_json::array();
    for (const auto& [a, b] : p.edges) edges.push_back(ordered_json::array({a, b}));
    j["edges"] = edges;
    return j;
}

}  // namespace ellq
