#ifndef SOCSIM_TESTS_HELPERS_HPP_
#define SOCSIM_TESTS_HELPERS_HPP_

#include <string>
#include <vector>

#include "socsim/relation.hpp"
#include "socsim/rng.hpp"

namespace socsim::testing {

/// Graph from directed (u, v) pairs, unit strength.
inline RelationGraph make_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                                const std::vector<std::string>& extra_nodes = {},
                                double strength = 0.75) {
    RelationGraph g;
    for (const auto& [u, v] : edges) {
        RelationEdge e;
        e.initiator = u;
        e.receiver = v;
        e.strength = strength;
        g.add_edge(std::move(e));
    }
    for (const auto& n : extra_nodes) g.add_node(n);
    return g;
}

/// Symmetric graph: one directed edge per undirected pair (u -> v).
inline RelationGraph make_undirected(const std::vector<std::pair<std::string, std::string>>& edges,
                                     const std::vector<std::string>& extra_nodes = {},
                                     double strength = 0.75) {
    return make_graph(edges, extra_nodes, strength);
}

inline std::string node_name(int i) {
    std::string s = "n";
    if (i < 10) s += '0';
    s += std::to_string(i);
    return s;
}

/// G(n, p) digraph without self-loops; edge strengths fixed.
inline RelationGraph random_digraph(Rng& rng, int n, double p) {
    RelationGraph g;
    for (int i = 0; i < n; ++i) g.add_node(node_name(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (rng.uniform01() < p) {
                RelationEdge e;
                e.initiator = node_name(i);
                e.receiver = node_name(j);
                e.strength = 0.5;
                g.add_edge(std::move(e));
            }
        }
    return g;
}

/// Undirected G(n, p): each unordered pair gets one directed edge u->v.
inline RelationGraph random_graph_undirected(Rng& rng, int n, double p) {
    RelationGraph g;
    for (int i = 0; i < n; ++i) g.add_node(node_name(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (rng.uniform01() < p) {
                RelationEdge e;
                e.initiator = node_name(i);
                e.receiver = node_name(j);
                e.strength = 0.5;
                g.add_edge(std::move(e));
            }
        }
    return g;
}

} // namespace socsim::testing

#endif
