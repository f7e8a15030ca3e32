#ifndef SOCSIM_SNA_HPP_
#define SOCSIM_SNA_HPP_

#include <map>

#include "socsim/relation.hpp"

namespace socsim {

using MetricVector = std::map<EntityId, double>;

enum class PathMode { Directed, Symmetrized };

struct SnaDefaults {
    static constexpr int kIterations = 200;
    static constexpr double kTolerance = 1e-10;
    static constexpr double kDamping = 0.85;
};

/// Unweighted in/out edge counts per node.
std::pair<MetricVector, MetricVector> degrees(const RelationGraph& g);

/// closeness(v) = 1 / sum of hop distances to nodes reachable from v.
/// Unreachable nodes are excluded from the sum; a node that reaches nothing
/// scores 0.
MetricVector closeness(const RelationGraph& g, PathMode mode);

/// Unnormalized shortest-path betweenness (Brandes). Directed mode sums over
/// ordered pairs, symmetrized mode over unordered pairs.
MetricVector betweenness(const RelationGraph& g, PathMode mode);

/// Mutually reinforcing hub/authority scores, L2-normalized power iteration
/// on the unweighted adjacency. Throws EmptyGraph on a graph with no nodes.
std::pair<MetricVector, MetricVector> hits(const RelationGraph& g,
                                           int iters = SnaDefaults::kIterations,
                                           double tol = SnaDefaults::kTolerance);

/// Damped random-surfer fixpoint on unweighted out-links; dangling nodes
/// distribute uniformly; result sums to 1. Throws EmptyGraph.
MetricVector pagerank(const RelationGraph& g, double damping = SnaDefaults::kDamping,
                      int iters = SnaDefaults::kIterations,
                      double tol = SnaDefaults::kTolerance);

inline constexpr const char* kMetricNames[] = {
    "in_degree", "out_degree", "closeness", "betweenness", "hub", "authority", "pagerank",
};

} // namespace socsim

#endif
