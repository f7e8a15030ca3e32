#ifndef SOCSIM_RELATION_HPP_
#define SOCSIM_RELATION_HPP_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "socsim/types.hpp"

namespace socsim {

/// Knobs of the interaction -> relation derivation: exponential time decay,
/// existence threshold, and saturating strength w / (w + saturation).
struct RelationConfig {
    double decay_rate = 0.0;  // per second, >= 0; 0 disables decay
    double min_weight = 2.0;  // accumulated weight needed for an edge, > 0
    double saturation = 1.0;  // half-strength point of w/(w+k), > 0

    void validate() const; // throws BadConfig
};

/// Directed weighted relation with a token-frequency content model.
struct RelationEdge {
    EntityId initiator;
    EntityId receiver;
    double strength = 0.0;  // in (0, 1]
    TokenCounts semantics;  // merged event tags, possibly empty
};

/// One raw contribution to a pair's accumulated weight.
struct WeightContribution {
    double strength;
    Timestamp time;
};

/// Shared accumulation rule: w = sum c_i * exp(-decay * (now - t_i)).
/// Used by both the society-level derivation and the agent-local relation
/// update so the two code paths cannot drift apart.
double accumulate_weight(std::span<const WeightContribution> contributions,
                         const RelationConfig& cfg, Timestamp now);

/// Edge for one ordered pair, or nothing when the weight stays below the
/// existence threshold.
std::optional<RelationEdge> relation_from_contributions(
    const EntityId& initiator, const EntityId& receiver,
    std::span<const WeightContribution> contributions, const TokenCounts& semantics,
    const RelationConfig& cfg, Timestamp now);

/// Directed relation graph; at most one edge per ordered pair. Nodes may be
/// isolated (known entities without qualifying relations).
class RelationGraph {
  public:
    using PairKey = std::pair<EntityId, EntityId>;

    RelationGraph() = default;
    explicit RelationGraph(Timestamp as_of) : as_of_(as_of) {}

    Timestamp as_of() const { return as_of_; }
    void set_as_of(Timestamp t) { as_of_ = t; }

    void add_node(const EntityId& id);
    void add_edge(RelationEdge edge); // registers endpoints as nodes

    bool has_node(const EntityId& id) const;
    bool has_edge(const EntityId& u, const EntityId& v) const;
    const RelationEdge* edge(const EntityId& u, const EntityId& v) const;

    const std::map<PairKey, RelationEdge>& edges() const { return edges_; }
    const std::set<EntityId>& node_set() const { return nodes_; }
    std::vector<EntityId> nodes() const;
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool operator==(const RelationGraph& other) const;

  private:
    Timestamp as_of_ = 0;
    std::set<EntityId> nodes_;
    std::map<PairKey, RelationEdge> edges_;
};

/// Builds the relation graph from an event sequence. Every event endpoint
/// becomes a node; ordered pairs with accumulated weight >= min_weight get an
/// edge with strength w/(w+saturation). Throws BadConfig / NegativeStrength /
/// SelfLoop.
RelationGraph derive_relations(std::span<const InteractionEvent> events,
                               const RelationConfig& cfg, Timestamp now);

/// Dense index view for graph algorithms. Node order is the sorted id order
/// of the underlying graph, which keeps every algorithm deterministic.
struct GraphView {
    std::vector<EntityId> ids;                // index -> id
    std::vector<std::vector<int>> out;        // directed out-neighbours
    std::vector<std::vector<int>> in;         // directed in-neighbours
    std::vector<std::vector<int>> undirected; // symmetrized, deduplicated
    std::vector<std::map<int, double>> sym_weight; // max(s(u,v), s(v,u))

    explicit GraphView(const RelationGraph& g);

    int index_of(const EntityId& id) const; // -1 when unknown
    std::size_t size() const { return ids.size(); }
};

} // namespace socsim

#endif
