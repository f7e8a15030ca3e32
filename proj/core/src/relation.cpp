#include "socsim/relation.hpp"

#include <algorithm>
#include <cmath>

#include "socsim/error.hpp"
#include "socsim/log.hpp"

namespace socsim {

void RelationConfig::validate() const {
    if (decay_rate < 0.0) throw Error(ErrorCode::BadConfig, "decay_rate must be >= 0");
    if (min_weight <= 0.0) throw Error(ErrorCode::BadConfig, "min_weight must be > 0");
    if (saturation <= 0.0) throw Error(ErrorCode::BadConfig, "saturation must be > 0");
}

double accumulate_weight(std::span<const WeightContribution> contributions,
                         const RelationConfig& cfg, Timestamp now) {
    double w = 0.0;
    for (const auto& c : contributions) {
        w += c.strength * std::exp(-cfg.decay_rate * static_cast<double>(now - c.time));
    }
    return w;
}

std::optional<RelationEdge> relation_from_contributions(
    const EntityId& initiator, const EntityId& receiver,
    std::span<const WeightContribution> contributions, const TokenCounts& semantics,
    const RelationConfig& cfg, Timestamp now) {
    double w = accumulate_weight(contributions, cfg, now);
    if (w < cfg.min_weight) return std::nullopt;
    RelationEdge edge;
    edge.initiator = initiator;
    edge.receiver = receiver;
    edge.strength = w / (w + cfg.saturation);
    edge.semantics = semantics;
    return edge;
}

void RelationGraph::add_node(const EntityId& id) { nodes_.insert(id); }

bool RelationGraph::has_node(const EntityId& id) const { return nodes_.count(id) != 0; }

void RelationGraph::add_edge(RelationEdge edge) {
    add_node(edge.initiator);
    add_node(edge.receiver);
    PairKey key{edge.initiator, edge.receiver};
    edges_[key] = std::move(edge);
}

bool RelationGraph::has_edge(const EntityId& u, const EntityId& v) const {
    return edges_.count({u, v}) != 0;
}

const RelationEdge* RelationGraph::edge(const EntityId& u, const EntityId& v) const {
    auto it = edges_.find({u, v});
    return it == edges_.end() ? nullptr : &it->second;
}

std::vector<EntityId> RelationGraph::nodes() const {
    return {nodes_.begin(), nodes_.end()};
}

bool RelationGraph::operator==(const RelationGraph& other) const {
    if (nodes_ != other.nodes_ || edges_.size() != other.edges_.size()) return false;
    for (const auto& [key, e] : edges_) {
        auto it = other.edges_.find(key);
        if (it == other.edges_.end()) return false;
        if (it->second.strength != e.strength || it->second.semantics != e.semantics) return false;
    }
    return true;
}

RelationGraph derive_relations(std::span<const InteractionEvent> events,
                               const RelationConfig& cfg, Timestamp now) {
    cfg.validate();
    RelationGraph g(now);

    // Group contributions per ordered pair, preserving stream order, then run
    // each pair through the shared rule. Keeping one code path with the
    // agent-local update makes the two bit-identical.
    struct PairStream {
        std::vector<WeightContribution> contributions;
        TokenCounts semantics;
    };
    std::map<RelationGraph::PairKey, PairStream> streams;
    for (const auto& e : events) {
        validate_event(e);
        g.add_node(e.initiator);
        g.add_node(e.receiver);
        auto& s = streams[{e.initiator, e.receiver}];
        s.contributions.push_back({e.strength, e.time});
        merge_tokens(s.semantics, e.tags);
    }
    for (const auto& [key, s] : streams) {
        auto edge = relation_from_contributions(key.first, key.second, s.contributions,
                                                s.semantics, cfg, now);
        if (edge) g.add_edge(std::move(*edge));
    }
    return g;
}

GraphView::GraphView(const RelationGraph& g) {
    ids = g.nodes();
    const auto n = ids.size();
    out.assign(n, {});
    in.assign(n, {});
    undirected.assign(n, {});
    sym_weight.assign(n, {});

    std::map<EntityId, int> index;
    for (std::size_t i = 0; i < n; ++i) index[ids[i]] = static_cast<int>(i);
    for (const auto& [key, edge] : g.edges()) {
        int u = index.at(key.first);
        int v = index.at(key.second);
        out[u].push_back(v);
        in[v].push_back(u);
        auto& wuv = sym_weight[u][v];
        auto& wvu = sym_weight[v][u];
        wuv = std::max(wuv, edge.strength);
        wvu = std::max(wvu, edge.strength);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(out[i].begin(), out[i].end());
        std::sort(in[i].begin(), in[i].end());
        undirected[i].reserve(sym_weight[i].size());
        for (const auto& [j, w] : sym_weight[i]) undirected[i].push_back(j);
    }
}

int GraphView::index_of(const EntityId& id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) return -1;
    return static_cast<int>(it - ids.begin());
}

} // namespace socsim
