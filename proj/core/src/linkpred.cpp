#include "socsim/linkpred.hpp"

#include <algorithm>
#include <cmath>

#include "socsim/error.hpp"

namespace socsim {

namespace {

int require_node(const GraphView& view, const EntityId& id) {
    int i = view.index_of(id);
    if (i < 0) throw Error(ErrorCode::UnknownEntity, id + " not in graph");
    return i;
}

std::size_t common_neighbours(const GraphView& view, int u, int v) {
    const auto& a = view.undirected[u];
    const auto& b = view.undirected[v];
    std::size_t count = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++count;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

double adamic_adar(const GraphView& view, int u, int v) {
    const auto& a = view.undirected[u];
    const auto& b = view.undirected[v];
    double score = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            // a common neighbour is adjacent to both u and v, so deg >= 2
            score += 1.0 / std::log(static_cast<double>(view.undirected[a[i]].size()));
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return score;
}

std::vector<int> two_hop(const GraphView& view, int u) {
    std::vector<char> level(view.size(), 0); // 1 = neighbour, 2 = two hops
    level[u] = 3;
    for (int v : view.undirected[u]) level[v] = 1;
    std::vector<int> out;
    for (int v : view.undirected[u])
        for (int w : view.undirected[v])
            if (level[w] == 0) {
                level[w] = 2;
                out.push_back(w);
            }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

const char* to_string(LinkModel model) {
    switch (model) {
        case LinkModel::CommonNeighbours: return "CN";
        case LinkModel::AdamicAdar: return "AA";
        case LinkModel::PreferentialAttachment: return "PA";
        case LinkModel::Foaf: return "FOAF";
    }
    return "unknown";
}

std::optional<LinkModel> parse_link_model(const std::string& name) {
    if (name == "CN") return LinkModel::CommonNeighbours;
    if (name == "AA") return LinkModel::AdamicAdar;
    if (name == "PA") return LinkModel::PreferentialAttachment;
    if (name == "FOAF") return LinkModel::Foaf;
    return std::nullopt;
}

std::set<EntityId> foaf_candidates(const RelationGraph& g, const EntityId& u) {
    GraphView view(g);
    int ui = require_node(view, u);
    std::set<EntityId> out;
    for (int w : two_hop(view, ui)) out.insert(view.ids[w]);
    return out;
}

double score_cn(const RelationGraph& g, const EntityId& u, const EntityId& v) {
    GraphView view(g);
    return static_cast<double>(common_neighbours(view, require_node(view, u), require_node(view, v)));
}

double score_aa(const RelationGraph& g, const EntityId& u, const EntityId& v) {
    GraphView view(g);
    return adamic_adar(view, require_node(view, u), require_node(view, v));
}

double score_pa(const RelationGraph& g, const EntityId& u, const EntityId& v) {
    GraphView view(g);
    int ui = require_node(view, u), vi = require_node(view, v);
    return static_cast<double>(view.undirected[ui].size()) *
           static_cast<double>(view.undirected[vi].size());
}

std::vector<CandidatePair> predict_topk(const RelationGraph& g, LinkModel model, std::size_t k,
                                        CandidatePolicy policy) {
    if (k < 1) throw Error(ErrorCode::BadConfig, "predict_topk needs k >= 1");
    GraphView view(g);
    const int n = static_cast<int>(view.size());

    std::vector<std::pair<int, int>> candidates;
    if (policy == CandidatePolicy::Foaf) {
        for (int u = 0; u < n; ++u)
            for (int v : two_hop(view, u))
                if (v > u) candidates.emplace_back(u, v);
    } else {
        for (int u = 0; u < n; ++u) {
            const auto& nb = view.undirected[u];
            for (int v = u + 1; v < n; ++v)
                if (!std::binary_search(nb.begin(), nb.end(), v)) candidates.emplace_back(u, v);
        }
    }

    struct Scored {
        int u, v;
        double score;
        double tiebreak; // CN for the FOAF model, else equals score
    };
    std::vector<Scored> scored;
    scored.reserve(candidates.size());
    for (auto [u, v] : candidates) {
        double s = 0.0, tie = 0.0;
        switch (model) {
            case LinkModel::CommonNeighbours:
                s = tie = static_cast<double>(common_neighbours(view, u, v));
                break;
            case LinkModel::AdamicAdar: s = tie = adamic_adar(view, u, v); break;
            case LinkModel::PreferentialAttachment:
                s = tie = static_cast<double>(view.undirected[u].size()) *
                          static_cast<double>(view.undirected[v].size());
                break;
            case LinkModel::Foaf:
                s = 1.0; // every two-hop pair counts equally
                tie = static_cast<double>(common_neighbours(view, u, v));
                break;
        }
        scored.push_back({u, v, s, tie});
    }

    std::sort(scored.begin(), scored.end(), [&](const Scored& a, const Scored& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.tiebreak != b.tiebreak) return a.tiebreak > b.tiebreak;
        if (view.ids[a.u] != view.ids[b.u]) return view.ids[a.u] < view.ids[b.u];
        return view.ids[a.v] < view.ids[b.v];
    });

    std::vector<CandidatePair> out;
    out.reserve(std::min(k, scored.size()));
    for (std::size_t i = 0; i < scored.size() && i < k; ++i) {
        CandidatePair c;
        c.u = view.ids[scored[i].u];
        c.v = view.ids[scored[i].v];
        if (c.v < c.u) std::swap(c.u, c.v);
        c.score = scored[i].score;
        c.model = model;
        out.push_back(std::move(c));
    }
    return out;
}

PredictionQuality evaluate_prediction(const RelationGraph& g_train, const EdgeSet& new_edges,
                                      LinkModel model, std::size_t k, CandidatePolicy policy) {
    if (new_edges.empty()) throw Error(ErrorCode::EmptyTestSet, "no appeared edges to score");
    auto ranked = predict_topk(g_train, model, k, policy);

    std::size_t hits = 0;
    for (const auto& c : ranked) {
        auto key = c.u < c.v ? std::make_pair(c.u, c.v) : std::make_pair(c.v, c.u);
        if (new_edges.count(key)) ++hits;
    }
    PredictionQuality q;
    if (!ranked.empty())
        q.precision_at_k = static_cast<double>(hits) / static_cast<double>(ranked.size());
    q.recall_at_k = static_cast<double>(hits) / static_cast<double>(new_edges.size());
    return q;
}

} // namespace socsim
