#include "socsim/sna.hpp"

#include <cmath>
#include <queue>

#include "socsim/error.hpp"

namespace socsim {

namespace {

const std::vector<std::vector<int>>& adjacency(const GraphView& view, PathMode mode) {
    return mode == PathMode::Directed ? view.out : view.undirected;
}

MetricVector from_values(const GraphView& view, const std::vector<double>& values) {
    MetricVector out;
    for (std::size_t i = 0; i < view.size(); ++i) out[view.ids[i]] = values[i];
    return out;
}

} // namespace

std::pair<MetricVector, MetricVector> degrees(const RelationGraph& g) {
    MetricVector in, out;
    for (const auto& id : g.node_set()) {
        in[id] = 0.0;
        out[id] = 0.0;
    }
    for (const auto& [key, edge] : g.edges()) {
        out[key.first] += 1.0;
        in[key.second] += 1.0;
    }
    return {in, out};
}

MetricVector closeness(const RelationGraph& g, PathMode mode) {
    GraphView view(g);
    const auto& adj = adjacency(view, mode);
    const int n = static_cast<int>(view.size());
    std::vector<double> score(n, 0.0);

    std::vector<int> dist(n);
    std::queue<int> bfs;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        bfs.push(s);
        long long sum = 0;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            sum += dist[u];
            for (int v : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    bfs.push(v);
                }
            }
        }
        score[s] = sum > 0 ? 1.0 / static_cast<double>(sum) : 0.0;
    }
    return from_values(view, score);
}

MetricVector betweenness(const RelationGraph& g, PathMode mode) {
    // Brandes accumulation over unweighted shortest paths.
    GraphView view(g);
    const auto& adj = adjacency(view, mode);
    const int n = static_cast<int>(view.size());
    std::vector<double> score(n, 0.0);

    std::vector<int> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<std::vector<int>> preds(n);
    std::vector<int> order;
    order.reserve(n);

    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        order.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        std::queue<int> bfs;
        bfs.push(s);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            order.push_back(u);
            for (int v : adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    bfs.push(v);
                }
                if (dist[v] == dist[u] + 1) {
                    sigma[v] += sigma[u];
                    preds[v].push_back(u);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int w = *it;
            for (int u : preds[w]) delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
            if (w != s) score[w] += delta[w];
        }
    }
    if (mode == PathMode::Symmetrized) {
        // the source loop counted each unordered pair twice
        for (auto& v : score) v *= 0.5;
    }
    return from_values(view, score);
}

std::pair<MetricVector, MetricVector> hits(const RelationGraph& g, int iters, double tol) {
    if (g.node_count() == 0) throw Error(ErrorCode::EmptyGraph, "hits on empty graph");
    if (iters < 1) throw Error(ErrorCode::BadConfig, "hits needs iters >= 1");
    if (tol <= 0.0) throw Error(ErrorCode::BadConfig, "hits needs tol > 0");

    GraphView view(g);
    const int n = static_cast<int>(view.size());
    std::vector<double> hub(n, 1.0), auth(n, 1.0);

    auto l2_normalize = [](std::vector<double>& v) {
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm > 0.0)
            for (double& x : v) x /= norm;
    };

    for (int iter = 0; iter < iters; ++iter) {
        std::vector<double> next_auth(n, 0.0), next_hub(n, 0.0);
        for (int v = 0; v < n; ++v)
            for (int u : view.in[v]) next_auth[v] += hub[u];
        l2_normalize(next_auth);
        for (int u = 0; u < n; ++u)
            for (int v : view.out[u]) next_hub[u] += next_auth[v];
        l2_normalize(next_hub);

        double change = 0.0;
        for (int i = 0; i < n; ++i) {
            change += std::abs(next_auth[i] - auth[i]);
            change += std::abs(next_hub[i] - hub[i]);
        }
        auth.swap(next_auth);
        hub.swap(next_hub);
        if (change < tol) break;
    }
    return {from_values(view, hub), from_values(view, auth)};
}

MetricVector pagerank(const RelationGraph& g, double damping, int iters, double tol) {
    if (g.node_count() == 0) throw Error(ErrorCode::EmptyGraph, "pagerank on empty graph");
    if (damping <= 0.0 || damping >= 1.0)
        throw Error(ErrorCode::BadConfig, "damping must be in (0,1)");
    if (iters < 1) throw Error(ErrorCode::BadConfig, "pagerank needs iters >= 1");
    if (tol <= 0.0) throw Error(ErrorCode::BadConfig, "pagerank needs tol > 0");

    GraphView view(g);
    const int n = static_cast<int>(view.size());
    std::vector<double> rank(n, 1.0 / n);

    for (int iter = 0; iter < iters; ++iter) {
        double dangling = 0.0;
        for (int u = 0; u < n; ++u)
            if (view.out[u].empty()) dangling += rank[u];

        std::vector<double> next(n, (1.0 - damping) / n + damping * dangling / n);
        for (int u = 0; u < n; ++u) {
            if (view.out[u].empty()) continue;
            double share = damping * rank[u] / static_cast<double>(view.out[u].size());
            for (int v : view.out[u]) next[v] += share;
        }
        double change = 0.0;
        for (int i = 0; i < n; ++i) change += std::abs(next[i] - rank[i]);
        rank.swap(next);
        if (change < tol) break;
    }
    return from_values(view, rank);
}

} // namespace socsim
