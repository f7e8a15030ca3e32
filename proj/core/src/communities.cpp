#include "socsim/communities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>

#include "socsim/error.hpp"

namespace socsim {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// All size-k cliques as sorted index vectors, enumerated on the ordered
/// adjacency so every clique appears exactly once.
std::vector<std::vector<int>> k_cliques_indexed(const GraphView& view, int k) {
    const int n = static_cast<int>(view.size());
    std::vector<std::vector<int>> higher(n); // neighbours with larger index
    for (int u = 0; u < n; ++u)
        for (int v : view.undirected[u])
            if (v > u) higher[u].push_back(v);

    std::vector<std::vector<int>> cliques;
    std::vector<int> current;
    std::vector<int> candidates;

    auto is_adjacent = [&](int u, int v) {
        const auto& nb = view.undirected[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    };

    std::function<void(const std::vector<int>&)> extend = [&](const std::vector<int>& cands) {
        if (static_cast<int>(current.size()) == k) {
            cliques.push_back(current);
            return;
        }
        for (std::size_t i = 0; i < cands.size(); ++i) {
            int v = cands[i];
            // prune: not enough candidates left to reach size k
            if (static_cast<int>(current.size() + (cands.size() - i)) < k) break;
            std::vector<int> next;
            for (std::size_t j = i + 1; j < cands.size(); ++j)
                if (is_adjacent(v, cands[j])) next.push_back(cands[j]);
            current.push_back(v);
            extend(next);
            current.pop_back();
        }
    };

    for (int u = 0; u < n; ++u) {
        current.assign(1, u);
        extend(higher[u]);
    }
    return cliques;
}

double membership_strength_indexed(const GraphView& view, const Group& grp, int ji) {
    double internal = 0.0, total = 0.0;
    for (const auto& [ni, w] : view.sym_weight[ji]) {
        total += w;
        if (grp.contains(view.ids[ni])) internal += w;
    }
    return total > 0.0 ? internal / total : 0.0;
}

} // namespace

bool Group::contains(const EntityId& id) const {
    return std::binary_search(members.begin(), members.end(), id);
}

const char* to_string(GroupEventKind kind) {
    switch (kind) {
        case GroupEventKind::Continue: return "continue";
        case GroupEventKind::Grow: return "grow";
        case GroupEventKind::Shrink: return "shrink";
        case GroupEventKind::Merge: return "merge";
        case GroupEventKind::Split: return "split";
        case GroupEventKind::Birth: return "birth";
        case GroupEventKind::Death: return "death";
    }
    return "unknown";
}

std::string group_id_for(const std::vector<EntityId>& sorted_members) {
    // FNV-1a over the member list, unit-separated
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](unsigned char c) {
        h ^= c;
        h *= 1099511628211ull;
    };
    for (const auto& m : sorted_members) {
        for (unsigned char c : m) mix(c);
        mix(0x1f);
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "g%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<std::vector<EntityId>> enumerate_k_cliques(const RelationGraph& g, int k) {
    if (k < 3) throw Error(ErrorCode::BadK, "clique size must be >= 3");
    GraphView view(g);
    auto indexed = k_cliques_indexed(view, k);
    std::vector<std::vector<EntityId>> out;
    out.reserve(indexed.size());
    for (const auto& clique : indexed) {
        std::vector<EntityId> members;
        members.reserve(clique.size());
        for (int i : clique) members.push_back(view.ids[i]);
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Group> cpm_communities(const RelationGraph& g, int k, Timestamp born_at) {
    if (k < 3) throw Error(ErrorCode::BadK, "clique percolation needs k >= 3");
    GraphView view(g);
    auto cliques = k_cliques_indexed(view, k);
    const int c = static_cast<int>(cliques.size());

    // Two k-cliques are adjacent iff they share k-1 nodes; bucket cliques by
    // each (k-1)-subset and unite within a bucket.
    UnionFind uf(c);
    std::map<std::vector<int>, int> bucket_head;
    std::vector<int> subset;
    for (int ci = 0; ci < c; ++ci) {
        const auto& clique = cliques[ci];
        for (int drop = 0; drop < k; ++drop) {
            subset.clear();
            for (int j = 0; j < k; ++j)
                if (j != drop) subset.push_back(clique[j]);
            auto [it, inserted] = bucket_head.try_emplace(subset, ci);
            if (!inserted) uf.unite(ci, it->second);
        }
    }

    std::map<int, std::set<int>> component_nodes;
    for (int ci = 0; ci < c; ++ci) {
        auto& nodes = component_nodes[uf.find(ci)];
        nodes.insert(cliques[ci].begin(), cliques[ci].end());
    }

    std::vector<Group> groups;
    groups.reserve(component_nodes.size());
    for (const auto& [root, nodes] : component_nodes) {
        Group grp;
        grp.members.reserve(nodes.size());
        for (int i : nodes) grp.members.push_back(view.ids[i]);
        std::sort(grp.members.begin(), grp.members.end());
        grp.id = group_id_for(grp.members);
        grp.born_at = born_at;
        for (const auto& m : grp.members)
            grp.membership_strength[m] = membership_strength_indexed(view, grp, view.index_of(m));
        groups.push_back(std::move(grp));
    }
    std::sort(groups.begin(), groups.end(),
              [](const Group& a, const Group& b) { return a.id < b.id; });
    return groups;
}

double membership_strength(const RelationGraph& g, const Group& grp, const EntityId& j) {
    if (!grp.contains(j)) throw Error(ErrorCode::NotMember, j + " not in group " + grp.id);
    GraphView view(g);
    int ji = view.index_of(j);
    if (ji < 0) return 0.0;
    return membership_strength_indexed(view, grp, ji);
}

GroupMetrics group_metrics(const RelationGraph& g, const Group& grp) {
    const auto m = grp.members.size();
    if (m < 2) throw Error(ErrorCode::TooSmall, "group metrics need >= 2 members");
    GraphView view(g);

    double internal_weight = 0.0, external_weight = 0.0;
    int internal_edges = 0;
    for (const auto& member : grp.members) {
        int u = view.index_of(member);
        if (u < 0) continue;
        for (const auto& [v, w] : view.sym_weight[u]) {
            bool inside = grp.contains(view.ids[v]);
            if (inside) {
                internal_weight += w; // counted from both endpoints
                if (view.ids[v] > member) ++internal_edges;
            } else {
                external_weight += w;
            }
        }
    }
    internal_weight *= 0.5;

    GroupMetrics out;
    out.density = static_cast<double>(internal_edges) / (static_cast<double>(m) * (m - 1) / 2.0);
    out.external_zero = external_weight == 0.0;
    out.internal_external_ratio = out.external_zero
                                      ? std::numeric_limits<double>::infinity()
                                      : internal_weight / external_weight;
    return out;
}

TokenCounts group_subject_matter(const InteractionLog& log, const Group& grp,
                                 const TimeWindow& w) {
    TokenCounts counts;
    for (const auto& e : log.window(w)) {
        if (grp.contains(e.initiator) && grp.contains(e.receiver)) merge_tokens(counts, e.tags);
    }
    return counts;
}

double jaccard(const std::vector<EntityId>& a, const std::vector<EntityId>& b) {
    if (a.empty() && b.empty()) return 1.0;
    std::size_t inter = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++inter;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    const double uni = static_cast<double>(a.size() + b.size() - inter);
    return inter / uni;
}

std::vector<GroupEvolutionEvent> track_evolution(const std::vector<Group>& prev,
                                                 const std::vector<Group>& next,
                                                 double match_threshold) {
    if (match_threshold <= 0.0 || match_threshold > 1.0)
        throw Error(ErrorCode::BadConfig, "match_threshold must be in (0,1]");

    struct Match {
        std::size_t p, n;
        double j;
    };
    std::vector<Match> matches;
    for (std::size_t p = 0; p < prev.size(); ++p)
        for (std::size_t n = 0; n < next.size(); ++n) {
            double j = jaccard(prev[p].members, next[n].members);
            if (j >= match_threshold) matches.push_back({p, n, j});
        }

    std::vector<std::vector<std::size_t>> out_of(prev.size()), into(next.size());
    std::vector<std::vector<double>> out_j(prev.size()), in_j(next.size());
    for (const auto& m : matches) {
        out_of[m.p].push_back(m.n);
        out_j[m.p].push_back(m.j);
        into[m.n].push_back(m.p);
        in_j[m.n].push_back(m.j);
    }

    std::vector<GroupEvolutionEvent> events;
    // multi-source targets are merges, multi-target sources splits
    for (std::size_t n = 0; n < next.size(); ++n) {
        if (into[n].size() < 2) continue;
        GroupEvolutionEvent e;
        e.kind = GroupEventKind::Merge;
        for (auto p : into[n]) e.from.push_back(prev[p].id);
        std::sort(e.from.begin(), e.from.end());
        e.to.push_back(next[n].id);
        e.jaccard = *std::max_element(in_j[n].begin(), in_j[n].end());
        events.push_back(std::move(e));
    }
    for (std::size_t p = 0; p < prev.size(); ++p) {
        if (out_of[p].size() < 2) continue;
        GroupEvolutionEvent e;
        e.kind = GroupEventKind::Split;
        e.from.push_back(prev[p].id);
        for (auto n : out_of[p]) e.to.push_back(next[n].id);
        std::sort(e.to.begin(), e.to.end());
        e.jaccard = *std::max_element(out_j[p].begin(), out_j[p].end());
        events.push_back(std::move(e));
    }
    // one-to-one continuations classified by size change
    for (std::size_t p = 0; p < prev.size(); ++p) {
        if (out_of[p].size() != 1) continue;
        std::size_t n = out_of[p][0];
        if (into[n].size() != 1) continue;
        GroupEvolutionEvent e;
        e.from.push_back(prev[p].id);
        e.to.push_back(next[n].id);
        e.jaccard = out_j[p][0];
        if (next[n].members.size() > prev[p].members.size())
            e.kind = GroupEventKind::Grow;
        else if (next[n].members.size() < prev[p].members.size())
            e.kind = GroupEventKind::Shrink;
        else
            e.kind = GroupEventKind::Continue;
        events.push_back(std::move(e));
    }
    for (std::size_t p = 0; p < prev.size(); ++p) {
        if (!out_of[p].empty()) continue;
        GroupEvolutionEvent e;
        e.kind = GroupEventKind::Death;
        e.from.push_back(prev[p].id);
        events.push_back(std::move(e));
    }
    for (std::size_t n = 0; n < next.size(); ++n) {
        if (!into[n].empty()) continue;
        GroupEvolutionEvent e;
        e.kind = GroupEventKind::Birth;
        e.to.push_back(next[n].id);
        events.push_back(std::move(e));
    }

    std::sort(events.begin(), events.end(),
              [](const GroupEvolutionEvent& a, const GroupEvolutionEvent& b) {
                  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
                  if (a.from != b.from) return a.from < b.from;
                  return a.to < b.to;
              });
    return events;
}

double membership_stability(const std::vector<std::vector<EntityId>>& member_history) {
    if (member_history.size() < 2)
        throw Error(ErrorCode::TooShort, "stability needs >= 2 states");
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < member_history.size(); ++i)
        sum += jaccard(member_history[i], member_history[i + 1]);
    return sum / static_cast<double>(member_history.size() - 1);
}

} // namespace socsim
