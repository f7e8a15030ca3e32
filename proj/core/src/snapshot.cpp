#include "socsim/snapshot.hpp"

#include <algorithm>

#include "socsim/error.hpp"

namespace socsim {

namespace {

/// Relation/role/category core shared by the full snapshot and the cheap
/// role-only pipeline; classification inputs are identical in both paths.
struct AnalysisCore {
    std::vector<EntityId> entities; // sorted universe: seen before t
    RelationGraph relations;
    MetricVector betweenness_values;
    std::map<EntityId, DomainActivity> activity;
    std::map<EntityId, RoleProfile> profiles;
    std::map<EntityId, UserCategory> categories;
    RoleThresholds thresholds;
    TimeWindow window{};
};

AnalysisCore analysis_core(const InteractionLog& log, Timestamp t, const SnapshotConfig& cfg) {
    cfg.validate();
    AnalysisCore core;
    core.window = {t - cfg.lookback(), t};

    for (const auto& [id, first] : log.first_seen())
        if (first < t) core.entities.push_back(id);
    std::sort(core.entities.begin(), core.entities.end());

    auto events = log.window(core.window);
    core.relations = derive_relations(events, cfg.relation, t);
    for (const auto& id : core.entities) core.relations.add_node(id);

    core.betweenness_values = betweenness(core.relations, PathMode::Symmetrized);

    // one pass over the window; entities without events keep zero activity
    for (const auto& id : core.entities) core.activity.emplace(id, DomainActivity{});
    for (const auto& e : events) {
        auto it = core.activity.find(e.initiator);
        if (it != core.activity.end()) it->second[role_of_kind(e.kind)] += e.strength;
    }
    DomainActivity population_max;
    for (const auto& [id, a] : core.activity)
        for (int i = 0; i < kDomainRoleCount; ++i)
            population_max.value[i] = std::max(population_max.value[i], a.value[i]);

    std::vector<double> betw;
    betw.reserve(core.entities.size());
    for (const auto& id : core.entities) betw.push_back(core.betweenness_values[id]);
    core.thresholds = cfg.roles;
    core.thresholds.betweenness_median = median(std::move(betw));

    for (const auto& id : core.entities) {
        const auto& a = core.activity.at(id);
        core.profiles.emplace(id, role_strengths(a, population_max));
        SnaSignals signals{0.0, core.betweenness_values[id]};
        core.categories.emplace(id, classify_user(a, signals, core.thresholds));
    }
    return core;
}

} // namespace

void SnapshotConfig::validate() const {
    if (window_seconds <= 0) throw Error(ErrorCode::BadConfig, "window_seconds must be > 0");
    if (lookback_windows < 1) throw Error(ErrorCode::BadConfig, "lookback_windows must be >= 1");
    if (cpm_k < 3) throw Error(ErrorCode::BadK, "cpm_k must be >= 3");
    relation.validate();
    roles.validate();
}

bool SocietySnapshot::has_entity(const EntityId& id) const {
    return std::binary_search(entities.begin(), entities.end(), id);
}

SocietySnapshot annotate_sna(SocietySnapshot s) {
    if (s.entities.empty()) return s;
    auto [in_deg, out_deg] = degrees(s.relations);
    auto close = closeness(s.relations, PathMode::Symmetrized);
    auto betw = betweenness(s.relations, PathMode::Symmetrized);
    auto [hub, auth] = hits(s.relations);
    auto rank = pagerank(s.relations);

    auto write = [&s](const char* name, const MetricVector& values) {
        for (const auto& [id, v] : values) s.attributes.set(id, kSnaNamespace, name, v);
    };
    write("in_degree", in_deg);
    write("out_degree", out_deg);
    write("closeness", close);
    write("betweenness", betw);
    write("hub", hub);
    write("authority", auth);
    write("pagerank", rank);
    return s;
}

SocietySnapshot snapshot(const InteractionLog& log, Timestamp t, const SnapshotConfig& cfg) {
    AnalysisCore core = analysis_core(log, t, cfg);

    SocietySnapshot s;
    s.time = t;
    s.entities = std::move(core.entities);
    s.relations = std::move(core.relations);
    s.roles = std::move(core.profiles);
    s.categories = std::move(core.categories);
    s.thresholds_used = core.thresholds;

    for (const auto& [id, a] : core.activity)
        for (int i = 0; i < kDomainRoleCount; ++i)
            s.attributes.set(id, kDomainNamespace, to_string(static_cast<DomainRole>(i)),
                             a.value[i]);

    s = annotate_sna(std::move(s));

    s.groups = cpm_communities(s.relations, cfg.cpm_k, t);
    for (auto& grp : s.groups)
        grp.subject_matter = group_subject_matter(log, grp, core.window);
    return s;
}

SocietySnapshot add_entities(SocietySnapshot s,
                             const std::map<EntityId, std::map<std::string, double>>& newcomers) {
    for (const auto& [id, attrs] : newcomers) {
        if (s.has_entity(id)) throw Error(ErrorCode::DuplicateEntity, id + " already present");
    }
    for (const auto& [id, attrs] : newcomers) {
        s.entities.push_back(id);
        for (const auto& [name, value] : attrs)
            s.attributes.set(id, kDomainNamespace, name, value);
        s.roles.emplace(id, RoleProfile{});
        s.categories.emplace(id, UserCategory::Observer);
    }
    std::sort(s.entities.begin(), s.entities.end());
    return s;
}

RoleAssignment assign_roles(const InteractionLog& log, Timestamp t, const SnapshotConfig& cfg) {
    AnalysisCore core = analysis_core(log, t, cfg);
    RoleAssignment out;
    out.activity = std::move(core.activity);
    out.profiles = std::move(core.profiles);
    out.categories = std::move(core.categories);
    out.thresholds_used = core.thresholds;
    return out;
}

RoleDistribution role_distribution_at(const InteractionLog& log, Timestamp t,
                                      const SnapshotConfig& cfg) {
    return role_distribution(assign_roles(log, t, cfg).categories);
}

} // namespace socsim
