#ifndef SOCSIM_SNAPSHOT_HPP_
#define SOCSIM_SNAPSHOT_HPP_

#include "socsim/attributes.hpp"
#include "socsim/communities.hpp"
#include "socsim/log.hpp"
#include "socsim/relation.hpp"
#include "socsim/roles.hpp"
#include "socsim/sna.hpp"

namespace socsim {

/// Everything a snapshot derivation needs: the lookback span, the relation
/// rule, the community parameter, and the role rule table.
struct SnapshotConfig {
    Timestamp window_seconds = 604800; // one analysis window
    int lookback_windows = 3;          // relation/activity span in windows
    RelationConfig relation;
    int cpm_k = 3;
    RoleThresholds roles; // betweenness_median is recomputed per snapshot

    Timestamp lookback() const { return window_seconds * lookback_windows; }
    void validate() const;
};

/// Full society state at one instant: entities seen so far, their attributes,
/// the derived relation graph, overlapping groups, and role assignments.
struct SocietySnapshot {
    Timestamp time = 0;
    std::vector<EntityId> entities; // sorted
    AttributeTable attributes;
    RelationGraph relations;
    std::vector<Group> groups;
    std::map<EntityId, RoleProfile> roles;
    std::map<EntityId, UserCategory> categories;
    RoleThresholds thresholds_used; // echo, incl. the betweenness median

    bool has_entity(const EntityId& id) const;
};

/// Writes all seven graph measures into the "sna" attribute namespace.
/// Closeness/betweenness use the symmetrized view, hubs/authorities/pagerank
/// the directed one. Idempotent.
SocietySnapshot annotate_sna(SocietySnapshot s);

/// Assembles the snapshot at time t from events in [t - lookback, t):
/// relations, sna annotation, communities, domain activity, and roles.
/// The entity universe is everyone seen in the log before t.
SocietySnapshot snapshot(const InteractionLog& log, Timestamp t, const SnapshotConfig& cfg);

/// Adds unseen entities with optional initial domain attributes. They start
/// with no relations, no groups, an empty role profile, and the Observer
/// category. Throws DuplicateEntity.
SocietySnapshot add_entities(SocietySnapshot s,
                             const std::map<EntityId, std::map<std::string, double>>& newcomers);

/// Role assignments only — the part of the snapshot pipeline the simulator
/// and evaluator need per step. Classification matches snapshot() exactly:
/// same windowed activity, same betweenness, same thresholds.
struct RoleAssignment {
    std::map<EntityId, DomainActivity> activity;
    std::map<EntityId, RoleProfile> profiles;
    std::map<EntityId, UserCategory> categories;
    RoleThresholds thresholds_used;
};

RoleAssignment assign_roles(const InteractionLog& log, Timestamp t, const SnapshotConfig& cfg);

/// Category frequencies of the society at t. Throws EmptyPopulation when the
/// log knows no entities before t.
RoleDistribution role_distribution_at(const InteractionLog& log, Timestamp t,
                                      const SnapshotConfig& cfg);

} // namespace socsim

#endif
