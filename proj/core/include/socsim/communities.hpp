#ifndef SOCSIM_COMMUNITIES_HPP_
#define SOCSIM_COMMUNITIES_HPP_

#include <set>
#include <string>
#include <vector>

#include "socsim/log.hpp"
#include "socsim/relation.hpp"

namespace socsim {

/// Overlapping community produced by clique percolation.
struct Group {
    std::string id; // deterministic digest of the sorted member list
    std::vector<EntityId> members; // sorted
    std::map<EntityId, double> membership_strength; // in [0,1]
    TokenCounts subject_matter;
    Timestamp born_at = 0;

    bool contains(const EntityId& id) const;
};

enum class GroupEventKind { Continue, Grow, Shrink, Merge, Split, Birth, Death };
const char* to_string(GroupEventKind kind);

struct GroupEvolutionEvent {
    GroupEventKind kind;
    std::vector<std::string> from; // group ids at the earlier window
    std::vector<std::string> to;   // group ids at the later window
    double jaccard = 0.0;
};

/// All complete subgraphs of exactly k nodes, each returned sorted.
/// Throws BadK for k < 3.
std::vector<std::vector<EntityId>> enumerate_k_cliques(const RelationGraph& g, int k);

/// Clique Percolation: communities are unions of k-cliques chained through
/// (k-1)-node overlaps, computed on the symmetrized graph. Membership
/// strengths are filled in; subject matter is left to the caller (it needs
/// the event log). Groups come back sorted by id.
std::vector<Group> cpm_communities(const RelationGraph& g, int k, Timestamp born_at = 0);

/// Fraction of j's symmetrized incident weight that stays inside the group.
/// Throws NotMember when j is not listed.
double membership_strength(const RelationGraph& g, const Group& grp, const EntityId& j);

struct GroupMetrics {
    double density = 0.0;                 // internal undirected edges / possible
    double internal_external_ratio = 0.0; // +inf sentinel when external weight is 0
    bool external_zero = false;
};

/// Throws TooSmall for groups below two members.
GroupMetrics group_metrics(const RelationGraph& g, const Group& grp);

/// Merged tags of events inside the window whose both endpoints are members.
TokenCounts group_subject_matter(const InteractionLog& log, const Group& grp,
                                 const TimeWindow& w);

/// Matches the two group sets by member Jaccard >= threshold and classifies
/// transitions: 1-1 matches become continue/grow/shrink by size change,
/// multi-matches become merge/split, unmatched groups birth/death.
std::vector<GroupEvolutionEvent> track_evolution(const std::vector<Group>& prev,
                                                 const std::vector<Group>& next,
                                                 double match_threshold = 0.3);

/// Mean Jaccard of consecutive member sets along a matched chain.
/// Throws TooShort for fewer than two states.
double membership_stability(const std::vector<std::vector<EntityId>>& member_history);

double jaccard(const std::vector<EntityId>& a, const std::vector<EntityId>& b);

/// Deterministic group id from the sorted member list (FNV-1a digest).
std::string group_id_for(const std::vector<EntityId>& sorted_members);

} // namespace socsim

#endif
