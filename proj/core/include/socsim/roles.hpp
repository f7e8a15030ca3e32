#ifndef SOCSIM_ROLES_HPP_
#define SOCSIM_ROLES_HPP_

#include <array>
#include <optional>

#include "socsim/log.hpp"
#include "socsim/sna.hpp"

namespace socsim {

/// The five portal activity dimensions.
enum class DomainRole : int { Friendsmaker = 0, Talker, Surfer, Host, Traveller };
inline constexpr int kDomainRoleCount = 5;
const char* to_string(DomainRole role);

/// Windowed activity scores, one per domain role, all >= 0.
struct DomainActivity {
    std::array<double, kDomainRoleCount> value{};

    double& operator[](DomainRole r) { return value[static_cast<int>(r)]; }
    double operator[](DomainRole r) const { return value[static_cast<int>(r)]; }
    double total() const;
};

/// Which activity dimension an interaction kind feeds.
DomainRole role_of_kind(InteractionKind kind);

/// Role-association strengths in [0,1] plus the dominant role (argmax under
/// the fixed tie order; absent when every strength is zero).
struct RoleProfile {
    std::array<double, kDomainRoleCount> strengths{};
    std::optional<DomainRole> dominant;
};

enum class UserCategory : int { Host = 0, Traveller, Virtual, Homebody, Scrounger, Observer };
inline constexpr int kUserCategoryCount = 6;
const char* to_string(UserCategory cat);
std::optional<UserCategory> parse_user_category(const std::string& name);

/// Normalized frequency over the six categories; sums to 1.
struct RoleDistribution {
    std::array<double, kUserCategoryCount> fraction{};

    double& operator[](UserCategory c) { return fraction[static_cast<int>(c)]; }
    double operator[](UserCategory c) const { return fraction[static_cast<int>(c)]; }
};

/// Classification rule table. The betweenness median is a population
/// statistic computed by the caller in a first pass.
struct RoleThresholds {
    double observer_total = 1.0;  // below this total activity -> Observer
    double active = 3.0;          // "does X often"
    double low = 1.0;             // "does X rarely"
    double betweenness_median = 0.0;

    void validate() const; // throws BadThresholds
};

/// Per-kind weighted event sums for the initiator within the window.
DomainActivity domain_activity(const InteractionLog& log, const EntityId& j, const TimeWindow& w);

/// Same, over an arbitrary pre-filtered event span.
DomainActivity domain_activity(std::span<const InteractionEvent> events, const EntityId& j,
                               const TimeWindow& w);

/// Strengths = activity / population max per attribute (0 when the max is 0),
/// clamped to [0,1]; dominant filled by dominant_role.
RoleProfile role_strengths(const DomainActivity& a, const DomainActivity& population_max);

/// Argmax with ties broken by the fixed role order; nullopt when all zero.
std::optional<DomainRole> dominant_role(const std::array<double, kDomainRoleCount>& strengths);

/// Per-entity graph measures consumed by the classifier.
struct SnaSignals {
    double closeness = 0.0;
    double betweenness = 0.0;
};

/// First matching rule wins: Observer, Scrounger, Homebody, Virtual,
/// Traveller, Host. Total and deterministic.
UserCategory classify_user(const DomainActivity& a, const SnaSignals& sna,
                           const RoleThresholds& thresholds);

/// Normalized category frequencies. Throws EmptyPopulation.
RoleDistribution role_distribution(const std::map<EntityId, UserCategory>& categories);

double median(std::vector<double> values); // 0 for empty input

} // namespace socsim

#endif
