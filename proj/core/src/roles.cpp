#include "socsim/roles.hpp"

#include <algorithm>

#include "socsim/error.hpp"

namespace socsim {

const char* to_string(DomainRole role) {
    switch (role) {
        case DomainRole::Friendsmaker: return "friendsmaker";
        case DomainRole::Talker: return "talker";
        case DomainRole::Surfer: return "surfer";
        case DomainRole::Host: return "host";
        case DomainRole::Traveller: return "traveller";
    }
    return "unknown";
}

const char* to_string(UserCategory cat) {
    switch (cat) {
        case UserCategory::Host: return "Host";
        case UserCategory::Traveller: return "Traveller";
        case UserCategory::Virtual: return "Virtual";
        case UserCategory::Homebody: return "Homebody";
        case UserCategory::Scrounger: return "Scrounger";
        case UserCategory::Observer: return "Observer";
    }
    return "unknown";
}

std::optional<UserCategory> parse_user_category(const std::string& name) {
    for (int i = 0; i < kUserCategoryCount; ++i) {
        auto cat = static_cast<UserCategory>(i);
        if (name == to_string(cat)) return cat;
    }
    return std::nullopt;
}

double DomainActivity::total() const {
    double sum = 0.0;
    for (double v : value) sum += v;
    return sum;
}

DomainRole role_of_kind(InteractionKind kind) {
    switch (kind) {
        case InteractionKind::FriendRequest: return DomainRole::Friendsmaker;
        case InteractionKind::GroupPost: return DomainRole::Talker;
        case InteractionKind::SurfRequest:
        case InteractionKind::StayGuest: return DomainRole::Surfer;
        case InteractionKind::HostOffer:
        case InteractionKind::StayHosted: return DomainRole::Host;
        case InteractionKind::TravelSearch: return DomainRole::Traveller;
    }
    return DomainRole::Friendsmaker;
}

void RoleThresholds::validate() const {
    if (observer_total < 0.0) throw Error(ErrorCode::BadThresholds, "observer_total < 0");
    if (active <= 0.0) throw Error(ErrorCode::BadThresholds, "active threshold must be > 0");
    if (low < 0.0) throw Error(ErrorCode::BadThresholds, "low threshold < 0");
    if (low > active) throw Error(ErrorCode::BadThresholds, "low threshold above active");
}

DomainActivity domain_activity(std::span<const InteractionEvent> events, const EntityId& j,
                               const TimeWindow& w) {
    DomainActivity a;
    for (const auto& e : events) {
        if (e.initiator != j || !w.contains(e.time)) continue;
        a[role_of_kind(e.kind)] += e.strength;
    }
    return a;
}

DomainActivity domain_activity(const InteractionLog& log, const EntityId& j, const TimeWindow& w) {
    return domain_activity(log.window(w), j, w);
}

RoleProfile role_strengths(const DomainActivity& a, const DomainActivity& population_max) {
    RoleProfile p;
    for (int i = 0; i < kDomainRoleCount; ++i) {
        double max = population_max.value[i];
        double eta = max > 0.0 ? a.value[i] / max : 0.0;
        p.strengths[i] = std::clamp(eta, 0.0, 1.0);
    }
    p.dominant = dominant_role(p.strengths);
    return p;
}

std::optional<DomainRole> dominant_role(const std::array<double, kDomainRoleCount>& strengths) {
    int best = -1;
    double best_value = 0.0;
    for (int i = 0; i < kDomainRoleCount; ++i) {
        if (strengths[i] > best_value) { // strict: ties keep the earlier role
            best_value = strengths[i];
            best = i;
        }
    }
    if (best < 0) return std::nullopt;
    return static_cast<DomainRole>(best);
}

UserCategory classify_user(const DomainActivity& a, const SnaSignals& sna,
                           const RoleThresholds& t) {
    t.validate();
    const double surfer = a[DomainRole::Surfer];
    const double host = a[DomainRole::Host];
    const double traveller = a[DomainRole::Traveller];
    const double friendsmaker = a[DomainRole::Friendsmaker];

    // fixed rule order; first hit wins
    if (a.total() < t.observer_total) return UserCategory::Observer;
    if (surfer >= t.active && host < t.low) return UserCategory::Scrounger;
    if (host >= t.active && traveller + surfer < t.low) return UserCategory::Homebody;
    if (friendsmaker >= t.active && sna.betweenness >= t.betweenness_median)
        return UserCategory::Virtual;
    if (traveller + surfer > host && host >= t.low) return UserCategory::Traveller;
    return UserCategory::Host;
}

RoleDistribution role_distribution(const std::map<EntityId, UserCategory>& categories) {
    if (categories.empty()) throw Error(ErrorCode::EmptyPopulation, "no entities to distribute");
    RoleDistribution d;
    for (const auto& [id, cat] : categories) d[cat] += 1.0;
    for (double& f : d.fraction) f /= static_cast<double>(categories.size());
    return d;
}

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const auto n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

} // namespace socsim
