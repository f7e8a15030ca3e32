#include "socsim/log.hpp"

#include <algorithm>
#include <tuple>

#include "socsim/error.hpp"

namespace socsim {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NegativeStrength: return "NegativeStrength";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::OrderViolation: return "OrderViolation";
        case ErrorCode::BadConfig: return "BadConfig";
        case ErrorCode::DuplicateEntity: return "DuplicateEntity";
        case ErrorCode::UnknownEntity: return "UnknownEntity";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::BadK: return "BadK";
        case ErrorCode::NotMember: return "NotMember";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::TooShort: return "TooShort";
        case ErrorCode::EmptyTestSet: return "EmptyTestSet";
        case ErrorCode::BadThresholds: return "BadThresholds";
        case ErrorCode::EmptyPopulation: return "EmptyPopulation";
        case ErrorCode::EmptySnapshot: return "EmptySnapshot";
        case ErrorCode::CategoryMismatch: return "CategoryMismatch";
        case ErrorCode::EmptyCohort: return "EmptyCohort";
        case ErrorCode::DegenerateSplit: return "DegenerateSplit";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

const char* to_string(InteractionKind kind) {
    switch (kind) {
        case InteractionKind::FriendRequest: return "friend_request";
        case InteractionKind::GroupPost: return "group_post";
        case InteractionKind::SurfRequest: return "surf_request";
        case InteractionKind::HostOffer: return "host_offer";
        case InteractionKind::TravelSearch: return "travel_search";
        case InteractionKind::StayHosted: return "stay_hosted";
        case InteractionKind::StayGuest: return "stay_guest";
    }
    return "unknown";
}

std::optional<InteractionKind> parse_interaction_kind(const std::string& name) {
    for (int i = 0; i < kInteractionKindCount; ++i) {
        auto kind = static_cast<InteractionKind>(i);
        if (name == to_string(kind)) return kind;
    }
    return std::nullopt;
}

void merge_tokens(TokenCounts& into, const std::vector<std::string>& tags) {
    for (const auto& tag : tags) {
        if (!tag.empty()) ++into[tag];
    }
}

void merge_tokens(TokenCounts& into, const TokenCounts& other) {
    for (const auto& [token, count] : other) into[token] += count;
}

void validate_event(const InteractionEvent& e) {
    if (e.initiator == e.receiver)
        throw Error(ErrorCode::SelfLoop, "event " + e.initiator + " -> " + e.receiver);
    if (e.strength < 0.0)
        throw Error(ErrorCode::NegativeStrength,
                    "event " + e.initiator + " -> " + e.receiver + " at t=" + std::to_string(e.time));
}

bool event_order_lt(const InteractionEvent& a, const InteractionEvent& b) {
    return std::tie(a.time, a.initiator, a.receiver, a.kind) <
           std::tie(b.time, b.initiator, b.receiver, b.kind);
}

void InteractionLog::append(const InteractionEvent& e) {
    validate_event(e);
    if (!events_.empty() && e.time < events_.back().time)
        throw Error(ErrorCode::OrderViolation,
                    "append at t=" + std::to_string(e.time) + " behind tail t=" +
                        std::to_string(events_.back().time));
    events_.push_back(e);
}

void InteractionLog::bulk_load(std::vector<InteractionEvent> events) {
    for (const auto& e : events) validate_event(e);
    events_.insert(events_.end(), std::make_move_iterator(events.begin()),
                   std::make_move_iterator(events.end()));
    std::stable_sort(events_.begin(), events_.end(), event_order_lt);
}

std::span<const InteractionEvent> InteractionLog::window(const TimeWindow& w) const {
    auto lo = std::lower_bound(events_.begin(), events_.end(), w.start,
                               [](const InteractionEvent& e, Timestamp t) { return e.time < t; });
    auto hi = std::lower_bound(lo, events_.end(), w.end,
                               [](const InteractionEvent& e, Timestamp t) { return e.time < t; });
    return {events_.data() + (lo - events_.begin()), static_cast<std::size_t>(hi - lo)};
}

std::vector<InteractionEvent> InteractionLog::entity_events(const EntityId& id) const {
    std::vector<InteractionEvent> out;
    for (const auto& e : events_) {
        if (e.initiator == id || e.receiver == id) out.push_back(e);
    }
    return out;
}

std::map<EntityId, Timestamp> InteractionLog::first_seen() const {
    std::map<EntityId, Timestamp> seen;
    for (const auto& e : events_) {
        seen.try_emplace(e.initiator, e.time);
        seen.try_emplace(e.receiver, e.time);
    }
    return seen;
}

Timestamp InteractionLog::min_time() const {
    if (events_.empty()) throw Error(ErrorCode::EmptyTestSet, "empty log has no min time");
    return events_.front().time;
}

Timestamp InteractionLog::max_time() const {
    if (events_.empty()) throw Error(ErrorCode::EmptyTestSet, "empty log has no max time");
    return events_.back().time;
}

} // namespace socsim
