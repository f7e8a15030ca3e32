#ifndef SOCSIM_TYPES_HPP_
#define SOCSIM_TYPES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace socsim {

/// Opaque stable entity token. Unique within a society, never reused.
using EntityId = std::string;

/// Seconds since epoch. All windows are half-open [start, end).
using Timestamp = std::int64_t;

struct TimeWindow {
    Timestamp start; // inclusive
    Timestamp end;   // exclusive

    bool valid() const { return start < end; }
    bool contains(Timestamp t) const { return t >= start && t < end; }
};

enum class InteractionKind : int {
    FriendRequest = 0,
    GroupPost,
    SurfRequest,
    HostOffer,
    TravelSearch,
    StayHosted,
    StayGuest,
};

inline constexpr int kInteractionKindCount = 7;

const char* to_string(InteractionKind kind);
std::optional<InteractionKind> parse_interaction_kind(const std::string& name);

/// One timed, typed, weighted influence between two entities.
struct InteractionEvent {
    EntityId initiator;
    EntityId receiver;
    InteractionKind kind = InteractionKind::FriendRequest;
    Timestamp time = 0;
    double strength = 1.0;
    std::vector<std::string> tags; // optional payload tokens, may be empty
};

/// Bag-of-words counters; sorted keys keep serialization canonical.
using TokenCounts = std::map<std::string, std::int64_t>;

void merge_tokens(TokenCounts& into, const std::vector<std::string>& tags);
void merge_tokens(TokenCounts& into, const TokenCounts& other);

} // namespace socsim

#endif
