#ifndef SOCSIM_LOG_HPP_
#define SOCSIM_LOG_HPP_

#include <span>
#include <vector>

#include "socsim/types.hpp"

namespace socsim {

/// Append-only, time-ordered event sequence. Streaming appends must not go
/// back in time; bulk loads are sorted stably by (time, initiator, receiver,
/// kind) so ingestion order does not matter.
class InteractionLog {
  public:
    InteractionLog() = default;

    /// Streaming ingest. Throws OrderViolation when e.time precedes the tail,
    /// NegativeStrength / SelfLoop on invalid events.
    void append(const InteractionEvent& e);

    /// Validates, then sorts everything (existing + new) stably.
    void bulk_load(std::vector<InteractionEvent> events);

    const std::vector<InteractionEvent>& events() const { return events_; }
    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }

    /// Events with start <= time < end, in log order. The log is time-sorted
    /// so the result is one contiguous span.
    std::span<const InteractionEvent> window(const TimeWindow& w) const;

    /// Events in which the entity participates on either side.
    std::vector<InteractionEvent> entity_events(const EntityId& id) const;

    /// First event time per entity (initiator or receiver side).
    std::map<EntityId, Timestamp> first_seen() const;

    Timestamp min_time() const; // throws on empty log
    Timestamp max_time() const;

  private:
    std::vector<InteractionEvent> events_;
};

/// Rejects self-loops and negative strengths.
void validate_event(const InteractionEvent& e);

/// The canonical bulk ordering: (time, initiator, receiver, kind).
bool event_order_lt(const InteractionEvent& a, const InteractionEvent& b);

} // namespace socsim

#endif
