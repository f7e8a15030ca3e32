#include "socsim/fixture.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "socsim/rng.hpp"
#include "socsim/roles.hpp"

namespace socsim {
namespace fixture {

namespace {

// events per window for each interaction kind, indexed by archetype
struct Archetype {
    const char* name;
    double share;
    std::array<double, kInteractionKindCount> rate;
    std::vector<std::string> tag_pool;
};

// kind order: friend_request, group_post, surf_request, host_offer,
//             travel_search, stay_hosted, stay_guest
const std::vector<Archetype>& archetypes() {
    static const std::vector<Archetype> all = {
        {"host", 0.18, {0.5, 0.4, 0.35, 0.9, 0.3, 0.9, 0.35}, {"hosting", "dinner", "city"}},
        {"traveller", 0.22, {0.5, 0.3, 0.8, 0.35, 1.0, 0.35, 0.8}, {"travel", "trip", "route"}},
        {"virtual", 0.12, {1.6, 1.2, 0.4, 0.4, 0.5, 0.3, 0.3}, {"chat", "forum", "music"}},
        {"homebody", 0.12, {0.3, 0.4, 0.05, 1.1, 0.05, 1.2, 0.02}, {"hosting", "home"}},
        {"scrounger", 0.11, {0.4, 0.2, 1.3, 0.02, 0.4, 0.02, 1.3}, {"travel", "couch"}},
        {"observer", 0.25, {0.04, 0.04, 0.03, 0.03, 0.04, 0.02, 0.02}, {"hello"}},
    };
    return all;
}

EntityId entity_name(int i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "u%04d", i);
    return buf;
}

} // namespace

InteractionLog generate(const Options& opts) {
    Rng rng(opts.seed);
    const auto& types = archetypes();

    std::vector<double> shares;
    for (const auto& t : types) shares.push_back(t.share);

    const int clusters = std::max(1, opts.entities / std::max(1, opts.cluster_size));
    struct Person {
        int archetype;
        int cluster;
        int arrival_window;
    };
    std::vector<Person> people(opts.entities);
    std::vector<std::vector<int>> cluster_members(clusters);
    for (int i = 0; i < opts.entities; ++i) {
        auto& p = people[i];
        p.archetype = static_cast<int>(rng.weighted_index(shares));
        p.cluster = static_cast<int>(rng.below(clusters));
        p.arrival_window = rng.uniform01() < opts.initial_presence
                               ? 0
                               : 1 + static_cast<int>(rng.below(
                                         std::max(1, opts.windows - 1)));
        cluster_members[p.cluster].push_back(i);
    }

    std::vector<InteractionEvent> events;
    for (int win = 0; win < opts.windows; ++win) {
        const Timestamp w_start = opts.start_time + static_cast<Timestamp>(win) * opts.window_seconds;
        for (int i = 0; i < opts.entities; ++i) {
            const auto& p = people[i];
            if (p.arrival_window > win) continue;
            const auto& type = types[p.archetype];
            for (int kind = 0; kind < kInteractionKindCount; ++kind) {
                int n = rng.poisson(type.rate[kind]);
                for (int e = 0; e < n; ++e) {
                    // partners stay mostly inside the home cluster
                    int partner = i;
                    for (int attempt = 0; partner == i && attempt < 16; ++attempt) {
                        if (rng.uniform01() < 0.8 && cluster_members[p.cluster].size() > 1) {
                            const auto& pool = cluster_members[p.cluster];
                            partner = pool[rng.below(pool.size())];
                        } else {
                            partner = static_cast<int>(rng.below(opts.entities));
                        }
                        if (partner != i && people[partner].arrival_window > win) partner = i;
                    }
                    if (partner == i) continue;

                    InteractionEvent ev;
                    ev.initiator = entity_name(i);
                    ev.receiver = entity_name(partner);
                    ev.kind = static_cast<InteractionKind>(kind);
                    ev.time = w_start + static_cast<Timestamp>(rng.below(
                                            static_cast<std::uint64_t>(opts.window_seconds)));
                    ev.strength = 1.0;
                    if (!type.tag_pool.empty() && rng.uniform01() < 0.6)
                        ev.tags.push_back(type.tag_pool[rng.below(type.tag_pool.size())]);
                    events.push_back(std::move(ev));
                }
            }
        }
    }

    InteractionLog log;
    log.bulk_load(std::move(events));
    return log;
}

} // namespace fixture
} // namespace socsim
