#ifndef SOCSIM_FIXTURE_HPP_
#define SOCSIM_FIXTURE_HPP_

#include "socsim/log.hpp"

namespace socsim {
namespace fixture {

/// Synthetic portal dataset: archetype-driven event rates, soft community
/// clusters, and staggered arrivals. Stands in for unavailable portal data.
struct Options {
    int entities = 500;
    int windows = 10;
    Timestamp window_seconds = 604800;
    Timestamp start_time = 1600000000;
    std::uint64_t seed = 20;
    double initial_presence = 0.7; // fraction present from window 0
    int cluster_size = 20;
};

InteractionLog generate(const Options& opts);

} // namespace fixture
} // namespace socsim

#endif
