#ifndef SOCSIM_SIMULATOR_HPP_
#define SOCSIM_SIMULATOR_HPP_

#include <deque>

#include "socsim/rng.hpp"
#include "socsim/snapshot.hpp"

namespace socsim {

/// Actions an agent may attempt once per step.
enum class AgentAction : int { Acquaintance = 0, CommonTravel, Lodge, Visit };
inline constexpr int kAgentActionCount = 4;
const char* to_string(AgentAction action);

/// Interaction kinds emitted by an accepted action. Lodge and Visit emit a
/// second, companion kind.
InteractionKind primary_kind(AgentAction action);
std::optional<InteractionKind> companion_kind(AgentAction action);

/// Feature layout shared by the willingness functions: the five domain
/// activities, relation count, and recent-event load, each squashed to [0,1)
/// by x/(1+x).
inline constexpr int kInitiationFeatures = 7;
inline constexpr int kAcceptanceFeatures = 2; // relation strength, step load

struct InitiationWeights {
    std::array<double, kInitiationFeatures> w{};
    double bias = 0.0;
};

struct AcceptanceWeights {
    std::array<double, kAcceptanceFeatures> w{};
    double bias = 2.0; // ~0.88 baseline acceptance
};

/// Per-agent decision parameters. Biases are fitted by moment matching;
/// weights default to zero so fitted rates stay stationary.
struct DecisionParams {
    std::array<InitiationWeights, kAgentActionCount> initiation{};
    AcceptanceWeights acceptance{};
};

/// Initiation and acceptance probabilities for one step.
struct WillingnessVector {
    std::array<double, kAgentActionCount> initiation{};
    double acceptance = 0.0;
};

/// Relation state an agent keeps per partner: the raw contributions feeding
/// the shared accumulation rule, plus merged tags.
struct PartnerContributions {
    std::vector<WeightContribution> contributions;
    TokenCounts semantics;
};

struct AgentState {
    EntityId id;
    DomainActivity activity;                  // evolves via the decay update
    std::map<std::string, double> extra_attributes;
    RoleProfile profile;
    DecisionParams params;
    std::map<EntityId, PartnerContributions> outgoing; // raw relation inputs
    std::vector<RelationEdge> edges; // refreshed by update_relations
    std::deque<InteractionEvent> recent_events; // bounded buffer
    int step_load = 0; // events touching this agent in the current step

    /// Initiation feature vector at the current state.
    std::array<double, kInitiationFeatures> features() const;
};

/// Passive aggregate over one detected group.
struct GroupAgentState {
    Group group;
    DomainActivity mean_activity;
    std::map<std::string, double> relations_to_groups; // summed cross strengths
};

/// Arrival process: Poisson rate plus an empirical profile pool resampled for
/// each newcomer.
struct ArrivalProfile {
    std::array<double, kAgentActionCount> action_rate{}; // events/window
    DomainActivity initial_activity;
};

struct ArrivalModel {
    double rate = 0.0; // expected newcomers per step
    std::vector<ArrivalProfile> profiles;
};

struct SimConfig {
    int steps = 1;
    std::uint64_t seed = 0;
    double arrival_rate = -1.0;        // < 0: fit from the configuration log
    double explore_probability = 0.1;  // chance of a uniform non-neighbour partner
    double activity_decay = 0.9;       // per-step attribute retention
    double action_weight_scale = 1.0;  // calibration multiplier on fitted rates
    int event_buffer = 64;
    int fit_windows = 0;               // 0: use all available history
    SnapshotConfig snapshot;
    std::array<InitiationWeights, kAgentActionCount> initiation_defaults{};
    AcceptanceWeights acceptance_defaults{};

    void validate() const; // throws BadConfig
};

/// Simulation state between steps. Agents iterate in sorted id order.
struct SimWorld {
    Timestamp start_time = 0;
    int step_index = 0;
    std::map<EntityId, AgentState> agents;
    std::vector<GroupAgentState> group_agents;
    RelationGraph graph; // union of agent-local outgoing relations
    InteractionLog base_log; // observed history the society carries
    InteractionLog synthetic; // generated events only
    std::uint64_t arrival_counter = 0;

    Timestamp window_seconds = 0;
    Timestamp now() const { return start_time + step_index * window_seconds; }
};

/// sigma(w . x + b) per action kind.
WillingnessVector initiation_willingness(const AgentState& a, const DecisionParams& params);

/// Acceptance probability of `a` for a proposal from `proposer`; features are
/// the existing symmetrized relation strength and a's load this step.
double acceptance_willingness(const AgentState& a, const AgentState& proposer,
                              const RelationGraph& g, AgentAction action);

/// FOAF-weighted partner choice with epsilon-uniform exploration; never the
/// agent itself. Falls back to uniform over non-neighbours, then anybody.
EntityId select_partner(const AgentState& a, const std::vector<EntityId>& population,
                        const RelationGraph& g, Rng& rng, double explore_probability);

/// Exponential activity decay plus this step's own-initiated event strengths.
void update_attributes(AgentState& a, std::span<const InteractionEvent> own_step_events,
                       double activity_decay);

/// Appends the agent's initiated events to its relation view; edge strengths
/// are recomputed with the shared accumulation rule at `now`.
void update_relations(AgentState& a, std::span<const InteractionEvent> step_events,
                      const RelationConfig& cfg, Timestamp now);

/// One agent fitted so its expected per-action event rates reproduce the
/// rates observed for the entity in the configuration log.
AgentState fit_agent(const EntityId& id, const InteractionLog& log, Timestamp t,
                     const SimConfig& cfg);

/// One agent per snapshot entity, parameters moment-matched to the log.
/// Throws EmptySnapshot.
std::map<EntityId, AgentState> init_population(const SocietySnapshot& s,
                                               const InteractionLog& log, const SimConfig& cfg);

/// Arrival rate and newcomer profile pool estimated from the configuration
/// period of the log.
ArrivalModel fit_arrival_model(const InteractionLog& log, Timestamp t, const SimConfig& cfg);

/// World ready to step: agents from the snapshot at t0, arrival model fitted,
/// relation graph seeded from the snapshot edges.
SimWorld init_world(const InteractionLog& log, Timestamp t0, const SimConfig& cfg,
                    ArrivalModel* fitted_arrivals = nullptr);

/// One simulation step: arrivals, newcomer profiles, action sampling in
/// sorted id order, attribute/relation updates, group-agent refresh.
void step(SimWorld& world, const SimConfig& cfg, const ArrivalModel& arrivals, Rng& rng);

struct RunResult {
    SocietySnapshot final_snapshot;
    InteractionLog synthetic; // generated events only
    std::vector<RoleDistribution> trajectory; // one entry per step
};

/// Full run: cfg.steps steps from the society state at t0. The final snapshot
/// and the per-step trajectory are computed with the same analysis pipeline
/// used on observed data, over base history + generated events.
RunResult run(const InteractionLog& log, Timestamp t0, const SimConfig& cfg,
              bool with_trajectory = true);

} // namespace socsim

#endif
