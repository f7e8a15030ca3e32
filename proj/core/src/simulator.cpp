#include "socsim/simulator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "socsim/error.hpp"

namespace socsim {

namespace {

constexpr double kMinActionProb = 1e-4;
constexpr double kMaxActionProb = 0.995;

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }
double logit(double p) { return std::log(p / (1.0 - p)); }
double squash(double x) { return x / (1.0 + x); }

double symmetrized_strength(const RelationGraph& g, const EntityId& u, const EntityId& v) {
    double s = 0.0;
    if (const auto* e = g.edge(u, v)) s = std::max(s, e->strength);
    if (const auto* e = g.edge(v, u)) s = std::max(s, e->strength);
    return s;
}

/// Shared partner choice against a prebuilt view. `uid` may be absent from
/// the view (a newcomer); it then has no FOAF candidates or neighbours.
EntityId pick_partner(const EntityId& uid, const std::vector<EntityId>& population,
                      const GraphView& view, Rng& rng, double explore_probability) {
    const int u = view.index_of(uid);
    const bool explore = rng.bernoulli(explore_probability);

    if (!explore && u >= 0) {
        // two-hop candidates weighted by common-neighbour count
        std::map<int, int> paths;
        std::vector<char> direct(view.size(), 0);
        for (int v : view.undirected[u]) direct[v] = 1;
        for (int v : view.undirected[u])
            for (int w : view.undirected[v])
                if (w != u && !direct[w]) ++paths[w];
        if (!paths.empty()) {
            std::vector<double> weights;
            std::vector<int> ids;
            weights.reserve(paths.size());
            for (const auto& [w, c] : paths) {
                ids.push_back(w);
                weights.push_back(static_cast<double>(c));
            }
            return view.ids[ids[rng.weighted_index(weights)]];
        }
    }

    // uniform over non-neighbours, then over anybody else
    std::set<EntityId> excluded;
    excluded.insert(uid);
    if (u >= 0)
        for (int v : view.undirected[u]) excluded.insert(view.ids[v]);
    std::vector<EntityId> pool;
    pool.reserve(population.size());
    for (const auto& id : population)
        if (!excluded.count(id)) pool.push_back(id);
    if (pool.empty()) {
        for (const auto& id : population)
            if (id != uid) pool.push_back(id);
    }
    if (pool.empty()) throw Error(ErrorCode::EmptyPopulation, "no partner available");
    return pool[rng.below(pool.size())];
}

std::array<double, kAgentActionCount> observed_action_rates(const InteractionLog& log,
                                                            const EntityId& id, Timestamp t,
                                                            const SimConfig& cfg) {
    const Timestamp w = cfg.snapshot.window_seconds;
    Timestamp span_windows;
    if (cfg.fit_windows > 0) {
        span_windows = cfg.fit_windows;
    } else if (!log.empty() && log.min_time() < t) {
        span_windows = (t - log.min_time() + w - 1) / w;
    } else {
        span_windows = 1;
    }
    const Timestamp fit_start = t - span_windows * w;

    // exposure: windows the entity has been around for
    Timestamp first = t;
    for (const auto& e : log.window({fit_start, t})) {
        if (e.initiator == id || e.receiver == id) {
            first = e.time;
            break;
        }
    }
    Timestamp exposure = std::min<Timestamp>(span_windows, (t - first + w - 1) / w);
    exposure = std::max<Timestamp>(exposure, 1);

    std::array<double, kAgentActionCount> counts{};
    for (const auto& e : log.window({fit_start, t})) {
        if (e.initiator != id) continue;
        for (int a = 0; a < kAgentActionCount; ++a)
            if (e.kind == primary_kind(static_cast<AgentAction>(a))) counts[a] += 1.0;
    }
    for (double& c : counts) c /= static_cast<double>(exposure);
    return counts;
}

DecisionParams fit_params(const std::array<double, kAgentActionCount>& rates,
                          const std::array<double, kInitiationFeatures>& features,
                          const SimConfig& cfg) {
    DecisionParams params;
    params.acceptance = cfg.acceptance_defaults;
    const double accept = sigmoid(cfg.acceptance_defaults.bias);
    for (int a = 0; a < kAgentActionCount; ++a) {
        auto& init = params.initiation[a];
        init.w = cfg.initiation_defaults[a].w;
        // moment match: realized rate = p * accept, solve the bias for p
        double p = std::clamp(cfg.action_weight_scale * rates[a] / accept, kMinActionProb,
                              kMaxActionProb);
        double wx = 0.0;
        for (int f = 0; f < kInitiationFeatures; ++f) wx += init.w[f] * features[f];
        init.bias = logit(p) - wx;
    }
    return params;
}

DomainActivity activity_from_rates(const std::array<double, kAgentActionCount>& rates) {
    DomainActivity a;
    a[DomainRole::Friendsmaker] = rates[static_cast<int>(AgentAction::Acquaintance)];
    a[DomainRole::Traveller] = rates[static_cast<int>(AgentAction::CommonTravel)];
    a[DomainRole::Host] = 2.0 * rates[static_cast<int>(AgentAction::Lodge)];
    a[DomainRole::Surfer] = 2.0 * rates[static_cast<int>(AgentAction::Visit)];
    return a;
}

EntityId arrival_id(std::uint64_t counter) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "sim%06llu", static_cast<unsigned long long>(counter));
    return buf;
}

/// First arrival counter that cannot collide with an existing "simNNN" id.
std::uint64_t next_arrival_counter(const std::map<EntityId, AgentState>& agents) {
    std::uint64_t max_seen = 0;
    for (const auto& [id, agent] : agents) {
        if (id.rfind("sim", 0) != 0) continue;
        std::uint64_t n = 0;
        bool numeric = id.size() > 3;
        for (std::size_t i = 3; i < id.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(id[i]))) {
                numeric = false;
                break;
            }
            n = n * 10 + (id[i] - '0');
        }
        if (numeric) max_seen = std::max(max_seen, n);
    }
    return max_seen + 1;
}

void seed_agent_relations(std::map<EntityId, AgentState>& agents, const RelationGraph& g,
                          const RelationConfig& cfg, Timestamp t0) {
    // one pseudo-contribution per existing edge reproduces its weight at t0
    for (const auto& [key, edge] : g.edges()) {
        auto it = agents.find(key.first);
        if (it == agents.end()) continue;
        auto& partner = it->second.outgoing[key.second];
        double implied = cfg.saturation * edge.strength / (1.0 - edge.strength);
        partner.contributions.push_back({implied, t0});
        merge_tokens(partner.semantics, edge.semantics);
    }
    for (auto& [id, agent] : agents) {
        std::span<const InteractionEvent> none;
        update_relations(agent, none, cfg, t0);
    }
}

void refresh_group_agents(SimWorld& world, int cpm_k) {
    world.group_agents.clear();
    auto groups = cpm_communities(world.graph, cpm_k, world.graph.as_of());

    std::map<EntityId, std::vector<std::size_t>> member_groups;
    for (std::size_t gi = 0; gi < groups.size(); ++gi)
        for (const auto& m : groups[gi].members) member_groups[m].push_back(gi);

    std::vector<GroupAgentState> agents(groups.size());
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        agents[gi].group = groups[gi];
        DomainActivity mean;
        for (const auto& m : groups[gi].members) {
            auto it = world.agents.find(m);
            if (it == world.agents.end()) continue;
            for (int i = 0; i < kDomainRoleCount; ++i)
                mean.value[i] += it->second.activity.value[i];
        }
        for (int i = 0; i < kDomainRoleCount; ++i)
            mean.value[i] /= static_cast<double>(groups[gi].members.size());
        agents[gi].mean_activity = mean;
    }
    for (const auto& [key, edge] : world.graph.edges()) {
        auto ug = member_groups.find(key.first);
        auto vg = member_groups.find(key.second);
        if (ug == member_groups.end() || vg == member_groups.end()) continue;
        for (auto gu : ug->second)
            for (auto gv : vg->second) {
                if (gu == gv) continue;
                agents[gu].relations_to_groups[groups[gv].id] += edge.strength;
            }
    }
    world.group_agents = std::move(agents);
}

void rebuild_world_graph(SimWorld& world, Timestamp now) {
    RelationGraph g(now);
    for (const auto& [id, agent] : world.agents) {
        g.add_node(id);
        for (const auto& e : agent.edges) g.add_edge(e);
    }
    world.graph = std::move(g);
}

} // namespace

const char* to_string(AgentAction action) {
    switch (action) {
        case AgentAction::Acquaintance: return "acquaintance";
        case AgentAction::CommonTravel: return "common_travel";
        case AgentAction::Lodge: return "lodge";
        case AgentAction::Visit: return "visit";
    }
    return "unknown";
}

InteractionKind primary_kind(AgentAction action) {
    switch (action) {
        case AgentAction::Acquaintance: return InteractionKind::FriendRequest;
        case AgentAction::CommonTravel: return InteractionKind::TravelSearch;
        case AgentAction::Lodge: return InteractionKind::HostOffer;
        case AgentAction::Visit: return InteractionKind::SurfRequest;
    }
    return InteractionKind::FriendRequest;
}

std::optional<InteractionKind> companion_kind(AgentAction action) {
    switch (action) {
        case AgentAction::Lodge: return InteractionKind::StayHosted;
        case AgentAction::Visit: return InteractionKind::StayGuest;
        default: return std::nullopt;
    }
}

void SimConfig::validate() const {
    if (steps < 1) throw Error(ErrorCode::BadConfig, "steps must be >= 1");
    if (explore_probability < 0.0 || explore_probability > 1.0)
        throw Error(ErrorCode::BadConfig, "explore_probability must be in [0,1]");
    if (activity_decay < 0.0 || activity_decay >= 1.0)
        throw Error(ErrorCode::BadConfig, "activity_decay must be in [0,1)");
    if (action_weight_scale <= 0.0)
        throw Error(ErrorCode::BadConfig, "action_weight_scale must be > 0");
    if (event_buffer < 1) throw Error(ErrorCode::BadConfig, "event_buffer must be >= 1");
    if (fit_windows < 0) throw Error(ErrorCode::BadConfig, "fit_windows must be >= 0");
    snapshot.validate();
}

std::array<double, kInitiationFeatures> AgentState::features() const {
    std::array<double, kInitiationFeatures> x{};
    for (int i = 0; i < kDomainRoleCount; ++i) x[i] = squash(activity.value[i]);
    x[5] = squash(static_cast<double>(outgoing.size()));
    x[6] = recent_events.empty() ? 0.0 : squash(static_cast<double>(recent_events.size()));
    return x;
}

WillingnessVector initiation_willingness(const AgentState& a, const DecisionParams& params) {
    const auto x = a.features();
    WillingnessVector wv;
    for (int k = 0; k < kAgentActionCount; ++k) {
        const auto& init = params.initiation[k];
        double z = init.bias;
        for (int f = 0; f < kInitiationFeatures; ++f) z += init.w[f] * x[f];
        wv.initiation[k] = sigmoid(z);
    }
    wv.acceptance = sigmoid(params.acceptance.bias +
                            params.acceptance.w[1] * squash(static_cast<double>(a.step_load)));
    return wv;
}

double acceptance_willingness(const AgentState& a, const AgentState& proposer,
                              const RelationGraph& g, AgentAction) {
    const auto& acc = a.params.acceptance;
    double z = acc.bias;
    z += acc.w[0] * symmetrized_strength(g, a.id, proposer.id);
    z += acc.w[1] * squash(static_cast<double>(a.step_load));
    return sigmoid(z);
}

EntityId select_partner(const AgentState& a, const std::vector<EntityId>& population,
                        const RelationGraph& g, Rng& rng, double explore_probability) {
    if (population.size() < 2)
        throw Error(ErrorCode::EmptyPopulation, "partner selection needs >= 2 entities");
    GraphView view(g);
    return pick_partner(a.id, population, view, rng, explore_probability);
}

void update_attributes(AgentState& a, std::span<const InteractionEvent> own_step_events,
                       double activity_decay) {
    DomainActivity gained;
    for (const auto& e : own_step_events) {
        if (e.initiator == a.id) gained[role_of_kind(e.kind)] += e.strength;
    }
    for (int i = 0; i < kDomainRoleCount; ++i)
        a.activity.value[i] = activity_decay * a.activity.value[i] + gained.value[i];
}

void update_relations(AgentState& a, std::span<const InteractionEvent> step_events,
                      const RelationConfig& cfg, Timestamp now) {
    for (const auto& e : step_events) {
        if (e.initiator != a.id) continue;
        auto& partner = a.outgoing[e.receiver];
        partner.contributions.push_back({e.strength, e.time});
        merge_tokens(partner.semantics, e.tags);
    }
    a.edges.clear();
    for (const auto& [receiver, stream] : a.outgoing) {
        auto edge = relation_from_contributions(a.id, receiver, stream.contributions,
                                                stream.semantics, cfg, now);
        if (edge) a.edges.push_back(std::move(*edge));
    }
}

AgentState fit_agent(const EntityId& id, const InteractionLog& log, Timestamp t,
                     const SimConfig& cfg) {
    AgentState a;
    a.id = id;
    a.activity = domain_activity(log, id, {t - cfg.snapshot.window_seconds, t});
    auto rates = observed_action_rates(log, id, t, cfg);
    a.params = fit_params(rates, a.features(), cfg);
    return a;
}

std::map<EntityId, AgentState> init_population(const SocietySnapshot& s,
                                               const InteractionLog& log, const SimConfig& cfg) {
    if (s.entities.empty()) throw Error(ErrorCode::EmptySnapshot, "no entities to simulate");
    std::map<EntityId, AgentState> agents;
    for (const auto& id : s.entities) {
        AgentState a = fit_agent(id, log, s.time, cfg);
        if (auto it = s.roles.find(id); it != s.roles.end()) a.profile = it->second;
        agents.emplace(id, std::move(a));
    }
    return agents;
}

ArrivalModel fit_arrival_model(const InteractionLog& log, Timestamp t, const SimConfig& cfg) {
    ArrivalModel model;
    const Timestamp w = cfg.snapshot.window_seconds;
    Timestamp span_windows;
    if (cfg.fit_windows > 0) {
        span_windows = cfg.fit_windows;
    } else if (!log.empty() && log.min_time() < t) {
        span_windows = (t - log.min_time() + w - 1) / w;
    } else {
        span_windows = 1;
    }

    std::vector<EntityId> newcomers;
    std::vector<EntityId> everyone;
    const Timestamp newcomer_cutoff = t - (span_windows - 1) * w;
    for (const auto& [id, first] : log.first_seen()) {
        if (first >= t) continue;
        everyone.push_back(id);
        if (span_windows >= 2 && first >= newcomer_cutoff) newcomers.push_back(id);
    }

    model.rate = span_windows >= 2 ? static_cast<double>(newcomers.size()) /
                                         static_cast<double>(span_windows - 1)
                                   : 0.0;

    const auto& pool = newcomers.empty() ? everyone : newcomers;
    for (const auto& id : pool) {
        ArrivalProfile p;
        p.action_rate = observed_action_rates(log, id, t, cfg);
        p.initial_activity = activity_from_rates(p.action_rate);
        model.profiles.push_back(std::move(p));
    }
    return model;
}

SimWorld init_world(const InteractionLog& log, Timestamp t0, const SimConfig& cfg,
                    ArrivalModel* fitted_arrivals) {
    cfg.validate();
    SocietySnapshot s = snapshot(log, t0, cfg.snapshot);
    if (s.entities.empty()) throw Error(ErrorCode::EmptySnapshot, "no entities before t0");

    SimWorld world;
    world.start_time = t0;
    world.window_seconds = cfg.snapshot.window_seconds;

    // the society carries only its past into the simulation
    std::vector<InteractionEvent> history;
    for (const auto& e : log.events())
        if (e.time < t0) history.push_back(e);
    world.base_log.bulk_load(std::move(history));

    world.agents = init_population(s, world.base_log, cfg);
    seed_agent_relations(world.agents, s.relations, cfg.snapshot.relation, t0);
    world.arrival_counter = next_arrival_counter(world.agents);
    rebuild_world_graph(world, t0);
    refresh_group_agents(world, cfg.snapshot.cpm_k);

    if (fitted_arrivals) {
        *fitted_arrivals = fit_arrival_model(world.base_log, t0, cfg);
        if (cfg.arrival_rate >= 0.0) fitted_arrivals->rate = cfg.arrival_rate;
    }
    return world;
}

void step(SimWorld& world, const SimConfig& cfg, const ArrivalModel& arrivals, Rng& rng) {
    const Timestamp step_start = world.now();
    const Timestamp step_end = step_start + world.window_seconds;
    const Timestamp event_time = step_start + world.window_seconds / 2;

    // (1) arrivals, (2) their roles/profiles
    const int n_new = rng.poisson(arrivals.rate);
    DomainActivity population_max;
    for (const auto& [id, agent] : world.agents)
        for (int i = 0; i < kDomainRoleCount; ++i)
            population_max.value[i] = std::max(population_max.value[i], agent.activity.value[i]);
    for (int i = 0; i < n_new; ++i) {
        AgentState a;
        a.id = arrival_id(world.arrival_counter++);
        if (!arrivals.profiles.empty()) {
            const auto& profile = arrivals.profiles[rng.below(arrivals.profiles.size())];
            a.activity = profile.initial_activity;
            a.params = fit_params(profile.action_rate, a.features(), cfg);
        } else {
            a.params = fit_params({}, a.features(), cfg);
        }
        a.profile = role_strengths(a.activity, population_max);
        world.agents.emplace(a.id, std::move(a));
    }

    std::vector<EntityId> population;
    population.reserve(world.agents.size());
    for (const auto& [id, agent] : world.agents) population.push_back(id);

    GraphView view(world.graph);
    for (auto& [id, agent] : world.agents) agent.step_load = 0;

    // (3) actions in sorted id order; receivers accept or reject
    std::vector<InteractionEvent> batch;
    if (population.size() >= 2) {
        for (auto& [id, agent] : world.agents) {
            WillingnessVector wv = initiation_willingness(agent, agent.params);
            for (int k = 0; k < kAgentActionCount; ++k) {
                if (!rng.bernoulli(wv.initiation[k])) continue;
                auto action = static_cast<AgentAction>(k);
                EntityId partner_id =
                    pick_partner(id, population, view, rng, cfg.explore_probability);
                AgentState& partner = world.agents.at(partner_id);
                double p_accept = acceptance_willingness(partner, agent, world.graph, action);
                if (!rng.bernoulli(p_accept)) continue;

                InteractionEvent e;
                e.initiator = id;
                e.receiver = partner_id;
                e.kind = primary_kind(action);
                e.time = event_time;
                e.strength = 1.0;
                batch.push_back(e);
                if (auto companion = companion_kind(action)) {
                    e.kind = *companion;
                    batch.push_back(e);
                }
                agent.step_load += 1;
                partner.step_load += 1;
            }
        }
    }

    // canonical order inside the step so re-ingesting the emitted CSV
    // reproduces the in-memory log byte for byte
    std::stable_sort(batch.begin(), batch.end(), event_order_lt);
    for (const auto& e : batch) world.synthetic.append(e);

    // (4) attribute and relation updates for every agent
    std::map<EntityId, std::vector<InteractionEvent>> by_participant;
    for (const auto& e : batch) {
        by_participant[e.initiator].push_back(e);
        by_participant[e.receiver].push_back(e);
    }
    const std::vector<InteractionEvent> no_events;
    for (auto& [id, agent] : world.agents) {
        auto it = by_participant.find(id);
        const auto& own = it == by_participant.end() ? no_events : it->second;
        update_attributes(agent, own, cfg.activity_decay);
        update_relations(agent, own, cfg.snapshot.relation, step_end);
        for (const auto& e : own) {
            agent.recent_events.push_back(e);
            while (static_cast<int>(agent.recent_events.size()) > cfg.event_buffer)
                agent.recent_events.pop_front();
        }
    }

    rebuild_world_graph(world, step_end);

    // (5) group agents refresh their aggregates
    refresh_group_agents(world, cfg.snapshot.cpm_k);

    world.step_index += 1;
}

RunResult run(const InteractionLog& log, Timestamp t0, const SimConfig& cfg,
              bool with_trajectory) {
    ArrivalModel arrivals;
    SimWorld world = init_world(log, t0, cfg, &arrivals);
    Rng rng(cfg.seed);

    InteractionLog combined = world.base_log;
    RunResult result;
    for (int k = 0; k < cfg.steps; ++k) {
        const std::size_t appended = world.synthetic.size();
        step(world, cfg, arrivals, rng);
        for (std::size_t i = appended; i < world.synthetic.size(); ++i)
            combined.append(world.synthetic.events()[i]);
        if (with_trajectory)
            result.trajectory.push_back(
                role_distribution_at(combined, world.now(), cfg.snapshot));
    }
    result.final_snapshot = snapshot(combined, world.now(), cfg.snapshot);
    result.synthetic = world.synthetic;
    return result;
}

} // namespace socsim
