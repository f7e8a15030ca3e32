#include "socsim/config.hpp"

#include <nlohmann/json.hpp>

#include "socsim/error.hpp"
#include "socsim/io.hpp"

namespace socsim {

namespace {

using nlohmann::json;

void require_keys(const json& j, std::initializer_list<const char*> allowed,
                  const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw Error(ErrorCode::BadConfig, "unknown key '" + key + "' in " + where);
    }
}

double get_number(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw Error(ErrorCode::BadConfig, std::string(key) + " must be a number");
    return j[key].get<double>();
}

std::int64_t get_int(const json& j, const char* key, std::int64_t fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer())
        throw Error(ErrorCode::BadConfig, std::string(key) + " must be an integer");
    return j[key].get<std::int64_t>();
}

std::vector<double> get_grid(const json& j, const char* key, std::vector<double> fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_array()) throw Error(ErrorCode::BadConfig, std::string(key) + " must be an array");
    auto grid = j[key].get<std::vector<double>>();
    if (grid.empty()) throw Error(ErrorCode::BadConfig, std::string(key) + " must not be empty");
    return grid;
}

json relation_to_json(const RelationConfig& c) {
    json out;
    out["decay_rate"] = c.decay_rate;
    out["min_weight"] = c.min_weight;
    out["saturation"] = c.saturation;
    return out;
}

json roles_to_json(const RoleThresholds& t) {
    json out;
    out["observer_total"] = t.observer_total;
    out["active"] = t.active;
    out["low"] = t.low;
    return out;
}

json snapshot_to_json(const SnapshotConfig& s) {
    json out;
    out["window_seconds"] = s.window_seconds;
    out["lookback_windows"] = s.lookback_windows;
    out["cpm_k"] = s.cpm_k;
    out["relation"] = relation_to_json(s.relation);
    out["roles"] = roles_to_json(s.roles);
    return out;
}

json sim_to_json(const SimConfig& c) {
    json out;
    out["steps"] = c.steps;
    out["seed"] = c.seed;
    out["arrival_rate"] = c.arrival_rate;
    out["explore_probability"] = c.explore_probability;
    out["activity_decay"] = c.activity_decay;
    out["action_weight_scale"] = c.action_weight_scale;
    out["event_buffer"] = c.event_buffer;
    out["fit_windows"] = c.fit_windows;
    out["acceptance_bias"] = c.acceptance_defaults.bias;
    return out;
}

} // namespace

std::string AppConfig::echo_json() const {
    json out;
    out["snapshot"] = snapshot_to_json(snapshot);
    out["sim"] = sim_to_json(sim);
    json cal;
    cal["max_rounds"] = calibration.max_rounds;
    cal["eval_runs"] = calibration.eval_runs;
    cal["decay_grid"] = calibration.decay_grid;
    cal["observer_grid"] = calibration.observer_grid;
    cal["scale_grid"] = calibration.scale_grid;
    out["calibration"] = cal;
    json lp;
    lp["model"] = to_string(link_model);
    lp["policy"] = link_policy == CandidatePolicy::Foaf ? "foaf" : "all_non_edges";
    lp["topk"] = link_topk;
    out["linkpred"] = lp;
    return out.dump();
}

AppConfig parse_config_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::BadConfig, "config is not valid JSON");
    if (!j.is_object()) throw Error(ErrorCode::BadConfig, "config must be a JSON object");

    AppConfig cfg;
    require_keys(j, {"window_seconds", "snapshot", "relation", "roles", "sim", "linkpred",
                     "calibration"},
                 "config");

    cfg.snapshot.window_seconds = get_int(j, "window_seconds", cfg.snapshot.window_seconds);

    if (j.contains("snapshot")) {
        const auto& s = j["snapshot"];
        require_keys(s, {"window_seconds", "lookback_windows", "cpm_k"}, "snapshot");
        cfg.snapshot.window_seconds = get_int(s, "window_seconds", cfg.snapshot.window_seconds);
        cfg.snapshot.lookback_windows =
            static_cast<int>(get_int(s, "lookback_windows", cfg.snapshot.lookback_windows));
        cfg.snapshot.cpm_k = static_cast<int>(get_int(s, "cpm_k", cfg.snapshot.cpm_k));
    }
    if (j.contains("relation")) {
        const auto& r = j["relation"];
        require_keys(r, {"decay_rate", "min_weight", "saturation"}, "relation");
        cfg.snapshot.relation.decay_rate = get_number(r, "decay_rate", cfg.snapshot.relation.decay_rate);
        cfg.snapshot.relation.min_weight = get_number(r, "min_weight", cfg.snapshot.relation.min_weight);
        cfg.snapshot.relation.saturation = get_number(r, "saturation", cfg.snapshot.relation.saturation);
    }
    if (j.contains("roles")) {
        const auto& r = j["roles"];
        require_keys(r, {"observer_total", "active", "low"}, "roles");
        cfg.snapshot.roles.observer_total = get_number(r, "observer_total", cfg.snapshot.roles.observer_total);
        cfg.snapshot.roles.active = get_number(r, "active", cfg.snapshot.roles.active);
        cfg.snapshot.roles.low = get_number(r, "low", cfg.snapshot.roles.low);
    }
    if (j.contains("sim")) {
        const auto& s = j["sim"];
        require_keys(s, {"steps", "seed", "arrival_rate", "explore_probability", "activity_decay",
                         "action_weight_scale", "event_buffer", "fit_windows", "acceptance_bias"},
                     "sim");
        cfg.sim.steps = static_cast<int>(get_int(s, "steps", cfg.sim.steps));
        if (s.contains("seed")) cfg.sim.seed = s["seed"].get<std::uint64_t>();
        cfg.sim.arrival_rate = get_number(s, "arrival_rate", cfg.sim.arrival_rate);
        cfg.sim.explore_probability = get_number(s, "explore_probability", cfg.sim.explore_probability);
        cfg.sim.activity_decay = get_number(s, "activity_decay", cfg.sim.activity_decay);
        cfg.sim.action_weight_scale = get_number(s, "action_weight_scale", cfg.sim.action_weight_scale);
        cfg.sim.event_buffer = static_cast<int>(get_int(s, "event_buffer", cfg.sim.event_buffer));
        cfg.sim.fit_windows = static_cast<int>(get_int(s, "fit_windows", cfg.sim.fit_windows));
        cfg.sim.acceptance_defaults.bias = get_number(s, "acceptance_bias", cfg.sim.acceptance_defaults.bias);
    }
    if (j.contains("linkpred")) {
        const auto& lp = j["linkpred"];
        require_keys(lp, {"model", "policy", "topk"}, "linkpred");
        if (lp.contains("model")) {
            auto model = parse_link_model(lp["model"].get<std::string>());
            if (!model) throw Error(ErrorCode::BadConfig, "unknown link model");
            cfg.link_model = *model;
        }
        if (lp.contains("policy")) {
            const auto policy = lp["policy"].get<std::string>();
            if (policy == "foaf")
                cfg.link_policy = CandidatePolicy::Foaf;
            else if (policy == "all_non_edges")
                cfg.link_policy = CandidatePolicy::AllNonEdges;
            else
                throw Error(ErrorCode::BadConfig, "unknown candidate policy " + policy);
        }
        cfg.link_topk = static_cast<std::size_t>(get_int(lp, "topk", static_cast<std::int64_t>(cfg.link_topk)));
    }
    if (j.contains("calibration")) {
        const auto& c = j["calibration"];
        require_keys(c, {"max_rounds", "eval_runs", "decay_grid", "observer_grid", "scale_grid"},
                     "calibration");
        cfg.calibration.max_rounds = static_cast<int>(get_int(c, "max_rounds", cfg.calibration.max_rounds));
        cfg.calibration.eval_runs = static_cast<int>(get_int(c, "eval_runs", cfg.calibration.eval_runs));
        cfg.calibration.decay_grid = get_grid(c, "decay_grid", cfg.calibration.decay_grid);
        cfg.calibration.observer_grid = get_grid(c, "observer_grid", cfg.calibration.observer_grid);
        cfg.calibration.scale_grid = get_grid(c, "scale_grid", cfg.calibration.scale_grid);
    }

    cfg.sim.snapshot = cfg.snapshot;
    try {
        cfg.snapshot.validate();
        cfg.sim.validate();
    } catch (const Error& e) {
        throw Error(ErrorCode::BadConfig, e.what());
    }
    return cfg;
}

AppConfig load_config_file(const std::filesystem::path& path) {
    return parse_config_json(read_text_file(path));
}

std::string write_sim_config_json(const SimConfig& cfg) {
    json out;
    out["sim"] = sim_to_json(cfg);
    out["snapshot"] = snapshot_to_json(cfg.snapshot);
    return out.dump(2) + "\n";
}

} // namespace socsim
