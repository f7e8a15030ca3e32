#include "socsim/eval.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "socsim/error.hpp"
#include "socsim/io.hpp"

namespace socsim {

namespace {

using nlohmann::json;

json distribution_to_json(const RoleDistribution& d) {
    json out = json::object();
    for (int i = 0; i < kUserCategoryCount; ++i)
        out[to_string(static_cast<UserCategory>(i))] = d.fraction[i];
    return out;
}

RoleDistribution distribution_from_json(const json& j) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "distribution must be an object");
    RoleDistribution d;
    for (const auto& [key, value] : j.items()) {
        auto cat = parse_user_category(key);
        if (!cat) throw Error(ErrorCode::CategoryMismatch, "unknown category " + key);
        d[*cat] = value.get<double>();
    }
    return d;
}

/// Predicted society = observed history before t0 plus the generated events.
InteractionLog with_history(const InteractionLog& observed, Timestamp t0,
                            const InteractionLog& synthetic) {
    InteractionLog combined;
    std::vector<InteractionEvent> events;
    for (const auto& e : observed.events())
        if (e.time < t0) events.push_back(e);
    events.insert(events.end(), synthetic.events().begin(), synthetic.events().end());
    combined.bulk_load(std::move(events));
    return combined;
}

RoleDistribution cohort_distribution(const InteractionLog& log, Timestamp t_init,
                                     Timestamp t_eval, const SnapshotConfig& cfg) {
    auto assignment = assign_roles(log, t_eval, cfg);
    auto first = log.first_seen();
    std::map<EntityId, UserCategory> cohort;
    for (const auto& [id, cat] : assignment.categories) {
        auto it = first.find(id);
        if (it != first.end() && it->second > t_init) cohort.emplace(id, cat);
    }
    if (cohort.empty()) throw Error(ErrorCode::EmptyCohort, "no entities first seen after t_init");
    return role_distribution(cohort);
}

} // namespace

const char* to_string(PopulationScope scope) {
    return scope == PopulationScope::All ? "all" : "new_entities_only";
}

ComparisonReport compare_distributions(const RoleDistribution& observed,
                                       const RoleDistribution& predicted) {
    ComparisonReport r;
    r.observed = observed;
    r.predicted = predicted;
    for (int i = 0; i < kUserCategoryCount; ++i) {
        r.per_category_delta[i] = observed.fraction[i] - predicted.fraction[i];
        r.l1_distance += std::abs(r.per_category_delta[i]);
    }
    return r;
}

ComparisonReport compare_logs(const InteractionLog& observed, const InteractionLog& predicted,
                              Timestamp t_eval, const SnapshotConfig& cfg) {
    auto obs = role_distribution_at(observed, t_eval, cfg);
    auto pred = role_distribution_at(predicted, t_eval, cfg);
    return compare_distributions(obs, pred);
}

ComparisonReport compare_new_entities(const InteractionLog& observed,
                                      const InteractionLog& predicted, Timestamp t_init,
                                      Timestamp t_eval, const SnapshotConfig& cfg) {
    auto obs = cohort_distribution(observed, t_init, t_eval, cfg);
    auto pred = cohort_distribution(predicted, t_init, t_eval, cfg);
    auto r = compare_distributions(obs, pred);
    r.population_scope = PopulationScope::NewEntitiesOnly;
    return r;
}

CalibrationResult calibration_loop(const InteractionLog& observed, Timestamp split_time,
                                   const SimConfig& initial, const CalibrationOptions& opts) {
    initial.validate();
    bool has_before = false, has_after = false;
    for (const auto& e : observed.events()) {
        has_before |= e.time < split_time;
        has_after |= e.time >= split_time;
    }
    if (!has_before || !has_after)
        throw Error(ErrorCode::DegenerateSplit, "split leaves an empty config or holdout period");

    const Timestamp w = initial.snapshot.window_seconds;
    const int holdout_steps =
        static_cast<int>((observed.max_time() + 1 - split_time + w - 1) / w);
    const Timestamp t_end = split_time + static_cast<Timestamp>(holdout_steps) * w;

    auto evaluate = [&](const SimConfig& candidate) {
        SimConfig run_cfg = candidate;
        run_cfg.steps = holdout_steps;
        double sum = 0.0;
        for (int r = 0; r < opts.eval_runs; ++r) {
            run_cfg.seed = mix_seed(candidate.seed, static_cast<std::uint64_t>(r));
            auto result = run(observed, split_time, run_cfg, /*with_trajectory=*/false);
            auto predicted = with_history(observed, split_time, result.synthetic);
            sum += compare_logs(observed, predicted, t_end, run_cfg.snapshot).l1_distance;
        }
        return sum / static_cast<double>(opts.eval_runs);
    };

    CalibrationResult result;
    result.best = initial;
    result.best_l1 = evaluate(initial);
    result.history.push_back({0, initial.activity_decay, initial.snapshot.roles.observer_total,
                              initial.action_weight_scale, result.best_l1, true});

    for (int round = 1; round <= opts.max_rounds; ++round) {
        bool improved = false;
        // coordinate descent in fixed parameter order
        for (int param = 0; param < 3; ++param) {
            const auto& grid = param == 0   ? opts.decay_grid
                               : param == 1 ? opts.observer_grid
                                            : opts.scale_grid;
            for (double value : grid) {
                SimConfig candidate = result.best;
                if (param == 0)
                    candidate.activity_decay = value;
                else if (param == 1)
                    candidate.snapshot.roles.observer_total = value;
                else
                    candidate.action_weight_scale = value;
                double l1 = evaluate(candidate);
                bool accept = l1 < result.best_l1 - 1e-12;
                result.history.push_back({round, candidate.activity_decay,
                                          candidate.snapshot.roles.observer_total,
                                          candidate.action_weight_scale, l1, accept});
                if (accept) {
                    result.best = candidate;
                    result.best_l1 = l1;
                    improved = true;
                }
            }
        }
        if (!improved) break;
    }
    return result;
}

std::string emit_report(const ComparisonReport& r, ReportFormat format) {
    json echo;
    if (!r.config_echo.empty()) {
        echo = json::parse(r.config_echo, nullptr, false);
        if (echo.is_discarded()) echo = r.config_echo; // keep as raw string
    } else {
        echo = json::object();
    }

    if (format == ReportFormat::Json) {
        json out;
        out["observed"] = distribution_to_json(r.observed);
        out["predicted"] = distribution_to_json(r.predicted);
        out["l1_distance"] = r.l1_distance;
        json deltas = json::object();
        for (int i = 0; i < kUserCategoryCount; ++i)
            deltas[to_string(static_cast<UserCategory>(i))] = r.per_category_delta[i];
        out["per_category_delta"] = deltas;
        out["population_scope"] = to_string(r.population_scope);
        out["config_echo"] = echo;
        return out.dump(2) + "\n";
    }

    if (format == ReportFormat::Csv) {
        std::string out = "# config " + echo.dump() + "\n";
        out += "category,observed,predicted,delta\n";
        for (int i = 0; i < kUserCategoryCount; ++i) {
            out += to_string(static_cast<UserCategory>(i));
            out += ',' + format_double(r.observed.fraction[i]);
            out += ',' + format_double(r.predicted.fraction[i]);
            out += ',' + format_double(r.per_category_delta[i]);
            out += '\n';
        }
        return out;
    }

    // grouped bar chart, two bars per category
    const double width = 640.0, height = 420.0;
    const double left = 60.0, bottom = 360.0, top = 40.0;
    const double plot_w = width - left - 30.0;
    const double plot_h = bottom - top;
    const double group_w = plot_w / kUserCategoryCount;
    const double bar_w = group_w / 3.0;

    double max_frac = 0.0;
    for (int i = 0; i < kUserCategoryCount; ++i)
        max_frac = std::max({max_frac, r.observed.fraction[i], r.predicted.fraction[i]});
    if (max_frac <= 0.0) max_frac = 1.0;
    const double y_top = std::min(1.0, max_frac * 1.15);

    auto y_of = [&](double frac) { return bottom - frac / y_top * plot_h; };
    auto num = [&](double v) { return format_double(v); };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
           num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    svg += "<rect width=\"" + num(width) + "\" height=\"" + num(height) + "\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(width / 2) + "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">Role distribution, scope: " +
           std::string(to_string(r.population_scope)) + "</text>\n";

    // y axis with quarter gridlines
    for (int tick = 0; tick <= 4; ++tick) {
        double frac = y_top * tick / 4.0;
        double y = y_of(frac);
        svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(left + plot_w) + "\" y2=\"" + num(y) + "\" stroke=\"#dddddd\"/>\n";
        svg += "<text x=\"" + num(left - 6) + "\" y=\"" + num(y + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               num(std::round(frac * 1000.0) / 10.0) + "%</text>\n";
    }

    for (int i = 0; i < kUserCategoryCount; ++i) {
        const double gx = left + i * group_w;
        const double obs_h = bottom - y_of(r.observed.fraction[i]);
        const double pred_h = bottom - y_of(r.predicted.fraction[i]);
        svg += "<rect x=\"" + num(gx + bar_w / 2) + "\" y=\"" + num(bottom - obs_h) +
               "\" width=\"" + num(bar_w) + "\" height=\"" + num(obs_h) +
               "\" fill=\"#4878a8\"/>\n";
        svg += "<rect x=\"" + num(gx + bar_w * 3 / 2) + "\" y=\"" + num(bottom - pred_h) +
               "\" width=\"" + num(bar_w) + "\" height=\"" + num(pred_h) +
               "\" fill=\"#e0903f\"/>\n";
        svg += "<text x=\"" + num(gx + group_w / 2) + "\" y=\"" + num(bottom + 16) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
               to_string(static_cast<UserCategory>(i)) + "</text>\n";
    }

    svg += "<rect x=\"" + num(left) + "\" y=\"" + num(height - 30) +
           "\" width=\"12\" height=\"12\" fill=\"#4878a8\"/>\n";
    svg += "<text x=\"" + num(left + 18) + "\" y=\"" + num(height - 19) +
           "\" font-family=\"sans-serif\" font-size=\"12\">observed</text>\n";
    svg += "<rect x=\"" + num(left + 110) + "\" y=\"" + num(height - 30) +
           "\" width=\"12\" height=\"12\" fill=\"#e0903f\"/>\n";
    svg += "<text x=\"" + num(left + 128) + "\" y=\"" + num(height - 19) +
           "\" font-family=\"sans-serif\" font-size=\"12\">predicted</text>\n";
    svg += "<text x=\"" + num(left + 240) + "\" y=\"" + num(height - 19) +
           "\" font-family=\"sans-serif\" font-size=\"12\">L1 distance: " +
           num(r.l1_distance) + "</text>\n";
    svg += "</svg>\n";
    return svg;
}

ComparisonReport read_report_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::ParseError, "report is not valid JSON");
    if (!j.is_object() || !j.contains("observed") || !j.contains("predicted"))
        throw Error(ErrorCode::ParseError, "report needs observed and predicted distributions");

    ComparisonReport r;
    r.observed = distribution_from_json(j["observed"]);
    r.predicted = distribution_from_json(j["predicted"]);
    r.l1_distance = j.value("l1_distance", 0.0);
    if (j.contains("per_category_delta")) {
        auto deltas = distribution_from_json(j["per_category_delta"]);
        r.per_category_delta = deltas.fraction;
    }
    if (j.value("population_scope", "all") == std::string("new_entities_only"))
        r.population_scope = PopulationScope::NewEntitiesOnly;
    if (j.contains("config_echo")) {
        const auto& echo = j["config_echo"];
        r.config_echo = echo.is_string() ? echo.get<std::string>() : echo.dump();
    }
    return r;
}

} // namespace socsim
