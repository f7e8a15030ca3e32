// Pipeline driver: ingestion, analysis, link prediction, role assignment,
// simulation, calibration, and observed-vs-predicted comparison reports.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "socsim/config.hpp"
#include "socsim/error.hpp"
#include "socsim/io.hpp"

namespace fs = std::filesystem;
using namespace socsim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitConfigError = 3;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::BadConfig:
        case ErrorCode::BadThresholds:
        case ErrorCode::BadK: return kExitConfigError;
        default: return kExitBadInput;
    }
}

struct GlobalArgs {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    Timestamp window = 0;
    bool window_set = false;
    std::string out_dir = "out";

    AppConfig resolve() const {
        AppConfig cfg;
        if (!config_path.empty()) cfg = load_config_file(config_path);
        if (window_set) {
            cfg.snapshot.window_seconds = window;
            cfg.sim.snapshot.window_seconds = window;
        }
        if (seed_set) cfg.sim.seed = seed;
        return cfg;
    }
};

Timestamp default_at(const InteractionLog& log) { return log.max_time() + 1; }

void emit(const fs::path& path, const std::string& content) {
    write_text_file(path, content);
    std::cout << "wrote " << path.string() << "\n";
}

std::string trajectory_csv(const std::vector<RoleDistribution>& traj, Timestamp t0, Timestamp w) {
    std::string out = "step,time";
    for (int c = 0; c < kUserCategoryCount; ++c)
        out += std::string(",") + to_string(static_cast<UserCategory>(c));
    out += '\n';
    for (std::size_t i = 0; i < traj.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',' + std::to_string(t0 + static_cast<Timestamp>(i + 1) * w);
        for (int c = 0; c < kUserCategoryCount; ++c)
            out += ',' + format_double(traj[i].fraction[c]);
        out += '\n';
    }
    return out;
}

std::string history_csv(const CalibrationResult& result) {
    std::string out = "round,activity_decay,observer_total,action_weight_scale,l1,accepted\n";
    for (const auto& h : result.history) {
        out += std::to_string(h.round);
        out += ',' + format_double(h.activity_decay);
        out += ',' + format_double(h.observer_total);
        out += ',' + format_double(h.action_weight_scale);
        out += ',' + format_double(h.holdout_l1);
        out += ',' + std::string(h.accepted ? "1" : "0");
        out += '\n';
    }
    return out;
}

InteractionLog merge_history(const InteractionLog& base, Timestamp t0,
                             const InteractionLog& synthetic) {
    std::vector<InteractionEvent> events;
    for (const auto& e : base.events())
        if (e.time < t0) events.push_back(e);
    events.insert(events.end(), synthetic.events().begin(), synthetic.events().end());
    InteractionLog combined;
    combined.bulk_load(std::move(events));
    return combined;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"temporal social-network analysis and society simulation"};
    app.require_subcommand(1);

    GlobalArgs g;
    app.add_option("--config", g.config_path, "JSON config file");
    auto* seed_opt = app.add_option("--seed", g.seed, "simulation seed (overrides config)");
    auto* window_opt = app.add_option("--window", g.window, "analysis window in seconds");
    app.add_option("--out", g.out_dir, "output directory")->capture_default_str();

    // ingest
    std::vector<std::string> ingest_inputs;
    auto* cmd_ingest = app.add_subcommand("ingest", "normalize event files into canonical CSV");
    cmd_ingest->add_option("inputs", ingest_inputs, "event files (CSV or JSONL)")->required();

    // analyze
    std::string in_analyze;
    Timestamp at_analyze = -1;
    auto* cmd_analyze = app.add_subcommand("analyze", "derive a society snapshot with SNA metrics");
    cmd_analyze->add_option("input", in_analyze, "event file")->required();
    cmd_analyze->add_option("--at", at_analyze, "snapshot time (default: last event + 1)");

    // communities
    std::string in_comm;
    Timestamp at_comm = -1;
    int comm_windows = 1;
    auto* cmd_comm = app.add_subcommand("communities", "detect overlapping groups and evolution");
    cmd_comm->add_option("input", in_comm, "event file")->required();
    cmd_comm->add_option("--at", at_comm, "analysis time (default: last event + 1)");
    cmd_comm->add_option("--windows", comm_windows, "number of trailing windows to track")
        ->capture_default_str();

    // predict-links
    std::string in_pred, pred_model, pred_policy;
    Timestamp at_pred = -1, holdout_pred = -1;
    std::size_t pred_topk = 0;
    auto* cmd_pred = app.add_subcommand("predict-links", "rank likely future relations");
    cmd_pred->add_option("input", in_pred, "event file")->required();
    cmd_pred->add_option("--at", at_pred, "training time (default: last event + 1)");
    cmd_pred->add_option("--model", pred_model, "CN, AA, PA or FOAF");
    cmd_pred->add_option("--topk", pred_topk, "list length");
    cmd_pred->add_option("--policy", pred_policy, "candidate policy: foaf or all_non_edges");
    cmd_pred->add_option("--holdout", holdout_pred,
                         "evaluate against edges appearing by this time");

    // assign-roles
    std::string in_roles;
    Timestamp at_roles = -1;
    auto* cmd_roles = app.add_subcommand("assign-roles", "classify users into the six categories");
    cmd_roles->add_option("input", in_roles, "event file")->required();
    cmd_roles->add_option("--at", at_roles, "analysis time (default: last event + 1)");

    // simulate
    std::string in_sim;
    Timestamp at_sim = -1;
    int sim_steps = 0;
    auto* cmd_sim = app.add_subcommand("simulate", "run the agent-based evolution model");
    cmd_sim->add_option("input", in_sim, "event file (configuration history)")->required();
    cmd_sim->add_option("--at", at_sim, "simulation start (default: last event + 1)");
    cmd_sim->add_option("--steps", sim_steps, "steps to simulate (default from config)");

    // calibrate
    std::string in_cal;
    Timestamp cal_split = -1;
    double cal_frac = 0.3;
    int cal_rounds = -1;
    auto* cmd_cal = app.add_subcommand("calibrate", "fit simulator knobs against a holdout period");
    cmd_cal->add_option("input", in_cal, "event file")->required();
    cmd_cal->add_option("--split", cal_split, "config/holdout boundary time");
    cmd_cal->add_option("--split-frac", cal_frac, "boundary as a fraction of the log span")
        ->capture_default_str();
    cmd_cal->add_option("--rounds", cal_rounds, "coordinate-descent rounds (default from config)");

    // compare
    std::string cmp_observed, cmp_predicted, cmp_scope = "all";
    Timestamp cmp_at = -1, cmp_tinit = -1;
    auto* cmd_cmp = app.add_subcommand("compare", "observed vs predicted role distributions");
    cmd_cmp->add_option("--observed", cmp_observed, "observed event file")->required();
    cmd_cmp->add_option("--predicted", cmp_predicted, "predicted event file")->required();
    cmd_cmp->add_option("--at", cmp_at, "evaluation time (default: last event + 1)");
    cmd_cmp->add_option("--t-init", cmp_tinit, "cohort boundary for --scope new");
    cmd_cmp->add_option("--scope", cmp_scope, "all or new")->capture_default_str();

    // report
    std::string in_report, report_format = "all";
    auto* cmd_report = app.add_subcommand("report", "render a comparison report");
    cmd_report->add_option("input", in_report, "report JSON file")->required();
    cmd_report->add_option("--format", report_format, "csv, json, svg or all")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitBadInput;
    }

    g.seed_set = seed_opt->count() > 0;
    g.window_set = window_opt->count() > 0;

    try {
        AppConfig cfg = g.resolve();
        const fs::path out_dir = g.out_dir;

        if (*cmd_ingest) {
            std::vector<InteractionEvent> all;
            for (const auto& input : ingest_inputs) {
                auto log = load_event_file(input);
                all.insert(all.end(), log.events().begin(), log.events().end());
            }
            InteractionLog merged;
            merged.bulk_load(std::move(all));
            emit(out_dir / "events.csv", write_events_csv(merged.events()));
            std::cout << "events: " << merged.size() << "\n";
        } else if (*cmd_analyze) {
            auto log = load_event_file(in_analyze);
            Timestamp t = at_analyze >= 0 ? at_analyze : default_at(log);
            auto snap = snapshot(log, t, cfg.snapshot);
            emit(out_dir / "snapshot.json", write_snapshot_json(snap));
            emit(out_dir / "metrics.csv", write_metrics_csv(snap));
        } else if (*cmd_comm) {
            auto log = load_event_file(in_comm);
            Timestamp t = at_comm >= 0 ? at_comm : default_at(log);
            if (comm_windows < 1) throw Error(ErrorCode::BadConfig, "--windows must be >= 1");

            std::vector<std::vector<Group>> per_window;
            for (int i = comm_windows - 1; i >= 0; --i) {
                Timestamp ti = t - static_cast<Timestamp>(i) * cfg.snapshot.window_seconds;
                TimeWindow span{ti - cfg.snapshot.lookback(), ti};
                auto relations = derive_relations(log.window(span), cfg.snapshot.relation, ti);
                auto groups = cpm_communities(relations, cfg.snapshot.cpm_k, ti);
                for (auto& grp : groups)
                    grp.subject_matter = group_subject_matter(log, grp, span);
                per_window.push_back(std::move(groups));
            }
            emit(out_dir / "groups.json", write_groups_json(per_window.back()));
            if (comm_windows > 1) {
                std::vector<std::pair<std::string, std::vector<GroupEvolutionEvent>>> evolution;
                for (std::size_t i = 1; i < per_window.size(); ++i)
                    evolution.emplace_back(std::to_string(i),
                                           track_evolution(per_window[i - 1], per_window[i]));
                emit(out_dir / "evolution.csv", write_evolution_csv(evolution));
            }
        } else if (*cmd_pred) {
            auto log = load_event_file(in_pred);
            Timestamp t = at_pred >= 0 ? at_pred : default_at(log);
            LinkModel model = cfg.link_model;
            if (!pred_model.empty()) {
                auto parsed = parse_link_model(pred_model);
                if (!parsed) throw Error(ErrorCode::BadConfig, "unknown model " + pred_model);
                model = *parsed;
            }
            CandidatePolicy policy = cfg.link_policy;
            if (!pred_policy.empty()) {
                if (pred_policy == "foaf") policy = CandidatePolicy::Foaf;
                else if (pred_policy == "all_non_edges") policy = CandidatePolicy::AllNonEdges;
                else throw Error(ErrorCode::BadConfig, "unknown policy " + pred_policy);
            }
            std::size_t k = pred_topk > 0 ? pred_topk : cfg.link_topk;

            TimeWindow span{t - cfg.snapshot.lookback(), t};
            auto train = derive_relations(log.window(span), cfg.snapshot.relation, t);
            auto ranked = predict_topk(train, model, k, policy);
            emit(out_dir / "predictions.csv", write_predictions_csv(ranked));

            if (holdout_pred >= 0) {
                TimeWindow later{holdout_pred - cfg.snapshot.lookback(), holdout_pred};
                auto test =
                    derive_relations(log.window(later), cfg.snapshot.relation, holdout_pred);
                GraphView train_view(train);
                EdgeSet appeared;
                for (const auto& [key, e] : test.edges()) {
                    auto pair = key.first < key.second
                                    ? std::make_pair(key.first, key.second)
                                    : std::make_pair(key.second, key.first);
                    int u = train_view.index_of(pair.first);
                    int v = train_view.index_of(pair.second);
                    bool known = u >= 0 && v >= 0;
                    bool existing = false;
                    if (known)
                        existing = std::binary_search(train_view.undirected[u].begin(),
                                                      train_view.undirected[u].end(), v);
                    if (!existing) appeared.insert(pair);
                }
                auto quality = evaluate_prediction(train, appeared, model, k, policy);
                std::string eval_json = "{\n  \"model\": \"" + std::string(to_string(model)) +
                                        "\",\n  \"topk\": " + std::to_string(k) +
                                        ",\n  \"appeared_edges\": " +
                                        std::to_string(appeared.size()) +
                                        ",\n  \"precision_at_k\": " +
                                        format_double(quality.precision_at_k) +
                                        ",\n  \"recall_at_k\": " +
                                        format_double(quality.recall_at_k) + "\n}\n";
                emit(out_dir / "prediction_eval.json", eval_json);
            }
        } else if (*cmd_roles) {
            auto log = load_event_file(in_roles);
            Timestamp t = at_roles >= 0 ? at_roles : default_at(log);
            auto snap = snapshot(log, t, cfg.snapshot);
            emit(out_dir / "roles.csv", write_roles_csv(snap));
            emit(out_dir / "thresholds.json", write_thresholds_json(snap.thresholds_used));
        } else if (*cmd_sim) {
            auto log = load_event_file(in_sim);
            Timestamp t0 = at_sim >= 0 ? at_sim : default_at(log);
            SimConfig sim = cfg.sim;
            if (sim_steps > 0) sim.steps = sim_steps;
            auto result = run(log, t0, sim);
            emit(out_dir / "synthetic_events.csv", write_events_csv(result.synthetic.events()));
            auto predicted = merge_history(log, t0, result.synthetic);
            emit(out_dir / "predicted_events.csv", write_events_csv(predicted.events()));
            emit(out_dir / "trajectory.csv",
                 trajectory_csv(result.trajectory, t0, sim.snapshot.window_seconds));
            emit(out_dir / "final_snapshot.json", write_snapshot_json(result.final_snapshot));
        } else if (*cmd_cal) {
            auto log = load_event_file(in_cal);
            Timestamp split = cal_split;
            if (split < 0) {
                Timestamp lo = log.min_time(), hi = log.max_time() + 1;
                split = lo + static_cast<Timestamp>(cal_frac * static_cast<double>(hi - lo));
            }
            CalibrationOptions opts = cfg.calibration;
            if (cal_rounds >= 0) opts.max_rounds = cal_rounds;
            auto result = calibration_loop(log, split, cfg.sim, opts);
            emit(out_dir / "best_config.json", write_sim_config_json(result.best));
            emit(out_dir / "calibration_history.csv", history_csv(result));
            std::cout << "best holdout l1: " << format_double(result.best_l1) << "\n";
        } else if (*cmd_cmp) {
            auto observed = load_event_file(cmp_observed);
            auto predicted = load_event_file(cmp_predicted);
            // default to the end of observed coverage; beyond it there is
            // nothing real to compare against
            Timestamp t = cmp_at >= 0 ? cmp_at : default_at(observed);
            ComparisonReport report;
            if (cmp_scope == "all") {
                report = compare_logs(observed, predicted, t, cfg.snapshot);
            } else if (cmp_scope == "new") {
                if (cmp_tinit < 0)
                    throw Error(ErrorCode::BadConfig, "--scope new requires --t-init");
                report = compare_new_entities(observed, predicted, cmp_tinit, t, cfg.snapshot);
            } else {
                throw Error(ErrorCode::BadConfig, "unknown scope " + cmp_scope);
            }
            report.config_echo = cfg.echo_json();
            emit(out_dir / "report.json", emit_report(report, ReportFormat::Json));
            std::cout << "l1 distance: " << format_double(report.l1_distance) << "\n";
        } else if (*cmd_report) {
            auto report = read_report_json(read_text_file(in_report));
            bool all = report_format == "all";
            if (all || report_format == "json")
                emit(out_dir / "report.json", emit_report(report, ReportFormat::Json));
            if (all || report_format == "csv")
                emit(out_dir / "report.csv", emit_report(report, ReportFormat::Csv));
            if (all || report_format == "svg")
                emit(out_dir / "report.svg", emit_report(report, ReportFormat::Svg));
            if (!all && report_format != "json" && report_format != "csv" &&
                report_format != "svg")
                throw Error(ErrorCode::BadConfig, "unknown format " + report_format);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
