#ifndef SOCSIM_EVAL_HPP_
#define SOCSIM_EVAL_HPP_

#include "socsim/simulator.hpp"

namespace socsim {

enum class PopulationScope { All, NewEntitiesOnly };
const char* to_string(PopulationScope scope);

/// Observed-vs-predicted role distribution comparison.
struct ComparisonReport {
    RoleDistribution observed;
    RoleDistribution predicted;
    double l1_distance = 0.0; // sum of |observed - predicted|, in [0, 2]
    std::array<double, kUserCategoryCount> per_category_delta{};
    PopulationScope population_scope = PopulationScope::All;
    std::string config_echo; // JSON text of the effective parameters
};

ComparisonReport compare_distributions(const RoleDistribution& observed,
                                       const RoleDistribution& predicted);

/// Whole-population comparison of two logs analyzed at t_eval.
ComparisonReport compare_logs(const InteractionLog& observed, const InteractionLog& predicted,
                              Timestamp t_eval, const SnapshotConfig& cfg);

/// Restricts both populations to entities first seen after t_init, then
/// compares role distributions at t_eval. Throws EmptyCohort.
ComparisonReport compare_new_entities(const InteractionLog& observed,
                                      const InteractionLog& predicted, Timestamp t_init,
                                      Timestamp t_eval, const SnapshotConfig& cfg);

struct CalibrationRound {
    int round = 0;
    double activity_decay = 0.0;
    double observer_total = 0.0;
    double action_weight_scale = 0.0;
    double holdout_l1 = 0.0;
    bool accepted = false;
};

struct CalibrationResult {
    SimConfig best;
    double best_l1 = 0.0;
    std::vector<CalibrationRound> history; // accepted rounds are non-increasing in l1
};

struct CalibrationOptions {
    int max_rounds = 2;
    int eval_runs = 3; // holdout score = mean l1 over this many derived seeds
    std::vector<double> decay_grid = {0.8, 0.9, 0.95};
    std::vector<double> observer_grid = {0.5, 1.0, 2.0};
    std::vector<double> scale_grid = {0.8, 0.9, 1.0, 1.1, 1.25};
};

/// Deterministic coordinate descent: configure on [*, split), simulate the
/// holdout span, score against the observed end state, accept only strict
/// improvements. Throws DegenerateSplit.
CalibrationResult calibration_loop(const InteractionLog& observed, Timestamp split_time,
                                   const SimConfig& initial, const CalibrationOptions& opts);

enum class ReportFormat { Csv, Json, Svg };

/// Serialized report artifact. SVG renders observed-vs-predicted grouped
/// bars; CSV carries one row per category after a config-echo comment line.
std::string emit_report(const ComparisonReport& r, ReportFormat format);

/// Inverse of emit_report(Json). Throws ParseError / CategoryMismatch.
ComparisonReport read_report_json(const std::string& text);

} // namespace socsim

#endif
