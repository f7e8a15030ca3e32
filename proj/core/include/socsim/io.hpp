#ifndef SOCSIM_IO_HPP_
#define SOCSIM_IO_HPP_

#include <filesystem>
#include <string>

#include "socsim/linkpred.hpp"
#include "socsim/snapshot.hpp"

namespace socsim {

/// Event CSV: header `time,initiator,receiver,kind,strength,tags`, tags being
/// `;`-separated tokens. The JSONL form carries the same field names.
std::vector<InteractionEvent> read_events_csv(const std::string& text);
std::vector<InteractionEvent> read_events_jsonl(const std::string& text);
std::string write_events_csv(std::span<const InteractionEvent> events);

/// Loads by extension (.csv or .jsonl/.ndjson/.json) and bulk-sorts.
InteractionLog load_event_file(const std::filesystem::path& path);
void save_event_file(const std::filesystem::path& path, const InteractionLog& log);

/// Canonical snapshot JSON: object keys sorted, entities sorted, shortest
/// round-trip number formatting. Equal snapshots serialize byte-identically.
std::string write_snapshot_json(const SocietySnapshot& s);

/// Metric CSV: `entity,metric,value` sorted by (metric, entity).
std::string write_metrics_csv(const SocietySnapshot& s);

/// Groups JSON: array of {id, members, phi, subject_matter, born_at}.
std::string write_groups_json(const std::vector<Group>& groups);

/// Evolution CSV: `window,kind,from,to,jaccard` (ids `;`-joined).
std::string write_evolution_csv(
    const std::vector<std::pair<std::string, std::vector<GroupEvolutionEvent>>>& windows);

/// Roles CSV: entity, five activity columns, dominant, category.
std::string write_roles_csv(const SocietySnapshot& s);

/// Threshold sidecar JSON echoed next to every role export.
std::string write_thresholds_json(const RoleThresholds& t);

/// Predictions CSV: `model,u,v,score,rank`.
std::string write_predictions_csv(std::span<const CandidatePair> ranked);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

/// Shortest round-trip decimal form; deterministic across runs.
std::string format_double(double v);

} // namespace socsim

#endif
