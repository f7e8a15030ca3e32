#ifndef SOCSIM_CONFIG_HPP_
#define SOCSIM_CONFIG_HPP_

#include <filesystem>

#include "socsim/eval.hpp"
#include "socsim/linkpred.hpp"

namespace socsim {

/// Everything a pipeline run can be told from a config file. Defaults are the
/// documented ones; a config file overrides fields it names, command-line
/// flags override the file.
struct AppConfig {
    SnapshotConfig snapshot;
    SimConfig sim;
    CalibrationOptions calibration;
    LinkModel link_model = LinkModel::CommonNeighbours;
    CandidatePolicy link_policy = CandidatePolicy::Foaf;
    std::size_t link_topk = 50;

    /// One JSON object with every effective parameter, embedded in reports.
    std::string echo_json() const;
};

/// Parses the JSON config text. Unknown keys fail (config error), missing
/// keys keep defaults. Throws Error with code BadConfig.
AppConfig parse_config_json(const std::string& text);
AppConfig load_config_file(const std::filesystem::path& path);

/// Serialize a SimConfig (the tunable scalars) for calibrate output.
std::string write_sim_config_json(const SimConfig& cfg);

} // namespace socsim

#endif
