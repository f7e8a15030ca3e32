// Regenerates the bundled synthetic portal dataset.

#include <iostream>

#include <CLI11.hpp>

#include "socsim/fixture.hpp"
#include "socsim/io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"generate the synthetic portal event fixture"};
    socsim::fixture::Options opts;
    std::string out = "data/fixture_events.csv";
    app.add_option("--entities", opts.entities)->capture_default_str();
    app.add_option("--windows", opts.windows)->capture_default_str();
    app.add_option("--window-seconds", opts.window_seconds)->capture_default_str();
    app.add_option("--start-time", opts.start_time)->capture_default_str();
    app.add_option("--seed", opts.seed)->capture_default_str();
    app.add_option("--initial-presence", opts.initial_presence)->capture_default_str();
    app.add_option("--cluster-size", opts.cluster_size)->capture_default_str();
    app.add_option("--out", out)->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    auto log = socsim::fixture::generate(opts);
    socsim::write_text_file(out, socsim::write_events_csv(log.events()));
    std::cout << "wrote " << out << " (" << log.size() << " events)\n";
    return 0;
}
