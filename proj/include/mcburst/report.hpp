#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mcburst/configs.hpp"

namespace mcburst {

/// Aggregated analytic-vs-simulated results for one configuration. Every
/// simulated quantity carries the seed and step count that produced it.
struct RunReport {
    std::string config_name;
    double deadline_ms = 0.0;

    struct Interface {
        std::string label;
        double p = 0.0;
        double r = 0.0;
        double pi_b = 0.0;
    };
    std::vector<Interface> interfaces;

    double stationary_error = 0.0;         // analytic prod(pi_b)
    double simulated_error_fraction = 0.0;

    double analytic_mean_good = 0.0;
    double analytic_mean_bad = 0.0;
    double simulated_mean_good = 0.0;
    double simulated_mean_bad = 0.0;

    std::vector<std::uint64_t> reliability_windows;
    std::vector<double> interval_reliability;  // one per window

    std::uint64_t steps = 0;
    std::uint64_t seed = 0;  // the master seed; per-stream seeds derive from it
};

struct ReproduceOptions {
    int table = 1;  // 1 = equal-reliability set, 2 = adds UR single interfaces
    std::uint64_t steps = 10'000'000;
    std::uint64_t master_seed = 1;
    std::string out_dir;
    bool include_truncated = false;
    std::vector<std::uint64_t> reliability_windows = {1, 5, 10, 20, 50};
    std::string provenance;  // command line echoed into file headers
};

/// Runs one configuration: simulate, extract runs, compute analytic laws.
RunReport run_configuration(const NamedConfig& cfg, std::uint64_t steps,
                            std::uint64_t master_seed, bool include_truncated,
                            const std::vector<std::uint64_t>& windows);

/// Full reproduction pipeline: per-configuration simulated and analytic
/// burst CSV files plus a plain-text report. Deterministic: identical
/// options give byte-identical output trees.
std::vector<RunReport> reproduce(const ReproduceOptions& opts);

void write_report(const std::vector<RunReport>& reports, std::ostream& out);

}  // namespace mcburst
