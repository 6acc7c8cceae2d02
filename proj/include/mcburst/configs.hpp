#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcburst/diversity.hpp"

namespace mcburst {

/// A named interface-diversity configuration with the deadline its
/// parameters were estimated at.
struct NamedConfig {
    std::string name;
    DiversityProfile profile;
    double deadline_ms = 0.0;
};

/// Single-interface parameter sets estimated at the 38.25 ms
/// equal-reliability deadline.
GeParams lte_params();
GeParams wifi_params();

/// Ultra-reliable (0.995 success rate) single-interface parameter sets,
/// estimated at 42.4 ms (LTE) and 92.9 ms (Wi-Fi).
GeParams ur_lte_params();
GeParams ur_wifi_params();

/// Lookup by CLI name: lte, wifi, 2xlte, 2xwifi, lte+wifi, ur-lte, ur-wifi.
std::optional<NamedConfig> find_config(const std::string& name);

/// The five equal-reliability configurations, in reporting order.
std::vector<NamedConfig> baseline_configs();

/// Baseline plus the two ultra-reliable single interfaces.
std::vector<NamedConfig> extended_configs();

}  // namespace mcburst
