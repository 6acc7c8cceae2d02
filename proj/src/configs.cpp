#include "mcburst/configs.hpp"

namespace mcburst {

namespace {

// Equal-reliability deadline shared by the baseline configurations.
constexpr double kEqualReliabilityDeadlineMs = 38.25;

NamedConfig make(std::string name, std::vector<GeParams> params,
                 std::vector<std::string> labels, double deadline_ms) {
    NamedConfig cfg;
    cfg.name = std::move(name);
    cfg.profile.interfaces = std::move(params);
    cfg.profile.labels = std::move(labels);
    cfg.deadline_ms = deadline_ms;
    return cfg;
}

}  // namespace

GeParams lte_params() { return {0.0178516, 0.257756}; }
GeParams wifi_params() { return {0.0515509, 0.946863}; }
GeParams ur_lte_params() { return {0.00450365, 0.897892}; }
GeParams ur_wifi_params() { return {0.00394534, 0.774916}; }

std::optional<NamedConfig> find_config(const std::string& name) {
    const double d = kEqualReliabilityDeadlineMs;
    if (name == "lte") {
        return make("lte", {lte_params()}, {"LTE"}, d);
    }
    if (name == "wifi") {
        return make("wifi", {wifi_params()}, {"WiFi"}, d);
    }
    if (name == "2xlte") {
        return make("2xlte", {lte_params(), lte_params()}, {"LTE", "LTE"}, d);
    }
    if (name == "2xwifi") {
        return make("2xwifi", {wifi_params(), wifi_params()}, {"WiFi", "WiFi"}, d);
    }
    if (name == "lte+wifi") {
        return make("lte+wifi", {lte_params(), wifi_params()}, {"LTE", "WiFi"}, d);
    }
    if (name == "ur-lte") {
        return make("ur-lte", {ur_lte_params()}, {"UR LTE"}, 42.4);
    }
    if (name == "ur-wifi") {
        return make("ur-wifi", {ur_wifi_params()}, {"UR WiFi"}, 92.9);
    }
    return std::nullopt;
}

std::vector<NamedConfig> baseline_configs() {
    return {*find_config("lte"), *find_config("wifi"), *find_config("2xlte"),
            *find_config("2xwifi"), *find_config("lte+wifi")};
}

std::vector<NamedConfig> extended_configs() {
    std::vector<NamedConfig> configs = baseline_configs();
    configs.push_back(*find_config("ur-lte"));
    configs.push_back(*find_config("ur-wifi"));
    return configs;
}

}  // namespace mcburst
