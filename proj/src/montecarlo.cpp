#include "mcburst/montecarlo.hpp"

#include <vector>

#include "mcburst/errors.hpp"
#include "mcburst/rng.hpp"

namespace mcburst {

std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                 std::uint32_t interface_index,
                                 std::uint32_t replication) {
    constexpr std::uint64_t kDomain = 0x6d635f6275727374ULL;  // "mc_burst"
    constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
    const std::uint64_t indices =
        static_cast<std::uint64_t>(interface_index) |
        (static_cast<std::uint64_t>(replication) << 32);
    return mix64(mix64(master_seed ^ kDomain) ^ indices ^ kGamma);
}

BinarySeries simulate_ge(const GeParams& ge, std::uint64_t steps,
                         std::uint64_t seed, InitialStatePolicy policy) {
    validate(ge);
    if (steps == 0) {
        throw DomainError("simulation needs at least one step");
    }
    SplitMix64 rng(seed);

    bool bad;
    switch (policy) {
        case InitialStatePolicy::stationary: {
            const SteadyState pi = steady_state(ge);  // throws when p = r = 0
            bad = rng.next_double() < pi.pi_b;
            break;
        }
        case InitialStatePolicy::forced_good:
            bad = false;
            break;
        case InitialStatePolicy::forced_bad:
            bad = true;
            break;
        default:
            throw DomainError("unknown initial-state policy");
    }

    BinarySeries series;
    series.origin = "simulate_ge";
    series.values.reserve(steps);
    series.values.push_back(bad ? 1 : 0);
    for (std::uint64_t t = 1; t < steps; ++t) {
        const double u = rng.next_double();
        bad = bad ? (u >= ge.r) : (u < ge.p);
        series.values.push_back(bad ? 1 : 0);
    }
    return series;
}

BinarySeries simulate_diversity(const SimulationSpec& spec,
                                std::uint32_t replication) {
    if (spec.profile.interfaces.empty()) {
        throw DomainError("simulation profile needs at least one interface");
    }
    std::vector<BinarySeries> streams;
    streams.reserve(spec.profile.size());
    for (std::size_t i = 0; i < spec.profile.size(); ++i) {
        const std::uint64_t seed = derive_stream_seed(
            spec.master_seed, static_cast<std::uint32_t>(i), replication);
        streams.push_back(simulate_ge(spec.profile.interfaces[i], spec.steps,
                                      seed, spec.policy));
    }
    BinarySeries out = combine_min(streams);
    out.origin = "simulate_diversity";
    return out;
}

}  // namespace mcburst
