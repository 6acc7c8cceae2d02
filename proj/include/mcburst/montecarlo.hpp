#pragma once

#include <cstdint>

#include "mcburst/diversity.hpp"
#include "mcburst/gilbert_elliott.hpp"
#include "mcburst/series.hpp"

namespace mcburst {

enum class InitialStatePolicy : std::uint8_t { stationary, forced_good, forced_bad };

struct SimulationSpec {
    DiversityProfile profile;
    std::uint64_t steps = 0;
    std::uint64_t master_seed = 0;
    std::uint32_t replications = 1;
    InitialStatePolicy policy = InitialStatePolicy::stationary;
};

/// Per-stream seed derivation, part of the reproducibility contract:
///   stream_seed = mix64(mix64(master_seed ^ C1) ^ (interface | rep << 32) ^ C2)
/// with C1 = 0x6d635f6275727374 ("mc_burst"), C2 = 0x9e3779b97f4a7c15.
/// Documented in the README; changing it invalidates published numbers.
std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                 std::uint32_t interface_index,
                                 std::uint32_t replication);

/// One realization of a single Gilbert-Elliott chain. Emits 1 in the bad
/// state. The stationary policy samples the first state from (pi_g, pi_b)
/// and requires p + r > 0. Identical arguments give identical output.
BinarySeries simulate_ge(const GeParams& ge, std::uint64_t steps,
                         std::uint64_t seed, InitialStatePolicy policy);

/// Independent per-interface realizations (seeds derived from the master
/// seed) followed by min-combining. Deterministic for a fixed spec.
BinarySeries simulate_diversity(const SimulationSpec& spec,
                                std::uint32_t replication = 0);

}  // namespace mcburst
