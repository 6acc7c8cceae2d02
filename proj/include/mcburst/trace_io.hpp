#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mcburst/gilbert_elliott.hpp"

namespace mcburst {

/// One probe packet. Absent latency means the packet was never received.
struct LatencyRecord {
    std::uint64_t seq_no = 0;
    double tx_ms = 0.0;
    std::optional<double> latency_ms;
};

/// Sequenced probe records for one interface. Records are sorted by
/// seq_no with no duplicates; timestamps are relative to trace start.
struct LatencyTrace {
    std::string interface_label;
    double period_ms = 100.0;
    std::vector<LatencyRecord> records;
};

/// Closed interval [lo, hi], sampled uniformly.
struct UniformLatency {
    double lo = 0.0;
    double hi = 0.0;
};

struct SyntheticTraceConfig {
    GeParams ge;                    // drives the hidden good/bad state
    UniformLatency good_latency;    // requires good_latency.hi < bad_latency.lo
    UniformLatency bad_latency;
    double loss_prob_bad = 0.0;     // bad-state packets dropped with this probability
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
};

/// Parses the `seq,tx_ms,latency_ms` trace format. Empty latency field =
/// lost packet. Throws ParseError (with line number) on malformed rows and
/// IntegrityError on duplicate or decreasing seq_no.
LatencyTrace parse_trace(std::istream& in, std::string label, double period_ms);

/// Canonical serialization of a trace (header + shortest round-trip
/// decimals). serialize(parse(t)) is byte-stable.
void serialize_trace(const LatencyTrace& trace, std::ostream& out);

/// Seeded synthetic trace: the hidden state evolves as a Gilbert-Elliott
/// chain started from its stationary distribution; latencies are drawn per
/// state, and bad-state packets may be dropped. Identical configs give
/// bit-identical traces.
LatencyTrace generate_synthetic_trace(const SyntheticTraceConfig& cfg);

}  // namespace mcburst
