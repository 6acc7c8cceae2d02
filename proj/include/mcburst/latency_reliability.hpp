#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "mcburst/series.hpp"
#include "mcburst/trace_io.hpp"

namespace mcburst {

struct CdfPoint {
    double latency_ms = 0.0;
    double cumulative = 0.0;
};

/// Step-function latency-reliability curve F(l) = Pr[L <= l]. Lost packets
/// count toward total_count but never toward the numerator, so the final
/// plateau encodes the loss rate.
struct EmpiricalCdf {
    std::vector<CdfPoint> points;  // sorted by latency, cumulative non-decreasing
    std::uint64_t total_count = 0;
    std::uint64_t lost_count = 0;

    double final_cumulative() const {
        return points.empty() ? 0.0 : points.back().cumulative;
    }
};

EmpiricalCdf empirical_cdf(const LatencyTrace& trace);

/// F(l), right-continuous: a breakpoint exactly at l is included.
double reliability_at(const EmpiricalCdf& cdf, double l);

/// 1 - F(l), the per-interface error probability at deadline l.
double error_probability(const EmpiricalCdf& cdf, double l);

/// Product of per-interface error probabilities (packet cloning over
/// independent interfaces).
double e2e_error_probability(std::span<const double> per_interface);

/// Smallest breakpoint latency l with F(l) >= target. Throws
/// UnattainableTargetError when the target exceeds the final cumulative
/// probability (e.g. because of losses).
double deadline_for(const EmpiricalCdf& cdf, double target);

struct Crossing {
    double latency_ms = 0.0;
    double reliability = 0.0;  // (F_a + F_b) / 2 at the crossing
    double gap = 0.0;          // |F_a - F_b| at the crossing
};

/// Scans the merged breakpoints of both curves and returns the smallest l
/// minimizing |F_a(l) - F_b(l)|. Exact equality is not required; empirical
/// step functions generally never coincide.
Crossing crossing_deadline(const EmpiricalCdf& a, const EmpiricalCdf& b);

/// Error indicator at deadline l: 1 where latency is absent or exceeds l
/// (strictly; latency == l is a success), else 0.
BinarySeries loss_indicator(const LatencyTrace& trace, double l);

/// Two-column export `latency_ms,cumulative_probability`, one breakpoint
/// per row.
void write_cdf(const EmpiricalCdf& cdf, std::ostream& out);

}  // namespace mcburst
