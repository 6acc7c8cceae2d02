#include "mcburst/latency_reliability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "mcburst/errors.hpp"
#include "mcburst/text.hpp"

namespace mcburst {

EmpiricalCdf empirical_cdf(const LatencyTrace& trace) {
    if (trace.records.empty()) {
        throw IntegrityError("cannot build a CDF from an empty trace");
    }
    std::vector<double> latencies;
    latencies.reserve(trace.records.size());
    std::uint64_t lost = 0;
    for (const LatencyRecord& rec : trace.records) {
        if (rec.latency_ms) {
            latencies.push_back(*rec.latency_ms);
        } else {
            ++lost;  // latency +inf: counts in the total, never in the numerator
        }
    }
    std::sort(latencies.begin(), latencies.end());

    EmpiricalCdf cdf;
    cdf.total_count = trace.records.size();
    cdf.lost_count = lost;
    const double total = static_cast<double>(cdf.total_count);
    std::size_t i = 0;
    while (i < latencies.size()) {
        std::size_t j = i;
        while (j < latencies.size() && latencies[j] == latencies[i]) {
            ++j;
        }
        cdf.points.push_back({latencies[i], static_cast<double>(j) / total});
        i = j;
    }
    return cdf;
}

double reliability_at(const EmpiricalCdf& cdf, double l) {
    if (!(l >= 0.0)) {
        throw DomainError("deadline must be >= 0");
    }
    // Last breakpoint with latency <= l (right-continuous step function).
    auto it = std::upper_bound(
        cdf.points.begin(), cdf.points.end(), l,
        [](double value, const CdfPoint& pt) { return value < pt.latency_ms; });
    if (it == cdf.points.begin()) {
        return 0.0;
    }
    return std::prev(it)->cumulative;
}

double error_probability(const EmpiricalCdf& cdf, double l) {
    return 1.0 - reliability_at(cdf, l);
}

double e2e_error_probability(std::span<const double> per_interface) {
    if (per_interface.empty()) {
        throw DomainError("need at least one interface error probability");
    }
    double product = 1.0;
    for (double pe : per_interface) {
        if (!(pe >= 0.0 && pe <= 1.0)) {
            throw DomainError("error probability outside [0,1]");
        }
        product *= pe;
    }
    return product;
}

double deadline_for(const EmpiricalCdf& cdf, double target) {
    if (!(target > 0.0 && target <= 1.0)) {
        throw DomainError("target reliability must lie in (0,1]");
    }
    for (const CdfPoint& pt : cdf.points) {
        if (pt.cumulative >= target) {
            return pt.latency_ms;
        }
    }
    throw UnattainableTargetError(
        "target " + format_sig6(target) + " exceeds reachable reliability " +
        format_sig6(cdf.final_cumulative()) +
        (cdf.lost_count > 0 ? " (trace has lost packets)" : ""));
}

Crossing crossing_deadline(const EmpiricalCdf& a, const EmpiricalCdf& b) {
    if (a.points.empty() || b.points.empty()) {
        throw IntegrityError("crossing_deadline needs two non-empty CDFs");
    }
    std::vector<double> breakpoints;
    breakpoints.reserve(a.points.size() + b.points.size());
    for (const CdfPoint& pt : a.points) {
        breakpoints.push_back(pt.latency_ms);
    }
    for (const CdfPoint& pt : b.points) {
        breakpoints.push_back(pt.latency_ms);
    }
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()),
                      breakpoints.end());

    Crossing best{0.0, 0.0, std::numeric_limits<double>::infinity()};
    for (double l : breakpoints) {
        const double fa = reliability_at(a, l);
        const double fb = reliability_at(b, l);
        const double gap = std::abs(fa - fb);
        if (gap < best.gap) {  // strict: ties keep the smallest l
            best = {l, 0.5 * (fa + fb), gap};
        }
    }
    return best;
}

BinarySeries loss_indicator(const LatencyTrace& trace, double l) {
    if (!(l >= 0.0)) {
        throw DomainError("deadline must be >= 0");
    }
    BinarySeries series;
    series.origin = trace.interface_label;
    series.values.reserve(trace.records.size());
    for (const LatencyRecord& rec : trace.records) {
        const bool failed = !rec.latency_ms || *rec.latency_ms > l;
        series.values.push_back(failed ? 1 : 0);
    }
    return series;
}

void write_cdf(const EmpiricalCdf& cdf, std::ostream& out) {
    out << "latency_ms,cumulative_probability\n";
    for (const CdfPoint& pt : cdf.points) {
        out << format_shortest(pt.latency_ms) << ','
            << format_shortest(pt.cumulative) << '\n';
    }
}

}  // namespace mcburst
