#include "mcburst/burst_stats.hpp"

#include <ostream>

#include "mcburst/errors.hpp"
#include "mcburst/text.hpp"

namespace mcburst {

namespace {

/// Merged view of interior counts plus (optionally) the censored runs.
std::map<std::uint64_t, std::uint64_t> selected_counts(
    const BurstHistogram& hist, State state, bool include_truncated) {
    std::map<std::uint64_t, std::uint64_t> counts =
        (state == State::bad) ? hist.bad_counts : hist.good_counts;
    if (include_truncated) {
        const auto& truncated = (state == State::bad) ? hist.truncated_bad
                                                      : hist.truncated_good;
        for (std::uint64_t length : truncated) {
            ++counts[length];
        }
    }
    return counts;
}

}  // namespace

BurstHistogram extract_runs(const BinarySeries& series) {
    if (series.values.empty()) {
        throw IntegrityError("cannot extract runs from an empty series");
    }
    BurstHistogram hist;
    hist.series_length = series.size();

    struct Run {
        std::uint8_t state;
        std::uint64_t length;
    };
    std::vector<Run> runs;
    std::size_t i = 0;
    while (i < series.values.size()) {
        std::size_t j = i;
        while (j < series.values.size() && series.values[j] == series.values[i]) {
            ++j;
        }
        runs.push_back({series.values[i], j - i});
        i = j;
    }

    for (std::size_t idx = 0; idx < runs.size(); ++idx) {
        const Run& run = runs[idx];
        const bool censored = (idx == 0) || (idx == runs.size() - 1);
        if (censored) {
            auto& truncated =
                run.state ? hist.truncated_bad : hist.truncated_good;
            truncated.push_back(run.length);
        } else {
            auto& counts = run.state ? hist.bad_counts : hist.good_counts;
            ++counts[run.length];
        }
    }
    return hist;
}

std::vector<std::pair<std::uint64_t, double>> burst_ccdf(
    const BurstHistogram& hist, State state, bool include_truncated) {
    const auto counts = selected_counts(hist, state, include_truncated);
    if (counts.empty()) {
        throw InsufficientDataError(
            std::string("no interior ") +
            (state == State::bad ? "bad" : "good") + " runs observed");
    }
    std::uint64_t total = 0;
    for (const auto& [length, count] : counts) {
        total += count;
    }
    const std::uint64_t max_length = counts.rbegin()->first;

    std::vector<std::pair<std::uint64_t, double>> ccdf;
    ccdf.reserve(max_length);
    std::uint64_t at_least = total;  // runs with length >= k
    auto it = counts.begin();
    for (std::uint64_t k = 1; k <= max_length; ++k) {
        ccdf.emplace_back(k, static_cast<double>(at_least) /
                                 static_cast<double>(total));
        while (it != counts.end() && it->first == k) {
            at_least -= it->second;
            ++it;
        }
    }
    return ccdf;
}

double mean_burst_length(const BurstHistogram& hist, State state,
                         bool include_truncated) {
    const auto counts = selected_counts(hist, state, include_truncated);
    if (counts.empty()) {
        throw InsufficientDataError(
            std::string("no interior ") +
            (state == State::bad ? "bad" : "good") + " runs observed");
    }
    double weighted = 0.0;
    double total = 0.0;
    for (const auto& [length, count] : counts) {
        weighted += static_cast<double>(length) * static_cast<double>(count);
        total += static_cast<double>(count);
    }
    return weighted / total;
}

double interval_reliability(const BinarySeries& series, std::uint64_t window) {
    if (window < 1 || window > series.size()) {
        throw DomainError("window must lie in [1, series length]");
    }
    // An error-free window lies entirely inside a maximal zero run; a zero
    // run of length L contains max(0, L - w + 1) window starts.
    std::uint64_t clean_windows = 0;
    std::size_t i = 0;
    while (i < series.values.size()) {
        if (series.values[i] != 0) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < series.values.size() && series.values[j] == 0) {
            ++j;
        }
        const std::uint64_t run = j - i;
        if (run >= window) {
            clean_windows += run - window + 1;
        }
        i = j;
    }
    const std::uint64_t total_windows = series.size() - window + 1;
    return static_cast<double>(clean_windows) /
           static_cast<double>(total_windows);
}

void write_burst_csv(const BurstHistogram& hist, State state, std::ostream& out,
                     bool include_truncated) {
    const auto counts = selected_counts(hist, state, include_truncated);
    const auto ccdf = burst_ccdf(hist, state, include_truncated);
    std::uint64_t total = 0;
    for (const auto& [length, count] : counts) {
        total += count;
    }
    out << "k,count,pmf,ccdf\n";
    for (const auto& [k, tail] : ccdf) {
        auto it = counts.find(k);
        const std::uint64_t count = (it != counts.end()) ? it->second : 0;
        out << k << ',' << count << ','
            << format_shortest(static_cast<double>(count) /
                               static_cast<double>(total))
            << ',' << format_shortest(tail) << '\n';
    }
}

}  // namespace mcburst
