#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "mcburst/gilbert_elliott.hpp"
#include "mcburst/series.hpp"

namespace mcburst {

/// Run-length counts of a binary series. The first and last runs touch a
/// boundary, so their true length is unknown; they are kept apart as
/// censored observations and excluded from the count maps.
struct BurstHistogram {
    std::map<std::uint64_t, std::uint64_t> good_counts;  // interior runs
    std::map<std::uint64_t, std::uint64_t> bad_counts;   // interior runs
    std::vector<std::uint64_t> truncated_good;           // at most 2 entries
    std::vector<std::uint64_t> truncated_bad;
    std::uint64_t series_length = 0;
};

BurstHistogram extract_runs(const BinarySeries& series);

/// Empirical CCDF points (k, P(L >= k)) for one state, k = 1..max length.
/// Interior runs only unless include_truncated is set. Throws
/// InsufficientDataError when the selected state has no usable runs.
std::vector<std::pair<std::uint64_t, double>> burst_ccdf(
    const BurstHistogram& hist, State state, bool include_truncated = false);

/// Mean run length for one state, same censoring convention as burst_ccdf.
double mean_burst_length(const BurstHistogram& hist, State state,
                         bool include_truncated = false);

/// Fraction of the (length - window + 1) sliding windows that contain no
/// error. window = 1 reduces to 1 - error rate.
double interval_reliability(const BinarySeries& series, std::uint64_t window);

/// Text export `k,count,pmf,ccdf`, one row per observed length.
void write_burst_csv(const BurstHistogram& hist, State state, std::ostream& out,
                     bool include_truncated = false);

}  // namespace mcburst
