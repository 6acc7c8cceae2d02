#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mcburst {

/// A 0/1 error time series X(t). 1 = error (bad state), 0 = success.
struct BinarySeries {
    std::vector<std::uint8_t> values;
    std::string origin;  // trace label or simulation descriptor

    std::size_t size() const noexcept { return values.size(); }

    /// Fraction of ones (stationary error-rate estimate).
    double error_fraction() const;
};

/// Run-length-encoded text export, `state,length` per row. Keeps
/// multi-million-step series compact on disk.
void write_rle(const BinarySeries& series, std::ostream& out);

/// Inverse of write_rle. Lines starting with '#' are skipped.
BinarySeries read_rle(std::istream& in, std::string origin);

}  // namespace mcburst
