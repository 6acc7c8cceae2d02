#include "mcburst/series.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include "mcburst/errors.hpp"

namespace mcburst {

double BinarySeries::error_fraction() const {
    if (values.empty()) {
        return 0.0;
    }
    std::uint64_t ones = 0;
    for (std::uint8_t v : values) {
        ones += v;
    }
    return static_cast<double>(ones) / static_cast<double>(values.size());
}

void write_rle(const BinarySeries& series, std::ostream& out) {
    out << "state,length\n";
    std::size_t i = 0;
    while (i < series.values.size()) {
        std::size_t j = i;
        while (j < series.values.size() && series.values[j] == series.values[i]) {
            ++j;
        }
        out << static_cast<int>(series.values[i]) << ',' << (j - i) << '\n';
        i = j;
    }
}

BinarySeries read_rle(std::istream& in, std::string origin) {
    BinarySeries series;
    series.origin = std::move(origin);
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!header_seen) {
            if (line != "state,length") {
                throw ParseError(line_no, "expected header 'state,length'");
            }
            header_seen = true;
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw ParseError(line_no, "expected 'state,length'");
        }
        int state = 0;
        std::uint64_t length = 0;
        auto r1 = std::from_chars(line.data(), line.data() + comma, state);
        auto r2 = std::from_chars(line.data() + comma + 1,
                                  line.data() + line.size(), length);
        if (r1.ec != std::errc{} || r1.ptr != line.data() + comma ||
            r2.ec != std::errc{} || r2.ptr != line.data() + line.size() ||
            (state != 0 && state != 1) || length == 0) {
            throw ParseError(line_no, "invalid run-length row: " + line);
        }
        series.values.insert(series.values.end(), length,
                             static_cast<std::uint8_t>(state));
    }
    return series;
}

}  // namespace mcburst
