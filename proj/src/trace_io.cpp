#include "mcburst/trace_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "mcburst/errors.hpp"
#include "mcburst/rng.hpp"
#include "mcburst/text.hpp"

namespace mcburst {

namespace {

constexpr std::string_view kHeader = "seq,tx_ms,latency_ms";

double parse_double_field(std::string_view field, std::size_t line_no,
                          const char* name) {
    double value = 0.0;
    auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size() ||
        !std::isfinite(value)) {
        throw ParseError(line_no, std::string("non-numeric ") + name + " field: '" +
                                      std::string(field) + "'");
    }
    return value;
}

std::uint64_t parse_seq_field(std::string_view field, std::size_t line_no) {
    std::uint64_t value = 0;
    auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
        throw ParseError(line_no,
                         "non-numeric seq field: '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace

LatencyTrace parse_trace(std::istream& in, std::string label, double period_ms) {
    LatencyTrace trace;
    trace.interface_label = std::move(label);
    trace.period_ms = period_ms;

    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!header_seen) {
            if (line != kHeader) {
                throw ParseError(line_no, "expected header '" +
                                              std::string(kHeader) + "'");
            }
            header_seen = true;
            continue;
        }
        std::string_view row = line;
        auto c1 = row.find(',');
        auto c2 = (c1 == std::string_view::npos) ? c1 : row.find(',', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
            row.find(',', c2 + 1) != std::string_view::npos) {
            throw ParseError(line_no, "expected 3 comma-separated fields");
        }

        LatencyRecord rec;
        rec.seq_no = parse_seq_field(row.substr(0, c1), line_no);
        rec.tx_ms = parse_double_field(row.substr(c1 + 1, c2 - c1 - 1), line_no,
                                       "tx_ms");
        std::string_view lat = row.substr(c2 + 1);
        if (!lat.empty()) {
            double v = parse_double_field(lat, line_no, "latency_ms");
            if (v < 0.0) {
                throw ParseError(line_no, "negative latency");
            }
            rec.latency_ms = v;
        }

        if (!trace.records.empty() && rec.seq_no <= trace.records.back().seq_no) {
            throw IntegrityError("seq_no not strictly increasing at line " +
                                 std::to_string(line_no) + " (seq " +
                                 std::to_string(rec.seq_no) + " after " +
                                 std::to_string(trace.records.back().seq_no) + ")");
        }
        trace.records.push_back(rec);
    }
    if (!header_seen) {
        throw ParseError(line_no, "missing trace header");
    }
    return trace;
}

void serialize_trace(const LatencyTrace& trace, std::ostream& out) {
    out << kHeader << '\n';
    for (const LatencyRecord& rec : trace.records) {
        out << rec.seq_no << ',' << format_shortest(rec.tx_ms) << ',';
        if (rec.latency_ms) {
            out << format_shortest(*rec.latency_ms);
        }
        out << '\n';
    }
}

LatencyTrace generate_synthetic_trace(const SyntheticTraceConfig& cfg) {
    validate(cfg.ge);
    if (cfg.n == 0) {
        throw IntegrityError("synthetic trace length must be >= 1");
    }
    if (!(cfg.good_latency.lo <= cfg.good_latency.hi) ||
        !(cfg.bad_latency.lo <= cfg.bad_latency.hi) ||
        !(cfg.good_latency.hi < cfg.bad_latency.lo)) {
        throw DomainError(
            "latency intervals must satisfy good.lo <= good.hi < bad.lo <= bad.hi");
    }
    if (!(cfg.loss_prob_bad >= 0.0 && cfg.loss_prob_bad <= 1.0)) {
        throw DomainError("loss_prob_bad outside [0,1]");
    }

    const SteadyState pi = steady_state(cfg.ge);
    SplitMix64 rng(cfg.seed);

    LatencyTrace trace;
    trace.interface_label = "synthetic";
    trace.period_ms = 100.0;
    trace.records.reserve(cfg.n);

    auto draw_uniform = [&rng](const UniformLatency& u) {
        return u.lo + (u.hi - u.lo) * rng.next_double();
    };

    bool bad = rng.next_double() < pi.pi_b;
    for (std::uint64_t t = 0; t < cfg.n; ++t) {
        if (t > 0) {
            const double u = rng.next_double();
            bad = bad ? (u >= cfg.ge.r) : (u < cfg.ge.p);
        }
        LatencyRecord rec;
        rec.seq_no = t;
        rec.tx_ms = static_cast<double>(t) * trace.period_ms;
        if (bad) {
            if (rng.next_double() < cfg.loss_prob_bad) {
                // dropped; latency stays absent
            } else {
                rec.latency_ms = draw_uniform(cfg.bad_latency);
            }
        } else {
            rec.latency_ms = draw_uniform(cfg.good_latency);
        }
        trace.records.push_back(rec);
    }
    return trace;
}

}  // namespace mcburst
