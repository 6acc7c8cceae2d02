#include "mcburst/gilbert_elliott.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "mcburst/errors.hpp"

namespace mcburst {

void validate(const GeParams& ge) {
    if (!(ge.p >= 0.0 && ge.p <= 1.0) || !(ge.r >= 0.0 && ge.r <= 1.0)) {
        throw DomainError("Gilbert-Elliott parameters must lie in [0,1], got p=" +
                          std::to_string(ge.p) + " r=" + std::to_string(ge.r));
    }
}

SteadyState steady_state(const GeParams& ge) {
    validate(ge);
    const double denom = ge.p + ge.r;
    if (denom == 0.0) {
        throw DegenerateChainError(
            "p = r = 0: no unique stationary distribution");
    }
    return {ge.r / denom, ge.p / denom};
}

double r_for_target(double p, double pi_b) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("p outside [0,1]");
    }
    if (!(pi_b > 0.0 && pi_b <= 1.0)) {
        throw DomainError("target pi_b must lie in (0,1]");
    }
    const double r = p / pi_b - p;
    if (r > 1.0) {
        throw InfeasiblePairError(
            "no r in [0,1] achieves pi_b=" + std::to_string(pi_b) +
            " for p=" + std::to_string(p));
    }
    return r;
}

TransitionCounts count_transitions(const BinarySeries& series) {
    if (series.size() < 2) {
        throw DomainError("series too short to count transitions");
    }
    TransitionCounts c;
    for (std::size_t t = 0; t + 1 < series.values.size(); ++t) {
        const std::uint8_t cur = series.values[t];
        const std::uint8_t next = series.values[t + 1];
        if (cur == 0) {
            ++c.n0;
            c.n01 += (next == 1);
        } else {
            ++c.n1;
            c.n10 += (next == 0);
        }
    }
    return c;
}

GeParams estimate_params(const BinarySeries& series) {
    const TransitionCounts c = count_transitions(series);
    if (c.n0 == 0) {
        throw EstimatorUndefinedError(
            "good state never observed: p estimator undefined");
    }
    if (c.n1 == 0) {
        throw EstimatorUndefinedError(
            "bad state never observed: r estimator undefined");
    }
    return {static_cast<double>(c.n01) / static_cast<double>(c.n0),
            static_cast<double>(c.n10) / static_cast<double>(c.n1)};
}

double burst_length_pmf(const GeParams& ge, State state, std::uint64_t k) {
    validate(ge);
    if (k == 0) {
        throw DomainError("burst length k must be >= 1");
    }
    const double exit = (state == State::bad) ? ge.r : ge.p;
    if (exit == 0.0) {
        throw DegenerateChainError("exit probability 0: infinite sojourn");
    }
    return std::pow(1.0 - exit, static_cast<double>(k - 1)) * exit;
}

BurstMeans mean_burst_lengths(const GeParams& ge) {
    validate(ge);
    if (ge.p == 0.0 || ge.r == 0.0) {
        throw DegenerateChainError("exit probability 0: infinite sojourn");
    }
    return {1.0 / ge.p, 1.0 / ge.r};
}

void write_params_doc(const ParamsDoc& doc, std::ostream& out) {
    nlohmann::json j;
    j["label"] = doc.label;
    j["p"] = doc.ge.p;
    j["r"] = doc.ge.r;
    if (doc.deadline_ms) {
        j["deadline_ms"] = *doc.deadline_ms;
    } else {
        j["deadline_ms"] = nullptr;
    }
    j["source"] = doc.source;
    out << j.dump(2) << '\n';
}

ParamsDoc read_params_doc(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("invalid params document: ") + e.what());
    }
    ParamsDoc doc;
    try {
        doc.label = j.at("label").get<std::string>();
        doc.ge.p = j.at("p").get<double>();
        doc.ge.r = j.at("r").get<double>();
        if (j.contains("deadline_ms") && !j["deadline_ms"].is_null()) {
            doc.deadline_ms = j["deadline_ms"].get<double>();
        }
        doc.source = j.value("source", "");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("invalid params document: ") + e.what());
    }
    validate(doc.ge);
    return doc;
}

}  // namespace mcburst
