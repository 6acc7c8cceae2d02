#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "mcburst/series.hpp"

namespace mcburst {

enum class State : std::uint8_t { good = 0, bad = 1 };

/// Two-state Gilbert-Elliott chain parameters.
/// p = P(good -> bad), r = P(bad -> good).
struct GeParams {
    double p = 0.0;
    double r = 0.0;
};

/// Throws DomainError unless both probabilities lie in [0, 1].
void validate(const GeParams& ge);

struct SteadyState {
    double pi_g = 0.0;
    double pi_b = 0.0;
};

/// Transition counts over consecutive symbol pairs of a binary series.
/// Only symbols with a successor enter the denominators, so the final
/// symbol is excluded and n0 + n1 == length - 1.
struct TransitionCounts {
    std::uint64_t n0 = 0;
    std::uint64_t n1 = 0;
    std::uint64_t n01 = 0;
    std::uint64_t n10 = 0;
};

/// Stationary distribution (pi_g, pi_b) = (r, p) / (p + r).
/// Throws DegenerateChainError when p = r = 0.
SteadyState steady_state(const GeParams& ge);

/// Solves pi_b = p / (p + r) for r. Throws DomainError when pi_b = 0 and
/// InfeasiblePairError when the solution falls outside [0, 1].
double r_for_target(double p, double pi_b);

TransitionCounts count_transitions(const BinarySeries& series);

/// Yajnik-style estimator: p_hat = n01/n0, r_hat = n10/n1.
/// Throws EstimatorUndefinedError when either state never occurs among
/// the symbols that have a successor.
GeParams estimate_params(const BinarySeries& series);

/// Sojourn-length pmf of one state: geometric with the state's exit
/// probability. P(L = k) = (1 - exit)^(k-1) * exit.
double burst_length_pmf(const GeParams& ge, State state, std::uint64_t k);

struct BurstMeans {
    double mean_good = 0.0;
    double mean_bad = 0.0;
};

/// (1/p, 1/r). Throws DegenerateChainError when either exit probability is 0.
BurstMeans mean_burst_lengths(const GeParams& ge);

/// Small structured document `{label, p, r, deadline_ms, source}` used as
/// the interchange between the `estimate` and `simulate` CLI subcommands.
struct ParamsDoc {
    std::string label;
    GeParams ge;
    std::optional<double> deadline_ms;
    std::string source;  // free-form provenance, e.g. "estimate --trace x.csv"
};

void write_params_doc(const ParamsDoc& doc, std::ostream& out);
ParamsDoc read_params_doc(std::istream& in);

}  // namespace mcburst
