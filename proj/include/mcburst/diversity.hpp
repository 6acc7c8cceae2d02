#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mcburst/gilbert_elliott.hpp"
#include "mcburst/series.hpp"

namespace mcburst {

/// An N-interface packet-cloning configuration.
struct DiversityProfile {
    std::vector<GeParams> interfaces;
    std::vector<std::string> labels;

    std::size_t size() const noexcept { return interfaces.size(); }
};

/// Joint chain of N independent Gilbert-Elliott interfaces. State encoding:
/// bit i of the state index is interface i (0 = good, 1 = bad), interface 0
/// in the least-significant bit. The all-bad state is index 2^N - 1.
struct ProductChain {
    std::size_t n_interfaces = 0;
    std::size_t n_states = 0;
    std::vector<double> transition;  // row-major n_states x n_states
    std::size_t all_bad_index = 0;

    double at(std::size_t from, std::size_t to) const {
        return transition[from * n_states + to];
    }
};

/// Elementwise min over equal-length series: the diversity process fails
/// only where every interface fails. Throws DomainError on length mismatch
/// or an empty list.
BinarySeries combine_min(std::span<const BinarySeries> series_list);

/// Explicit 2^N-state joint transition matrix. N is capped at 8.
ProductChain build_product_chain(const DiversityProfile& profile);

/// Stationary distribution of a product chain by power iteration. Serves
/// as the numeric oracle for the closed-form products.
std::vector<double> stationary_distribution(const ProductChain& chain);

/// All-bad sojourn pmf: geometric with exit probability
/// q = 1 - prod(1 - r_i). Throws DegenerateChainError when every r_i = 0.
double diversity_bad_burst_pmf(const DiversityProfile& profile, std::uint64_t k);

/// Phase-type law of the good-burst (non-all-bad sojourn) length.
/// Entry distribution alpha = renormalized all-bad exit row; pmf computed
/// by iterated vector-matrix products against the interior sub-matrix.
class GoodBurstLaw {
public:
    explicit GoodBurstLaw(const DiversityProfile& profile);

    double pmf(std::uint64_t k) const;

    /// pmf over k = 1..k_max in one sweep (one power-iteration pass).
    std::vector<double> pmf_upto(std::uint64_t k_max) const;

    /// Exact mean alpha * (I - Q)^{-1} * 1 via a dense linear solve.
    double mean() const;

private:
    std::size_t dim_;                 // interior states (all but all-bad)
    std::vector<double> alpha_;       // entry distribution over interior states
    std::vector<double> interior_;    // row-major dim x dim sub-matrix Q
    std::vector<double> exit_to_bad_; // per-interior-state exit column
};

double diversity_good_burst_pmf(const DiversityProfile& profile, std::uint64_t k);

/// Stationary all-bad probability prod(pi_B_i); equals the end-to-end
/// error probability of packet cloning under independence.
double diversity_stationary_error(const DiversityProfile& profile);

/// Closed-form mean sojourns: mean_bad = 1/q (geometric), mean_good from
/// the phase-type law.
BurstMeans diversity_mean_burst_lengths(const DiversityProfile& profile);

}  // namespace mcburst
