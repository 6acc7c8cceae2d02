#include "mcburst/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mcburst/errors.hpp"

namespace mcburst {

namespace {

void validate_profile(const DiversityProfile& profile) {
    if (profile.interfaces.empty()) {
        throw DomainError("diversity profile needs at least one interface");
    }
    for (const GeParams& ge : profile.interfaces) {
        validate(ge);
    }
}

/// 1 - prod(1 - r_i): probability of leaving the all-bad joint state.
double all_bad_exit_probability(const DiversityProfile& profile) {
    double stay = 1.0;
    for (const GeParams& ge : profile.interfaces) {
        stay *= 1.0 - ge.r;
    }
    return 1.0 - stay;
}

}  // namespace

BinarySeries combine_min(std::span<const BinarySeries> series_list) {
    if (series_list.empty()) {
        throw DomainError("combine_min needs at least one series");
    }
    const std::size_t n = series_list.front().size();
    for (const BinarySeries& s : series_list) {
        if (s.size() != n) {
            throw DomainError("combine_min: series lengths differ");
        }
    }
    BinarySeries out;
    out.origin = "min-combined";
    out.values.assign(n, 1);
    for (const BinarySeries& s : series_list) {
        for (std::size_t t = 0; t < n; ++t) {
            out.values[t] = std::min(out.values[t], s.values[t]);
        }
    }
    return out;
}

ProductChain build_product_chain(const DiversityProfile& profile) {
    validate_profile(profile);
    const std::size_t n = profile.size();
    if (n > 8) {
        throw DomainError("product chain capped at 8 interfaces (2^N states)");
    }
    ProductChain chain;
    chain.n_interfaces = n;
    chain.n_states = std::size_t{1} << n;
    chain.all_bad_index = chain.n_states - 1;
    chain.transition.assign(chain.n_states * chain.n_states, 0.0);

    for (std::size_t from = 0; from < chain.n_states; ++from) {
        for (std::size_t to = 0; to < chain.n_states; ++to) {
            double prob = 1.0;
            for (std::size_t i = 0; i < n; ++i) {
                const bool from_bad = (from >> i) & 1;
                const bool to_bad = (to >> i) & 1;
                const GeParams& ge = profile.interfaces[i];
                double step;
                if (from_bad) {
                    step = to_bad ? 1.0 - ge.r : ge.r;
                } else {
                    step = to_bad ? ge.p : 1.0 - ge.p;
                }
                prob *= step;
            }
            chain.transition[from * chain.n_states + to] = prob;
        }
    }
    return chain;
}

std::vector<double> stationary_distribution(const ProductChain& chain) {
    const std::size_t n = chain.n_states;
    std::vector<double> pi(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n, 0.0);
    for (int iter = 0; iter < 100000; ++iter) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t from = 0; from < n; ++from) {
            const double mass = pi[from];
            for (std::size_t to = 0; to < n; ++to) {
                next[to] += mass * chain.at(from, to);
            }
        }
        double delta = 0.0;
        for (std::size_t s = 0; s < n; ++s) {
            delta += std::abs(next[s] - pi[s]);
        }
        pi.swap(next);
        if (delta < 1e-15) {
            break;
        }
    }
    return pi;
}

double diversity_bad_burst_pmf(const DiversityProfile& profile, std::uint64_t k) {
    validate_profile(profile);
    if (k == 0) {
        throw DomainError("burst length k must be >= 1");
    }
    const double q = all_bad_exit_probability(profile);
    if (q == 0.0) {
        throw DegenerateChainError("every r_i = 0: infinite all-bad sojourn");
    }
    return std::pow(1.0 - q, static_cast<double>(k - 1)) * q;
}

GoodBurstLaw::GoodBurstLaw(const DiversityProfile& profile) {
    const ProductChain chain = build_product_chain(profile);
    for (const GeParams& ge : profile.interfaces) {
        if (ge.p == 0.0) {
            throw DegenerateChainError(
                "p = 0 on some interface: all-bad state unreachable");
        }
    }
    const double q = all_bad_exit_probability(profile);
    if (q == 0.0) {
        throw DegenerateChainError("all-bad state cannot be left");
    }

    const std::size_t bad = chain.all_bad_index;
    dim_ = chain.n_states - 1;  // interior = every joint state but all-bad

    // Entry distribution: the all-bad exit row, renormalized over interior
    // states. Interior state s keeps its index (all interior indices < bad).
    alpha_.resize(dim_);
    for (std::size_t s = 0; s < dim_; ++s) {
        alpha_[s] = chain.at(bad, s) / q;
    }

    interior_.resize(dim_ * dim_);
    exit_to_bad_.resize(dim_);
    for (std::size_t from = 0; from < dim_; ++from) {
        for (std::size_t to = 0; to < dim_; ++to) {
            interior_[from * dim_ + to] = chain.at(from, to);
        }
        exit_to_bad_[from] = chain.at(from, bad);
    }
}

double GoodBurstLaw::pmf(std::uint64_t k) const {
    if (k == 0) {
        throw DomainError("burst length k must be >= 1");
    }
    std::vector<double> v = alpha_;
    std::vector<double> next(dim_);
    for (std::uint64_t step = 1; step < k; ++step) {
        for (std::size_t to = 0; to < dim_; ++to) {
            double acc = 0.0;
            for (std::size_t from = 0; from < dim_; ++from) {
                acc += v[from] * interior_[from * dim_ + to];
            }
            next[to] = acc;
        }
        v.swap(next);
    }
    return std::inner_product(v.begin(), v.end(), exit_to_bad_.begin(), 0.0);
}

std::vector<double> GoodBurstLaw::pmf_upto(std::uint64_t k_max) const {
    std::vector<double> out;
    out.reserve(k_max);
    std::vector<double> v = alpha_;
    std::vector<double> next(dim_);
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        out.push_back(
            std::inner_product(v.begin(), v.end(), exit_to_bad_.begin(), 0.0));
        for (std::size_t to = 0; to < dim_; ++to) {
            double acc = 0.0;
            for (std::size_t from = 0; from < dim_; ++from) {
                acc += v[from] * interior_[from * dim_ + to];
            }
            next[to] = acc;
        }
        v.swap(next);
    }
    return out;
}

double GoodBurstLaw::mean() const {
    // mean = alpha * (I - Q)^{-1} * 1; solve (I - Q)^T x = alpha and sum? No:
    // solve (I - Q) y = 1, then mean = alpha . y.
    const std::size_t n = dim_;
    std::vector<double> a(n * n);
    std::vector<double> y(n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] = (i == j ? 1.0 : 0.0) - interior_[i * n + j];
        }
    }
    // Gaussian elimination with partial pivoting; n <= 255.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(a[row * n + col]) > std::abs(a[pivot * n + col])) {
                pivot = row;
            }
        }
        if (a[pivot * n + col] == 0.0) {
            throw DegenerateChainError("singular phase-type system");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[pivot * n + j], a[col * n + j]);
            }
            std::swap(y[pivot], y[col]);
        }
        const double inv = 1.0 / a[col * n + col];
        for (std::size_t row = col + 1; row < n; ++row) {
            const double factor = a[row * n + col] * inv;
            if (factor == 0.0) {
                continue;
            }
            for (std::size_t j = col; j < n; ++j) {
                a[row * n + j] -= factor * a[col * n + j];
            }
            y[row] -= factor * y[col];
        }
    }
    for (std::size_t col = n; col-- > 0;) {
        double acc = y[col];
        for (std::size_t j = col + 1; j < n; ++j) {
            acc -= a[col * n + j] * y[j];
        }
        y[col] = acc / a[col * n + col];
    }
    return std::inner_product(alpha_.begin(), alpha_.end(), y.begin(), 0.0);
}

double diversity_good_burst_pmf(const DiversityProfile& profile, std::uint64_t k) {
    return GoodBurstLaw(profile).pmf(k);
}

double diversity_stationary_error(const DiversityProfile& profile) {
    validate_profile(profile);
    double product = 1.0;
    for (const GeParams& ge : profile.interfaces) {
        product *= steady_state(ge).pi_b;
    }
    return product;
}

BurstMeans diversity_mean_burst_lengths(const DiversityProfile& profile) {
    validate_profile(profile);
    const double q = all_bad_exit_probability(profile);
    if (q == 0.0) {
        throw DegenerateChainError("every r_i = 0: infinite all-bad sojourn");
    }
    BurstMeans means;
    means.mean_bad = 1.0 / q;
    means.mean_good = GoodBurstLaw(profile).mean();
    return means;
}

}  // namespace mcburst
