#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "mcburst/configs.hpp"
#include "mcburst/diversity.hpp"
#include "mcburst/errors.hpp"
#include "mcburst/rng.hpp"

using namespace mcburst;

namespace {

DiversityProfile single(const GeParams& ge) { return {{ge}, {"a"}}; }

DiversityProfile pair_of(const GeParams& a, const GeParams& b) {
    return {{a, b}, {"a", "b"}};
}

}  // namespace

TEST_CASE("combine_min: elementwise minimum") {
    const BinarySeries a{{1, 0, 1}, "a"};
    const BinarySeries b{{1, 1, 0}, "b"};
    const std::vector<BinarySeries> both{a, b};
    CHECK(combine_min(both).values == std::vector<std::uint8_t>{1, 0, 0});

    const BinarySeries zeros{{0, 0, 0}, "z"};
    const std::vector<BinarySeries> with_zero{a, zeros};
    CHECK(combine_min(with_zero).values == std::vector<std::uint8_t>{0, 0, 0});

    const std::vector<BinarySeries> self{a, a};
    CHECK(combine_min(self).values == a.values);

    const BinarySeries shorter{{1}, "s"};
    const std::vector<BinarySeries> mismatch{a, shorter};
    CHECK_THROWS_AS(combine_min(mismatch), DomainError);
    CHECK_THROWS_AS(combine_min(std::vector<BinarySeries>{}), DomainError);
}

TEST_CASE("combine_min error fraction never exceeds any input") {
    SplitMix64 rng(31);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 1 + (rng.next_u64() % 200);
        std::vector<BinarySeries> inputs;
        double best = 1.0;
        for (int i = 0; i < 1 + static_cast<int>(rng.next_u64() % 3); ++i) {
            BinarySeries s;
            for (std::size_t t = 0; t < n; ++t) {
                s.values.push_back(rng.next_double() < 0.4 ? 1 : 0);
            }
            best = std::min(best, s.error_fraction());
            inputs.push_back(std::move(s));
        }
        CHECK(combine_min(inputs).error_fraction() <= best);
    }
}

TEST_CASE("build_product_chain: N = 1 is the single-interface matrix") {
    const GeParams lte = lte_params();
    const ProductChain chain = build_product_chain(single(lte));
    CHECK(chain.n_states == 2);
    CHECK(chain.at(0, 0) == doctest::Approx(1.0 - lte.p));
    CHECK(chain.at(0, 1) == doctest::Approx(lte.p));
    CHECK(chain.at(1, 0) == doctest::Approx(lte.r));
    CHECK(chain.at(1, 1) == doctest::Approx(1.0 - lte.r));
}

TEST_CASE("build_product_chain: uniform two-interface chain") {
    const ProductChain chain =
        build_product_chain(pair_of({0.5, 0.5}, {0.5, 0.5}));
    CHECK(chain.n_states == 4);
    for (std::size_t from = 0; from < 4; ++from) {
        for (std::size_t to = 0; to < 4; ++to) {
            CHECK(chain.at(from, to) == doctest::Approx(0.25));
        }
    }
}

TEST_CASE("build_product_chain: size cap") {
    DiversityProfile profile;
    for (int i = 0; i < 9; ++i) {
        profile.interfaces.push_back({0.1, 0.5});
        profile.labels.push_back("x");
    }
    CHECK_THROWS_AS(build_product_chain(profile), DomainError);
}

TEST_CASE("product chain rows sum to 1; stationary all-bad equals the "
          "product of pi_b") {
    SplitMix64 rng(33);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t n = 1 + (rng.next_u64() % 3);
        DiversityProfile profile;
        for (std::size_t i = 0; i < n; ++i) {
            profile.interfaces.push_back({0.05 + 0.9 * rng.next_double(),
                                          0.05 + 0.9 * rng.next_double()});
            profile.labels.push_back("x");
        }
        const ProductChain chain = build_product_chain(profile);
        for (std::size_t from = 0; from < chain.n_states; ++from) {
            double row = 0.0;
            for (std::size_t to = 0; to < chain.n_states; ++to) {
                row += chain.at(from, to);
            }
            CHECK(std::abs(row - 1.0) < 1e-12);
        }
        const std::vector<double> pi = stationary_distribution(chain);
        CHECK(std::abs(pi[chain.all_bad_index] -
                       diversity_stationary_error(profile)) < 1e-10);
    }
}

TEST_CASE("diversity_bad_burst_pmf: reductions and hand values") {
    const GeParams lte = lte_params();
    for (std::uint64_t k : {1u, 2u, 5u, 17u}) {
        CHECK(diversity_bad_burst_pmf(single(lte), k) ==
              doctest::Approx(burst_length_pmf(lte, State::bad, k)));
    }
    const DiversityProfile p = pair_of({0.2, 0.5}, {0.3, 0.5});
    CHECK(diversity_bad_burst_pmf(p, 1) == doctest::Approx(0.75));
    CHECK(diversity_bad_burst_pmf(p, 2) == doctest::Approx(0.1875));
    CHECK_THROWS_AS(diversity_bad_burst_pmf(pair_of({0.2, 0.0}, {0.3, 0.0}), 1),
                    DegenerateChainError);
}

TEST_CASE("2x LTE halves the mean bad burst") {
    const DiversityProfile two_lte = pair_of(lte_params(), lte_params());
    const BurstMeans m = diversity_mean_burst_lengths(two_lte);
    CHECK(m.mean_bad == doctest::Approx(2.2268).epsilon(1e-3));
    const double single_mean = mean_burst_lengths(lte_params()).mean_bad;
    CHECK(m.mean_bad / single_mean == doctest::Approx(0.574).epsilon(5e-3));
}

TEST_CASE("diversity_good_burst_pmf: N = 1 reduces to the geometric law") {
    const GeParams lte = lte_params();
    for (std::uint64_t k : {1u, 2u, 9u, 40u}) {
        CHECK(diversity_good_burst_pmf(single(lte), k) ==
              doctest::Approx(burst_length_pmf(lte, State::good, k))
                  .epsilon(1e-12));
    }
}

TEST_CASE("diversity_good_burst_pmf: uniform chain collapses to geometric") {
    const DiversityProfile p = pair_of({0.5, 0.5}, {0.5, 0.5});
    CHECK(diversity_good_burst_pmf(p, 1) == doctest::Approx(0.25));
    CHECK(diversity_good_burst_pmf(p, 2) == doctest::Approx(0.1875));
    CHECK_THROWS_AS(diversity_good_burst_pmf(pair_of({0.0, 0.5}, {0.5, 0.5}), 1),
                    DegenerateChainError);
}

TEST_CASE("2x LTE mean good burst and ten-fold ratio") {
    const DiversityProfile two_lte = pair_of(lte_params(), lte_params());
    const BurstMeans m = diversity_mean_burst_lengths(two_lte);
    CHECK(m.mean_good == doctest::Approx(528.6).epsilon(5e-3));
    const double ratio = m.mean_good / mean_burst_lengths(lte_params()).mean_good;
    CHECK(ratio == doctest::Approx(9.4).epsilon(0.01));
}

TEST_CASE("diversity_stationary_error: Table configurations") {
    CHECK(diversity_stationary_error(single(lte_params())) ==
          doctest::Approx(0.064772).epsilon(1e-4));
    CHECK(diversity_stationary_error(pair_of(wifi_params(), wifi_params())) ==
          doctest::Approx(0.0026660).epsilon(1e-3));
    CHECK(diversity_stationary_error(pair_of(lte_params(), wifi_params())) ==
          doctest::Approx(0.0033444).epsilon(1e-3));
}

TEST_CASE("both burst pmfs sum to 1 for the Table configurations") {
    const std::vector<DiversityProfile> profiles{
        single(lte_params()), single(wifi_params()),
        pair_of(lte_params(), lte_params()),
        pair_of(wifi_params(), wifi_params()),
        pair_of(lte_params(), wifi_params()),
        single(ur_lte_params()), single(ur_wifi_params())};
    for (const DiversityProfile& profile : profiles) {
        double bad_sum = 0.0;
        for (std::uint64_t k = 1; k <= 500; ++k) {
            bad_sum += diversity_bad_burst_pmf(profile, k);
        }
        CHECK(std::abs(bad_sum - 1.0) < 1e-9);

        // Good bursts are much longer; extend the horizon until the phase
        // -type tail is negligible.
        const std::vector<double> pmf = GoodBurstLaw(profile).pmf_upto(40000);
        double good_sum = 0.0;
        for (double v : pmf) {
            good_sum += v;
        }
        CHECK(std::abs(good_sum - 1.0) < 1e-9);
    }
}

TEST_CASE("renewal consistency across a random parameter sweep") {
    SplitMix64 rng(37);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + (rng.next_u64() % 2);
        DiversityProfile profile;
        for (std::size_t i = 0; i < n; ++i) {
            profile.interfaces.push_back({0.01 + 0.98 * rng.next_double(),
                                          0.01 + 0.98 * rng.next_double()});
            profile.labels.push_back("x");
        }
        const BurstMeans m = diversity_mean_burst_lengths(profile);
        const double occupancy = m.mean_bad / (m.mean_good + m.mean_bad);
        CHECK(std::abs(occupancy - diversity_stationary_error(profile)) < 1e-9);
    }
}
