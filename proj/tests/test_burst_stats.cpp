#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "mcburst/burst_stats.hpp"
#include "mcburst/errors.hpp"
#include "mcburst/montecarlo.hpp"
#include "mcburst/rng.hpp"

using namespace mcburst;

TEST_CASE("extract_runs: boundary runs are censored") {
    const BurstHistogram h = extract_runs(BinarySeries{{0, 0, 1, 1, 1, 0}, ""});
    CHECK(h.bad_counts == std::map<std::uint64_t, std::uint64_t>{{3, 1}});
    CHECK(h.good_counts.empty());
    CHECK(h.truncated_good == std::vector<std::uint64_t>{2, 1});
    CHECK(h.truncated_bad.empty());
    CHECK(h.series_length == 6);
}

TEST_CASE("extract_runs: constant series is a single censored run") {
    const BurstHistogram h = extract_runs(BinarySeries{{0, 0, 0, 0, 0}, ""});
    CHECK(h.good_counts.empty());
    CHECK(h.bad_counts.empty());
    CHECK(h.truncated_good == std::vector<std::uint64_t>{5});
    CHECK(h.truncated_bad.empty());
}

TEST_CASE("extract_runs: [1,0,1]") {
    const BurstHistogram h = extract_runs(BinarySeries{{1, 0, 1}, ""});
    CHECK(h.good_counts == std::map<std::uint64_t, std::uint64_t>{{1, 1}});
    CHECK(h.truncated_bad == std::vector<std::uint64_t>{1, 1});
    CHECK_THROWS_AS(extract_runs(BinarySeries{{}, ""}), IntegrityError);
}

TEST_CASE("extract_runs: run lengths reassemble the series length") {
    SplitMix64 rng(41);
    for (int rep = 0; rep < 100; ++rep) {
        BinarySeries s;
        const std::size_t n = 1 + (rng.next_u64() % 300);
        for (std::size_t t = 0; t < n; ++t) {
            s.values.push_back(rng.next_double() < 0.3 ? 1 : 0);
        }
        const BurstHistogram h = extract_runs(s);
        std::uint64_t total = 0;
        for (const auto& [len, count] : h.good_counts) {
            total += len * count;
        }
        for (const auto& [len, count] : h.bad_counts) {
            total += len * count;
        }
        for (std::uint64_t len : h.truncated_good) {
            total += len;
        }
        for (std::uint64_t len : h.truncated_bad) {
            total += len;
        }
        CHECK(total == s.size());
        CHECK(h.truncated_good.size() + h.truncated_bad.size() <= 2);
    }
}

TEST_CASE("burst_ccdf: hand counts") {
    BurstHistogram h;
    h.bad_counts = {{1, 3}, {2, 1}};
    const auto ccdf = burst_ccdf(h, State::bad);
    REQUIRE(ccdf.size() == 2);
    CHECK(ccdf[0].first == 1);
    CHECK(ccdf[0].second == doctest::Approx(1.0));
    CHECK(ccdf[1].second == doctest::Approx(0.25));
}

TEST_CASE("burst_ccdf: point mass stays at 1 up to its length") {
    BurstHistogram h;
    h.good_counts = {{5, 10}};
    const auto ccdf = burst_ccdf(h, State::good);
    REQUIRE(ccdf.size() == 5);
    for (const auto& [k, tail] : ccdf) {
        CHECK(tail == doctest::Approx(1.0));
    }
}

TEST_CASE("burst_ccdf: no interior runs is an explicit error") {
    const BurstHistogram h = extract_runs(BinarySeries{{0, 0, 0}, ""});
    CHECK_THROWS_AS(burst_ccdf(h, State::good), InsufficientDataError);
    // Opting into truncated runs makes the censored run usable.
    const auto ccdf = burst_ccdf(h, State::good, true);
    CHECK(ccdf.size() == 3);
}

TEST_CASE("burst_ccdf: simulated single chain matches the geometric tail") {
    const BinarySeries s = simulate_ge({0.05, 0.9}, 10'000'000, 314159,
                                       InitialStatePolicy::stationary);
    const auto ccdf = burst_ccdf(extract_runs(s), State::bad);
    for (const auto& [k, tail] : ccdf) {
        if (k > 20) {
            break;
        }
        CHECK(std::abs(tail - std::pow(0.1, static_cast<double>(k - 1))) < 0.01);
    }
}

TEST_CASE("interval_reliability: hand cases") {
    CHECK(interval_reliability(BinarySeries{{0, 0, 0, 0}, ""}, 3) ==
          doctest::Approx(1.0));
    CHECK(interval_reliability(BinarySeries{{0, 0, 1, 0}, ""}, 2) ==
          doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(interval_reliability(BinarySeries{{0, 1}, ""}, 0),
                    DomainError);
    CHECK_THROWS_AS(interval_reliability(BinarySeries{{0, 1}, ""}, 3),
                    DomainError);
}

TEST_CASE("interval_reliability: window 1 complements the error rate; "
          "monotone in window") {
    SplitMix64 rng(43);
    for (int rep = 0; rep < 50; ++rep) {
        BinarySeries s;
        const std::size_t n = 5 + (rng.next_u64() % 200);
        for (std::size_t t = 0; t < n; ++t) {
            s.values.push_back(rng.next_double() < 0.25 ? 1 : 0);
        }
        CHECK(interval_reliability(s, 1) + s.error_fraction() ==
              doctest::Approx(1.0).epsilon(1e-15));
        double prev = 1.0;
        for (std::uint64_t w = 1; w <= std::min<std::uint64_t>(n, 12); ++w) {
            const double cur = interval_reliability(s, w);
            CHECK(cur <= prev + 1e-15);
            prev = cur;
        }
    }
}

TEST_CASE("interval_reliability converges to pi_g * (1-p)^(w-1)") {
    const GeParams ge{0.05, 0.9};
    const BinarySeries s =
        simulate_ge(ge, 10'000'000, 2718281, InitialStatePolicy::stationary);
    const double pi_g = steady_state(ge).pi_g;
    for (std::uint64_t w = 1; w <= 20; ++w) {
        const double analytic =
            pi_g * std::pow(1.0 - ge.p, static_cast<double>(w - 1));
        CHECK(std::abs(interval_reliability(s, w) - analytic) < 0.01);
    }
}

TEST_CASE("burst csv export") {
    BurstHistogram h;
    h.bad_counts = {{1, 3}, {2, 1}};
    std::ostringstream out;
    write_burst_csv(h, State::bad, out);
    CHECK(out.str() == "k,count,pmf,ccdf\n1,3,0.75,1\n2,1,0.25,0.25\n");
}
